"""Exact colored Kauffman-bracket invariants of singular links.

Singular links are given as closed singular braids.  Values live in Q(A);
all arithmetic is exact.
"""

from .algebra import (
    A,
    InexactDivisionError,
    LaurentPoly,
    NotIntegral,
    RationalFn,
    as_laurent,
    coeff_C,
    coeff_D,
    delta,
    loop_value,
    q_binomial,
    q_pochhammer,
)
from .config import Bounds, bounds, get_bounds, set_bounds
from .invariant import (
    InvariantResult,
    IntegralityReport,
    closed_form_example1,
    closed_form_example2,
    closed_form_twist_vertex,
    connected_sum,
    connected_sum_check,
    evaluate,
    framing_correct,
    integrality_check,
)
from .oracle import cabled_bracket
from .singular import (
    SingularBraidWord,
    WordParseError,
    cabled_crossing,
    check_relations,
    parse_word,
    rho_hat,
    singular_vertex,
)
from .tl_diagram import BoundError, Matching, compose, cup_cap, enumerate_basis, identity
from .tl_element import TLElement, el_trace, jones_wenzl

__version__ = "0.1.0"
