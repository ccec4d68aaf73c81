"""The colored invariant [G]_{2n} of closed singular braids, plus checks.

``evaluate`` closes :func:`rho_hat` with the Markov trace.  The remaining
functions are closed forms and verification reports built on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .algebra import (
    LaurentPoly,
    NotIntegral,
    RationalFn,
    as_laurent,
    coeff_C,
    coeff_D,
    delta,
)
from .singular import (
    IdentityCheck,
    SingularBraidWord,
    cabled_crossing,
    colored_basis_element,
    rho_hat,
)
from .tl_element import TLElement, el_mul, el_trace, embed, jones_wenzl, right_close

__all__ = [
    "InvariantResult",
    "evaluate",
    "framing_correct",
    "curl_factor",
    "closed_form_example1",
    "closed_form_twist_vertex",
    "closed_form_example2",
    "connected_sum",
    "ConnectedSumReport",
    "connected_sum_check",
    "IntegralityReport",
    "integrality_check",
    "c_expansion_check",
    "curl_check",
    "summand_evidence",
]


@dataclass(frozen=True)
class InvariantResult:
    value: RationalFn
    color: int
    strands: int
    writhe: int
    singular_count: int = 0
    components: int = 1
    framing: str = "blackboard"
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "text": str(self.value),
            "color": self.color,
            "strands": self.strands,
            "writhe": self.writhe,
            "singular_count": self.singular_count,
            "components": self.components,
            "framing": self.framing,
            "warnings": list(self.warnings),
        }


def evaluate(word: SingularBraidWord, color: int) -> InvariantResult:
    """Blackboard-framed value of the closure of ``word`` with cables of ``color``."""
    value = el_trace(rho_hat(word, color))
    return InvariantResult(
        value, color, word.strands, word.writhe, word.singular_count, word.components
    )


def curl_factor(color: int) -> LaurentPoly:
    """Scalar picked up when a positive kink on a ``color``-cable is straightened."""
    sign = -1 if color % 2 else 1
    return LaurentPoly.monomial(color * color + 2 * color, sign)


def framing_correct(result: InvariantResult) -> InvariantResult:
    """Rescale a blackboard value to zero framing using the writhe."""
    if result.framing != "blackboard":
        raise ValueError("result is already framing-corrected")
    w = result.writhe
    value = result.value if w == 0 else result.value * RationalFn(1, curl_factor(result.color) ** w)
    warnings = result.warnings
    if result.singular_count:
        warnings = warnings + ("zero-framing correction applied to a word with singular letters",)
    if result.components > 1:
        warnings = warnings + ("writhe includes crossings between components; not the zero framing of a link",)
    return replace(result, value=value, framing="zero", warnings=warnings)


def _sign_power(n: int) -> int:
    return -1 if n % 2 else 1


def closed_form_example1(n: int) -> RationalFn:
    """(-1)^n A^(-3n^2-2n) * sum_i C_{n,i} Delta_{2n}^2 / Delta_{2n-i}."""
    d2n = RationalFn(delta(2 * n))
    total = sum(
        (RationalFn(coeff_C(n, i)) * d2n * d2n / RationalFn(delta(2 * n - i)) for i in range(n + 1)),
        RationalFn(0),
    )
    return total * LaurentPoly.monomial(-3 * n * n - 2 * n, _sign_power(n))


def closed_form_twist_vertex(n: int) -> RationalFn:
    """Same sum with Delta_{n+i} in the denominator.

    This is what the closure of ``t1 s1`` evaluates to: the i-th C
    coefficient multiplies the basis element with ``n + i`` turnbacks.
    """
    d2n = RationalFn(delta(2 * n))
    total = sum(
        (RationalFn(coeff_C(n, i)) * d2n * d2n / RationalFn(delta(n + i)) for i in range(n + 1)),
        RationalFn(0),
    )
    return total * LaurentPoly.monomial(-3 * n * n - 2 * n, _sign_power(n))


def closed_form_example2(n: int) -> RationalFn:
    """A^(-6n^2-4n) * sum_i D_{n,i} Delta_{2n}^2 / Delta_{n+i}."""
    d2n = RationalFn(delta(2 * n))
    total = sum(
        (RationalFn(coeff_D(n, i)) * d2n * d2n / RationalFn(delta(n + i)) for i in range(n + 1)),
        RationalFn(0),
    )
    return total * LaurentPoly.monomial(-6 * n * n - 4 * n)


# ---------------------------------------------------------------------------
# connected sums
# ---------------------------------------------------------------------------


def connected_sum(k1: SingularBraidWord, k2: SingularBraidWord) -> SingularBraidWord:
    """Braid connected sum: ``k2`` shifted so its first strand is the last strand of ``k1``."""
    total = k1.strands + k2.strands - 1
    left = SingularBraidWord(total, k1.letters)
    return left + k2.shifted(k1.strands - 1, total)


@dataclass(frozen=True)
class ConnectedSumReport:
    color: int
    lhs: RationalFn  # Delta * [K # K']
    rhs: RationalFn  # [K] * [K']

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "delta_times_sum": self.lhs.to_json(),
            "product": self.rhs.to_json(),
            "pass": self.passed,
        }


def connected_sum_check(k1: SingularBraidWord, k2: SingularBraidWord, color: int) -> ConnectedSumReport:
    both = evaluate(connected_sum(k1, k2), color).value
    lhs = both * RationalFn(delta(color))
    rhs = evaluate(k1, color).value * evaluate(k2, color).value
    return ConnectedSumReport(color, lhs, rhs)


# ---------------------------------------------------------------------------
# integrality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegralityReport:
    word: str
    color: int
    singular_count: int
    raw: RationalFn
    scaled: RationalFn
    integral: bool
    witness: LaurentPoly | None
    obstruction: LaurentPoly | None
    status: str  # "theorem" at color 2, "conjecture" otherwise

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "color": self.color,
            "singular_count": self.singular_count,
            "raw": self.raw.to_json(),
            "scaled": self.scaled.to_json(),
            "integral": self.integral,
            "witness": None if self.witness is None else self.witness.to_json(),
            "obstruction": None if self.obstruction is None else self.obstruction.to_json(),
            "status": self.status,
        }


def integrality_check(word: SingularBraidWord, color: int) -> IntegralityReport:
    """Scale the invariant by C_{2n,n}^k (k vertices) and test membership in Z[A, A^-1]."""
    raw = evaluate(word, color).value
    k = word.singular_count
    scaled = raw * RationalFn(coeff_C(color, color // 2) ** k)
    got = as_laurent(scaled)
    integral = not isinstance(got, NotIntegral)
    status = "theorem" if color == 2 else "conjecture"
    return IntegralityReport(
        str(word),
        color,
        k,
        raw,
        scaled,
        integral,
        got if integral else None,
        None if integral else got.denominator,
        status,
    )


@dataclass(frozen=True)
class SummandRecord:
    """One term C_{n,i} * S_{n,i} of a crossing expansion, with its integrality."""

    i: int
    coefficient: LaurentPoly
    skein_value: RationalFn
    product: RationalFn
    integral: bool

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "C": self.coefficient.to_json(),
            "S": self.skein_value.to_json(),
            "C_times_S": self.product.to_json(),
            "integral": self.integral,
        }


def summand_evidence(word: SingularBraidWord, color: int, position: int = 0) -> list[SummandRecord]:
    """Expand the crossing at ``position`` of ``word`` by the C-expansion.

    The letter must be classical.  ``S_{n,i}`` is the closure with that
    crossing replaced by the basis element whose two cables exchange ``i``
    strands across the middle; the records sum to ``evaluate(word)``.
    """
    kind, slot = word.letters[position]
    if kind == "sing":
        raise ValueError("the expanded letter must be a crossing")
    n = color
    width = color * word.strands
    pre = SingularBraidWord(word.strands, word.letters[:position])
    post = SingularBraidWord(word.strands, word.letters[position + 1 :])
    top = rho_hat(pre, color)
    bottom = rho_hat(post, color)
    out = []
    for i in range(n + 1):
        c = coeff_C(n, i)
        sides = i if kind == "neg" else n - i
        mid = embed(colored_basis_element(n, sides), width, (slot - 1) * color)
        s = el_trace(el_mul(el_mul(top, mid), bottom))
        prod = s * RationalFn(c)
        out.append(SummandRecord(i, c, s, prod, prod.is_laurent()))
    return out


# ---------------------------------------------------------------------------
# expansion identities in TL_{2n}
# ---------------------------------------------------------------------------


def c_expansion_check(n: int) -> list[IdentityCheck]:
    """Single and doubled n-colored crossings against the C and D expansions.

    With ``s`` resolving as ``A id + A^-1 e`` the negative crossing carries
    the C coefficients and the doubled positive crossing the D coefficients.
    """
    W = [colored_basis_element(n, j) for j in range(n + 1)]
    zero = TLElement.zero(2 * n)

    def combo(coeffs, index):
        return sum((W[index(i)] * coeffs(i) for i in range(n + 1)), zero)

    xp = cabled_crossing(n, 1)
    xm = cabled_crossing(n, -1)
    checks = [
        ("X- = sum C_{n,i} W_i", xm, combo(lambda i: coeff_C(n, i), lambda i: i)),
        ("X+ = sum bar(C_{n,i}) W_i", xp, combo(lambda i: coeff_C(n, i).bar(), lambda i: i)),
        ("X+ X+ = sum D_{n,i} W_{n-i}", xp * xp, combo(lambda i: coeff_D(n, i), lambda i: n - i)),
        ("X- X- = sum bar(D_{n,i}) W_{n-i}", xm * xm, combo(lambda i: coeff_D(n, i).bar(), lambda i: n - i)),
    ]
    return [IdentityCheck(f"{name}  [n={n}]", lhs == rhs) for name, lhs, rhs in checks]


def curl_check(color: int) -> list[IdentityCheck]:
    """Closing one cable of a cabled crossing gives a scalar multiple of f^(color)."""
    f = jones_wenzl(color)
    out = []
    for sign in (1, -1):
        factor = curl_factor(color) if sign > 0 else curl_factor(color).bar()
        closed = right_close(cabled_crossing(color, sign), color)
        out.append(
            IdentityCheck(
                f"kink {'+' if sign > 0 else '-'} on a {color}-cable = {factor} * f^({color})",
                closed == f * factor,
            )
        )
    return out
