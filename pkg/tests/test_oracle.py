import pytest

from singular_jones.algebra import LaurentPoly, RationalFn, delta
from singular_jones.invariant import evaluate, framing_correct
from singular_jones.oracle import OracleLimitError, cabled_bracket
from singular_jones.singular import parse_word

M = LaurentPoly.monomial


def test_plain_jones_trefoil():
    # color 1 is the ordinary bracket: -(A^2 + A^-2) V(A^-4) at zero framing
    res = cabled_bracket(parse_word("strands=2 s1 s1 s1"), 1)
    assert res.zero_framed == RationalFn(-M(-2) - M(-6) - M(-10) + M(-18))
    assert res.blackboard == res.zero_framed * M(9, -1)


@pytest.mark.parametrize("c", [1, 2, 3])
def test_unknot(c):
    assert cabled_bracket(parse_word("strands=1"), c).zero_framed == RationalFn(delta(c))


@pytest.mark.parametrize(
    "text",
    ["strands=2 s1", "strands=2 S1 S1 S1", "strands=2 s1 s1", "strands=2", "strands=3 s1 s2 s1"],
)
def test_matches_blackboard_evaluate(text):
    w = parse_word(text)
    assert cabled_bracket(w, 2).blackboard == evaluate(w, 2).value


def test_knot_zero_framing_agrees():
    w = parse_word("strands=2 S1 S1 S1")
    assert cabled_bracket(w, 2).zero_framed == framing_correct(evaluate(w, 2)).value


def test_link_framing_uses_self_crossings_only():
    hopf = cabled_bracket(parse_word("strands=2 s1 s1"), 2)
    assert hopf.components == 2
    # no self-crossings: blackboard and zero framing coincide for this diagram
    assert hopf.zero_framed == hopf.blackboard


def test_rejects_singular_words():
    with pytest.raises(ValueError):
        cabled_bracket(parse_word("strands=2 t1"), 2)


def test_budget(monkeypatch):
    monkeypatch.setenv("SINGULAR_JONES_ORACLE_MAX_CROSSINGS", "5")
    with pytest.raises(OracleLimitError):
        cabled_bracket(parse_word("strands=2 s1 s1"), 2)


def test_json():
    data = cabled_bracket(parse_word("strands=2 s1 s1 s1"), 2).to_json()
    assert data["components"] == 1 and data["cabled_crossings"] == 12
    assert RationalFn.from_json(data["zero_framed"]).is_laurent()
