import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singular_jones.algebra import (
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

M = LaurentPoly.monomial

polys = st.dictionaries(
    st.integers(-20, 20), st.integers(-(10**6), 10**6), max_size=6
).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rationals = st.builds(RationalFn, polys, nonzero_polys)
nonzero_rationals = st.builds(RationalFn, nonzero_polys, nonzero_polys)


def long_division(num: dict, den: dict) -> dict:
    """Schoolbook division of Laurent polynomials, highest term first (exact case)."""
    num = {e: c for e, c in num.items() if c}
    dhi = max(den)
    out = {}
    for _ in range(1000):
        if not num:
            return out
        hi = max(num)
        c, r = divmod(num[hi], den[dhi])
        assert r == 0
        e = hi - dhi
        out[e] = c
        for k, v in den.items():
            num[e + k] = num.get(e + k, 0) - c * v
            if num[e + k] == 0:
                del num[e + k]
    raise AssertionError("division did not terminate")


class TestLaurent:
    def test_expansions(self):
        assert (M(2) + 1) * (M(-2) + 1) == M(2) + 2 + M(-2)
        p = M(3) - 7
        assert p + 0 == p
        assert (1 - M(4)) * (1 - M(8)) == 1 - M(4) - M(8) + M(12)

    def test_canonical_no_zero_terms(self):
        p = LaurentPoly({3: 1, 0: 0, -2: 5})
        assert p.terms == {3: 1, -2: 5}
        assert (p - p).is_zero() and (p - p).terms == {}

    def test_big_coefficients(self):
        p = M(1, 10**40) * M(-1, 10**40)
        assert p.terms == {0: 10**80}

    def test_render(self):
        assert str(M(4) + 1 + M(-4)) == "A^4 + 1 + A^-4"
        assert str(-M(2) - M(-2)) == "-A^2 - A^-2"
        assert str(M(3, 2) - M(1)) == "2*A^3 - A"
        assert str(LaurentPoly()) == "0"

    def test_json_roundtrip_sorted(self):
        p = M(5, -3) + M(-7, 10**30)
        data = p.to_json()
        assert data == [[-7, str(10**30)], [5, "-3"]]
        assert LaurentPoly.from_json(data) == p

    def test_divexact(self):
        assert (M(4) - M(-4)).divexact(M(2) - M(-2)) == M(2) + M(-2)
        with pytest.raises(InexactDivisionError):
            (M(2) + 1).divexact(M(1) + 1)

    def test_bar_and_eval(self):
        assert (M(3) + 2 * M(-1)).bar() == M(-3) + 2 * M(1)
        assert loop_value().evaluate_at_one() == -2

    @settings(max_examples=100, deadline=None)
    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=50, deadline=None)
    @given(polys)
    def test_json_roundtrip_property(self, a):
        assert LaurentPoly.from_json(a.to_json()) == a


class TestRational:
    def test_inverse_of_loop(self):
        d = RationalFn(loop_value())
        assert (RationalFn(1) / d) * d == RationalFn(1)

    def test_reduces_to_laurent(self):
        r = RationalFn(M(4) - M(-4), M(2) - M(-2))
        assert r.is_laurent() and r.num == M(2) + M(-2)

    def test_quotient_of_deltas(self):
        r = RationalFn(delta(2), delta(1))
        assert r / 1 == r
        assert r.den.coefficient(0) != 0 and r.den.leading_coefficient() > 0

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn(1, 0)
        with pytest.raises(ZeroDivisionError):
            RationalFn(M(1)) / RationalFn(0)

    def test_normalized_denominator(self):
        r = RationalFn(M(-5, 4), M(-3, -6) - M(-1, 6))
        den = r.den
        assert den.valuation == 0 and den.leading_coefficient() > 0
        assert RationalFn(2, 4) == RationalFn(1, 2)

    def test_json(self):
        r = RationalFn(M(3) + 1, M(2) + 1)
        assert RationalFn.from_json(r.to_json()) == r
        assert str(r) == "(A^3 + 1)/(A^2 + 1)"

    @settings(max_examples=100, deadline=None)
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == RationalFn(0)

    @settings(max_examples=100, deadline=None)
    @given(nonzero_rationals)
    def test_inverse(self, x):
        assert x * x.inverse() == RationalFn(1)

    @settings(max_examples=100, deadline=None)
    @given(polys, nonzero_polys, nonzero_polys)
    def test_canonical_form_unique(self, a, b, c):
        x, y = RationalFn(a, b), RationalFn(c * a, c * b)
        assert x == y
        assert x.to_json() == y.to_json() and hash(x) == hash(y)


class TestNamedQuantities:
    def test_loop_value(self):
        assert loop_value() == -M(2) - M(-2)
        assert loop_value() == delta(1)

    def test_delta_values(self):
        assert delta(0) == LaurentPoly.constant(1)
        assert delta(1) == -M(2) - M(-2)
        assert delta(2) == M(4) + 1 + M(-4)

    def test_delta_recurrence(self):
        d = loop_value()
        for n in range(1, 21):
            assert delta(n + 1) == d * delta(n) - delta(n - 1)

    def test_delta_against_long_division(self):
        for n in range(0, 8):
            k = 2 * (n + 1)
            q = long_division({k: 1, -k: -1}, {2: 1, -2: -1})
            assert delta(n) == LaurentPoly(q) * (-1) ** n

    def test_q_pochhammer(self):
        assert q_pochhammer(0) == LaurentPoly.constant(1)
        assert q_pochhammer(1) == 1 - M(4)
        assert q_pochhammer(2) == (1 - M(4)) * (1 - M(8))

    def test_coeff_C(self):
        assert coeff_C(1, 0) == A and coeff_C(1, 1) == M(-1)
        assert coeff_C(2, 1) == M(2) + M(-2)
        assert coeff_C(3, 3) == M(-9)

    def test_coeff_D(self):
        assert coeff_D(1, 0) == M(2)
        assert coeff_D(1, 1) == 1 - M(-4)
        assert coeff_D(2, 0) == M(8)

    def test_C_palindromic(self):
        for n in range(6):
            for i in range(n + 1):
                assert coeff_C(n, i).bar() == coeff_C(n, n - i)

    def test_q_binomial_at_one_is_binomial(self):
        from math import comb

        for n in range(7):
            for i in range(n + 1):
                assert q_binomial(n, i).evaluate_at_one() == comb(n, i)

    def test_as_laurent(self):
        assert as_laurent(RationalFn(delta(2))) == delta(2)
        bad = as_laurent(RationalFn(1, loop_value()))
        assert isinstance(bad, NotIntegral) and not bad
        assert as_laurent(RationalFn(M(4) - M(-4), M(2) - M(-2))) == M(2) + M(-2)
