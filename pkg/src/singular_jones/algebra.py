"""Exact arithmetic in Z[A, A^-1] and Q(A).

Polynomial kernels (multiplication, gcd, exact division) are delegated to
FLINT through ``python-flint``; every value is stored as a FLINT integer
polynomial plus an exponent shift so that negative powers of ``A`` are
free.  Both :class:`LaurentPoly` and :class:`RationalFn` are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

import flint

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "NotIntegral",
    "InexactDivisionError",
    "A",
    "loop_value",
    "delta",
    "q_pochhammer",
    "q_binomial",
    "coeff_C",
    "coeff_D",
    "as_laurent",
]

_Poly = flint.fmpz_poly
_ZERO = _Poly([])
_ONE = _Poly([1])


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _strip_low(p: _Poly) -> tuple[_Poly, int]:
    """Split ``p`` into ``(q, k)`` with ``p = x^k q`` and ``q(0) != 0``."""
    if p.is_zero() or p[0] != 0:
        return p, 0
    coeffs = p.coeffs()
    k = 0
    while coeffs[k] == 0:
        k += 1
    return p.right_shift(k), k


def _fmt_coeff_term(c: int, e: int, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = -c if c < 0 else c
    if e == 0:
        body = str(mag)
    else:
        mono = "A" if e == 1 else f"A^{e}"
        body = mono if mag == 1 else f"{mag}*{mono}"
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


class LaurentPoly:
    """An integer Laurent polynomial in ``A``.

    Construct from a mapping ``{exponent: coefficient}``; zero coefficients
    are dropped.  Arithmetic with Python ints is supported on both sides.
    """

    __slots__ = ("_p", "_v", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if not terms:
            self._p, self._v = _ZERO, 0
        else:
            items = [(int(e), int(c)) for e, c in terms.items() if c != 0]
            if not items:
                self._p, self._v = _ZERO, 0
            else:
                lo = min(e for e, _ in items)
                hi = max(e for e, _ in items)
                coeffs = [0] * (hi - lo + 1)
                for e, c in items:
                    coeffs[e - lo] = c
                self._p, self._v = _Poly(coeffs), lo
        self._hash = None

    @classmethod
    def _raw(cls, p: _Poly, v: int) -> "LaurentPoly":
        # caller guarantees p(0) != 0 or p == 0
        obj = object.__new__(cls)
        if p.is_zero():
            v = 0
        obj._p, obj._v, obj._hash = p, v, None
        return obj

    @classmethod
    def _from_poly(cls, p: _Poly, v: int = 0) -> "LaurentPoly":
        q, k = _strip_low(p)
        return cls._raw(q, v + k)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        if coefficient == 0:
            return cls()
        return cls._raw(_Poly([coefficient]), exponent)

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, x: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        v = self._v
        return {v + i: int(c) for i, c in enumerate(self._p.coeffs()) if c != 0}

    @property
    def valuation(self) -> int:
        """Lowest exponent (0 for the zero polynomial)."""
        return self._v

    @property
    def degree(self) -> int:
        """Highest exponent (0 for the zero polynomial)."""
        return self._v + max(self._p.degree(), 0)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_monomial(self) -> bool:
        return self._p.degree() == 0

    def coefficient(self, exponent: int) -> int:
        i = exponent - self._v
        if i < 0 or i > self._p.degree():
            return 0
        return int(self._p[i])

    def leading_coefficient(self) -> int:
        return int(self._p.leading_coefficient()) if not self.is_zero() else 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if self._p.is_zero():
            return other
        if other._p.is_zero():
            return self
        d = other._v - self._v
        if d >= 0:
            return LaurentPoly._from_poly(self._p + other._p.left_shift(d), self._v)
        return LaurentPoly._from_poly(self._p.left_shift(-d) + other._p, other._v)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(-self._p, self._v)

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly._raw(self._p * other._p, self._v + other._v)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(self.leading_coefficient()) != 1:
                raise InexactDivisionError("only unit monomials have Laurent inverses")
            c = self.leading_coefficient()
            return LaurentPoly.monomial(-self._v * -k, c ** (-k))
        return LaurentPoly._raw(self._p**k, self._v * k)

    def __truediv__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return RationalFn(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return RationalFn(other, self)

    def divexact(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        """Quotient in Z[A, A^-1]; raises :class:`InexactDivisionError` otherwise."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        q, r = divmod(self._p, other._p)
        if not r.is_zero():
            raise InexactDivisionError(f"{other} does not divide {self}")
        return LaurentPoly._raw(q, self._v - other._v)

    def bar(self) -> "LaurentPoly":
        """The involution A -> A^-1."""
        if self.is_zero():
            return self
        deg = self._p.degree()
        return LaurentPoly._raw(_Poly(self._p.coeffs()[::-1]), -(self._v + deg))

    def evaluate_at_one(self) -> int:
        return int(sum(self._p.coeffs()))

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, RationalFn):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._v == other._v and self._p == other._p

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._v, tuple(int(c) for c in self._p.coeffs())))
        return self._hash

    # -- rendering / wire form ---------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        items = sorted(self.terms.items(), reverse=True)
        return "".join(_fmt_coeff_term(c, e, i == 0) for i, (e, c) in enumerate(items))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data})


A = LaurentPoly.monomial(1)

Scalar = Union["RationalFn", LaurentPoly, int]


class RationalFn:
    """A reduced element ``num / den`` of Q(A).

    Canonical form: ``num`` and ``den`` are coprime in Z[A], ``den`` has a
    nonzero constant term and a positive leading coefficient.  Two equal
    values therefore share one representation.
    """

    __slots__ = ("_np", "_nv", "_dp", "_hash")

    def __init__(self, num: Union[LaurentPoly, int] = 0, den: Union[LaurentPoly, int] = 1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._set(*_reduce(num._p, num._v - den._v, den._p))

    def _set(self, np_, nv, dp):
        self._np, self._nv, self._dp, self._hash = np_, nv, dp, None

    @classmethod
    def _raw(cls, np_, nv, dp) -> "RationalFn":
        obj = object.__new__(cls)
        obj._set(np_, nv, dp)
        return obj

    @classmethod
    def coerce(cls, x: Scalar) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x._p, x._v, _ONE)
        if isinstance(x, int):
            return cls._raw(_Poly([x]) if x else _ZERO, 0, _ONE)
        raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly._raw(self._np, self._nv)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly._raw(self._dp, 0)

    def is_zero(self) -> bool:
        return self._np.is_zero()

    def is_one(self) -> bool:
        return self._nv == 0 and self._np == _ONE and self._dp == _ONE

    def is_laurent(self) -> bool:
        return self._dp == _ONE

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            o = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self._np.is_zero():
            return o
        if o._np.is_zero():
            return self
        # align monomial shifts; denominators carry none
        d = o._nv - self._nv
        if d >= 0:
            a, b, v = self._np, o._np.left_shift(d), self._nv
        else:
            a, b, v = self._np.left_shift(-d), o._np, o._nv
        if self._dp == o._dp:
            return RationalFn._raw(*_reduce(a + b, v, self._dp))
        return RationalFn._raw(*_reduce(a * o._dp + b * self._dp, v, self._dp * o._dp))

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self._np, self._nv, self._dp)

    def __sub__(self, other):
        try:
            o = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RationalFn.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self._np.is_zero() or o._np.is_zero():
            return RationalFn._raw(_ZERO, 0, _ONE)
        p1, q1, p2, q2 = self._np, self._dp, o._np, o._dp
        if q2 != _ONE:
            g = p1.gcd(q2)
            if g != _ONE:
                p1, q2 = p1 // g, q2 // g
        if q1 != _ONE:
            g = p2.gcd(q1)
            if g != _ONE:
                p2, q1 = p2 // g, q1 // g
        num, den = p1 * p2, q1 * q2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFn._raw(num, self._nv + o._nv, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self._np.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(A)")
        num, den = self._dp, self._np
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFn._raw(num, -self._nv, den)

    def __truediv__(self, other):
        try:
            o = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFn._raw(self._np**k, self._nv * k, self._dp**k)

    def shift(self, k: int) -> "RationalFn":
        """Multiply by A^k."""
        if self._np.is_zero():
            return self
        return RationalFn._raw(self._np, self._nv + k, self._dp)

    def bar(self) -> "RationalFn":
        """The involution A -> A^-1."""
        return RationalFn(self.num.bar(), self.den.bar())

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn.coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self._nv == other._nv and self._np == other._np and self._dp == other._dp

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (
                    self._nv,
                    tuple(int(c) for c in self._np.coeffs()),
                    tuple(int(c) for c in self._dp.coeffs()),
                )
            )
        return self._hash

    def __str__(self):
        if self._dp == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFn({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFn":
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _reduce(p: _Poly, v: int, q: _Poly):
    """Bring ``x^v p / q`` to canonical form (q has no x-factor on entry)."""
    if p.is_zero():
        return _ZERO, 0, _ONE
    p, k = _strip_low(p)
    v += k
    q, k = _strip_low(q)
    v -= k
    if q != _ONE:
        g = p.gcd(q)
        if g != _ONE:
            p, q = p // g, q // g
    if q.leading_coefficient() < 0:
        p, q = -p, -q
    return p, v, q


# ---------------------------------------------------------------------------
# named quantities
# ---------------------------------------------------------------------------


def loop_value() -> LaurentPoly:
    """Value of a trivial closed loop, ``-A^2 - A^-2``."""
    return LaurentPoly({2: -1, -2: -1})


@lru_cache(maxsize=None)
def delta(n: int) -> LaurentPoly:
    """Closed loop carrying the n-th Jones-Wenzl projector.

    ``(-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2})``; the quotient is
    always exact.
    """
    if n < 0:
        raise ValueError("delta needs n >= 0")
    k = 2 * (n + 1)
    top = LaurentPoly({k: 1, -k: -1})
    q = top.divexact(LaurentPoly({2: 1, -2: -1}))
    return q if n % 2 == 0 else -q


@lru_cache(maxsize=None)
def q_pochhammer(k: int) -> LaurentPoly:
    """``(A^4; A^4)_k = prod_{j=1..k} (1 - A^{4j})``."""
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    out = LaurentPoly.constant(1)
    for j in range(1, k + 1):
        out = out * LaurentPoly({0: 1, 4 * j: -1})
    return out


def q_binomial(n: int, i: int) -> LaurentPoly:
    """Gaussian binomial in ``A^4``; raises if the quotient is not exact."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    return q_pochhammer(n).divexact(q_pochhammer(i) * q_pochhammer(n - i))


@lru_cache(maxsize=None)
def coeff_C(n: int, i: int) -> LaurentPoly:
    """Coefficient of the i-th basis element in the n-colored crossing expansion."""
    return LaurentPoly.monomial(n * n + 2 * i * i - 4 * i * n) * q_binomial(n, i)


@lru_cache(maxsize=None)
def coeff_D(n: int, i: int) -> LaurentPoly:
    """Coefficient of the i-th basis element in the n-colored full-twist expansion."""
    out = LaurentPoly.monomial(2 * i * i - 4 * i * n + 2 * n * n) * q_binomial(n, i)
    for j in range(n - i + 1, n + 1):
        out = out * LaurentPoly({0: 1, -4 * j: -1})
    return out


@dataclass(frozen=True)
class NotIntegral:
    """Failure value from :func:`as_laurent`: ``value`` keeps ``denominator``."""

    value: RationalFn
    denominator: LaurentPoly

    def __bool__(self):
        return False

    def __str__(self):
        return f"not in Z[A,A^-1]: denominator {self.denominator} survives"


def as_laurent(r: Scalar) -> LaurentPoly | NotIntegral:
    """Return ``r`` as a Laurent polynomial if it lies in Z[A, A^-1]."""
    r = RationalFn.coerce(r)
    if r.is_laurent():
        return r.num
    return NotIntegral(r, r.den)


# ---------------------------------------------------------------------------
# bulk helpers for the diagram algebra (fraction-free accumulation)
# ---------------------------------------------------------------------------


def _common_form(values: list[RationalFn]):
    """Write every value as ``x^shift * polys[i] / den`` with plain polynomials."""
    den = _ONE
    for r in values:
        q = r._dp
        if q != _ONE and q != den:
            g = den.gcd(q)
            den = den * (q // g) if g != _ONE else den * q
    shift = min((r._nv for r in values if not r._np.is_zero()), default=0)
    polys = []
    for r in values:
        p = r._np
        if r._dp != den:
            p = p * (den // r._dp)
        k = r._nv - shift
        polys.append(p.left_shift(k) if k else p)
    return polys, shift, den


def _from_parts(p, shift: int, den) -> RationalFn:
    return RationalFn._raw(*_reduce(p, shift, den))


def _loop_polys(max_loops: int):
    """``d^k`` as ``x^(-2K) * polys[k]`` for ``k = 0..K``."""
    base = _Poly([-1, 0, 0, 0, -1])  # -(1 + x^4) = x^2 * d
    out = []
    acc = _ONE
    for k in range(max_loops + 1):
        out.append(acc.left_shift(2 * (max_loops - k)))
        acc = acc * base
    return out
