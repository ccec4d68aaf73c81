"""Q(A)-linear combinations of Temperley-Lieb diagrams.

:class:`TLElement` is the algebra element; multiplication stacks diagrams
and replaces every closed loop by ``d = -A^2 - A^-2``.  Jones-Wenzl
projectors are built by Wenzl's recursion and cached per process.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping

from .algebra import RationalFn, _common_form, _from_parts, _loop_polys, delta, loop_value
from .config import get_bounds
from .tl_diagram import (
    BoundError,
    Matching,
    compose,
    cup_cap,
    identity,
    tensor,
    trace_close,
)

__all__ = [
    "TLElement",
    "el_add",
    "el_scale",
    "el_mul",
    "el_tensor",
    "embed",
    "jones_wenzl",
    "el_trace",
    "right_close",
]

_ONE = RationalFn(1)
_D = RationalFn(loop_value())


def _d_power(k: int, _cache={0: _ONE}) -> RationalFn:
    try:
        return _cache[k]
    except KeyError:
        _cache[k] = out = _D ** k
        return out


class TLElement:
    """An element of TL_m in the diagram basis.

    ``terms`` maps :class:`Matching` to a nonzero :class:`RationalFn`.
    Instances are immutable; all operations return new elements.
    """

    __slots__ = ("width", "_terms")

    def __init__(self, width: int, terms: Mapping[Matching, object] | None = None):
        if width < 1:
            raise ValueError("width must be positive")
        self.width = width
        clean: dict[Matching, RationalFn] = {}
        for m, c in (terms or {}).items():
            if not isinstance(m, Matching):
                m = Matching(m)
            if m.width != width:
                raise ValueError(f"diagram of width {m.width} in a TL_{width} element")
            c = RationalFn.coerce(c)
            if not c.is_zero():
                clean[m] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, width: int, terms: dict) -> "TLElement":
        obj = object.__new__(cls)
        obj.width = width
        obj._terms = {m: c for m, c in terms.items() if not c.is_zero()}
        return obj

    @classmethod
    def basis(cls, m: Matching, coeff=1) -> "TLElement":
        return cls._wrap(m.width, {m: RationalFn.coerce(coeff)})

    @classmethod
    def one(cls, width: int) -> "TLElement":
        return cls.basis(identity(width))

    @classmethod
    def zero(cls, width: int) -> "TLElement":
        return cls._wrap(width, {})

    @classmethod
    def e(cls, width: int, i: int) -> "TLElement":
        return cls.basis(cup_cap(width, i))

    @property
    def terms(self) -> dict[Matching, RationalFn]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Iterable[int]) -> RationalFn:
        return self._terms.get(Matching(m, check=False), RationalFn(0))

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.width == other.width and self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        return el_add(self, other)

    def __sub__(self, other):
        return el_add(self, el_scale(-1, other))

    def __neg__(self):
        return el_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return el_mul(self, other)
        return el_scale(other, self)

    def __rmul__(self, other):
        return el_scale(other, self)

    def __matmul__(self, other):
        return el_tensor(self, other)

    def __repr__(self):
        return f"TLElement(width={self.width}, terms={len(self._terms)})"

    def __str__(self):
        if not self._terms:
            return "0"
        return "\n".join(f"({c}) * {list(m)}" for m, c in sorted(self._terms.items()))

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "terms": [[list(m), c.to_json()] for m, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TLElement":
        return cls(
            int(data["width"]),
            {Matching(m): RationalFn.from_json(c) for m, c in data["terms"]},
        )


def _check_width(a: TLElement, b: TLElement) -> None:
    if a.width != b.width:
        raise ValueError(f"width mismatch: TL_{a.width} vs TL_{b.width}")


def el_add(a: TLElement, b: TLElement) -> TLElement:
    _check_width(a, b)
    out = dict(a._terms)
    for m, c in b._terms.items():
        prev = out.get(m)
        out[m] = c if prev is None else prev + c
    return TLElement._wrap(a.width, out)


def el_scale(c, a: TLElement) -> TLElement:
    c = RationalFn.coerce(c)
    if c.is_zero():
        return TLElement.zero(a.width)
    if c.is_one():
        return a
    return TLElement._wrap(a.width, {m: c * x for m, x in a._terms.items()})


def el_mul(a: TLElement, b: TLElement) -> TLElement:
    """Product ``a * b``: ``a`` stacked on top of ``b``."""
    _check_width(a, b)
    if not a._terms or not b._terms:
        return TLElement.zero(a.width)
    # fraction-free: put each factor over one denominator, reduce once per output term
    ma_list = list(a._terms)
    mb_list = list(b._terms)
    pa, sa, da = _common_form(list(a._terms.values()))
    pb, sb, db = _common_form(list(b._terms.values()))
    rb = list(zip(mb_list, pb))
    buckets: dict[tuple[Matching, int], object] = {}
    get = buckets.get
    for ma, ca in zip(ma_list, pa):
        for mb, cb in rb:
            key = compose(ma, mb)
            c = ca * cb
            prev = get(key)
            buckets[key] = c if prev is None else prev + c
    max_loops = max(k for _, k in buckets)
    dpolys = _loop_polys(max_loops)
    acc: dict[Matching, object] = {}
    for (m, loops), c in buckets.items():
        c = c * dpolys[loops]
        prev = acc.get(m)
        acc[m] = c if prev is None else prev + c
    shift = sa + sb - 2 * max_loops
    den = da * db
    return TLElement._wrap(a.width, {m: _from_parts(p, shift, den) for m, p in acc.items()})


def el_tensor(a: TLElement, b: TLElement) -> TLElement:
    out: dict[Matching, RationalFn] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            m = tensor(ma, mb)
            c = ca * cb
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
    return TLElement._wrap(a.width + b.width, out)


def embed(a: TLElement, total: int, offset: int) -> TLElement:
    """``id(offset) (x) a (x) id(total - offset - a.width)``."""
    right = total - offset - a.width
    if offset < 0 or right < 0:
        raise ValueError(f"cannot place a width-{a.width} element at {offset} in TL_{total}")
    out = a
    if offset:
        out = el_tensor(TLElement.one(offset), out)
    if right:
        out = el_tensor(out, TLElement.one(right))
    return out


_jw_cache: dict[int, TLElement] = {}
_jw_lock = threading.Lock()


def jones_wenzl(n: int) -> TLElement:
    """The Jones-Wenzl projector f^(n) in TL_n (memoized).

    f^(1) is a single strand and
    ``f^(n) = F - (Delta_{n-2}/Delta_{n-1}) F e_{n-1} F`` with ``F = f^(n-1) (x) 1``.
    """
    if n < 1:
        raise ValueError("projector index must be positive")
    bound = get_bounds().max_projector
    if n > bound:
        raise BoundError(f"jones_wenzl({n}) exceeds the projector bound {bound}")
    cached = _jw_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        out = TLElement.one(1)
    else:
        F = el_tensor(jones_wenzl(n - 1), TLElement.one(1))
        FeF = el_mul(el_mul(F, TLElement.e(n, n - 1)), F)
        ratio = RationalFn(delta(n - 2), delta(n - 1))
        out = F - el_scale(ratio, FeF)
    with _jw_lock:
        _jw_cache.setdefault(n, out)
    return _jw_cache[n]


def el_trace(a: TLElement) -> RationalFn:
    """Markov trace closure evaluated in the skein module of S^3."""
    total = RationalFn(0)
    by_loops: dict[int, RationalFn] = {}
    for m, c in a._terms.items():
        k = trace_close(m)
        prev = by_loops.get(k)
        by_loops[k] = c if prev is None else prev + c
    for k, c in by_loops.items():
        total = total + c * _d_power(k)
    return total


def right_close(a: TLElement, k: int) -> TLElement:
    """Close the rightmost ``k`` strands around the right side.

    Returns an element of TL_{m-k}; each loop formed is replaced by ``d``.
    """
    m = a.width
    w = m - k
    if not 0 < k < m:
        raise ValueError("partial closure needs 0 < k < width")
    out: dict[Matching, RationalFn] = {}
    for mat, c in a._terms.items():
        res, loops = _partial_close(mat, m, w)
        if loops:
            c = c * _d_power(loops)
        prev = out.get(res)
        out[res] = c if prev is None else prev + c
    return TLElement._wrap(w, out)


def _partial_close(mat: Matching, m: int, w: int) -> tuple[Matching, int]:
    # join top m+j to bottom j for j >= w
    def hop(p):
        # from a closed point, cross the closure arc
        return p - m if p >= m else p + m

    def is_closed(p):
        return (p % m) >= w

    def relabel(p):
        return p if p < m else w + (p - m)

    out = [0] * (2 * w)
    seen = set()
    for p in range(2 * m):
        if is_closed(p) or p in seen:
            continue
        q = mat[p]
        while is_closed(q):
            seen.add(q)
            r = hop(q)
            seen.add(r)
            q = mat[r]
        seen.add(p)
        seen.add(q)
        out[relabel(p)] = relabel(q)
        out[relabel(q)] = relabel(p)
    loops = 0
    for p in range(2 * m):
        if not is_closed(p) or p in seen:
            continue
        loops += 1
        q = p
        while q not in seen:
            seen.add(q)
            r = mat[q]
            seen.add(r)
            q = hop(r)
    return Matching(out, check=False), loops
