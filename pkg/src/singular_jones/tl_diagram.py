"""Crossingless matchings: the diagram basis of the Temperley-Lieb algebra.

A width-``m`` matching pairs the ``2m`` boundary points of a rectangle.
Points ``0..m-1`` sit on the bottom edge and ``m..2m-1`` on the top edge,
both read left to right.  ``compose(a, b)`` stacks ``a`` on top of ``b``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .config import get_bounds

__all__ = [
    "Matching",
    "BoundError",
    "identity",
    "cup_cap",
    "nested_cup_cap",
    "compose",
    "tensor",
    "trace_close",
    "enumerate_basis",
    "is_planar",
    "insert_turnbacks",
    "rotate",
    "catalan",
]


class BoundError(ValueError):
    """A size bound from :mod:`singular_jones.config` was exceeded."""


class Matching(tuple):
    """A planar perfect matching stored as its pairing array.

    ``Matching([2, 3, 0, 1])`` is the width-2 identity.  The pairing array
    is the canonical encoding; equality and hashing are those of the tuple.
    """

    __slots__ = ()

    def __new__(cls, pairing: Iterable[int], *, check: bool = True):
        self = super().__new__(cls, pairing)
        if check:
            _validate(self)
        return self

    @property
    def width(self) -> int:
        return len(self) // 2

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"Matching({list(self)})"


def _validate(p: Sequence[int]) -> None:
    n = len(p)
    if n == 0 or n % 2:
        raise ValueError("a matching needs an even, positive number of points")
    for i, j in enumerate(p):
        if not 0 <= j < n or j == i or p[j] != i:
            raise ValueError(f"pairing {list(p)} is not a fixed-point-free involution")
    if not is_planar(p):
        raise ValueError(f"pairing {list(p)} is not planar")


def _circular(i: int, m: int) -> int:
    # bottom left->right, then top right->left
    return i if i < m else 3 * m - 1 - i


def is_planar(pairing: Sequence[int]) -> bool:
    """Nesting test on the boundary circle."""
    m = len(pairing) // 2
    chords = sorted(
        (min(_circular(i, m), _circular(j, m)), max(_circular(i, m), _circular(j, m)))
        for i, j in enumerate(pairing)
        if i < j
    )
    stack: list[int] = []
    for a, b in sorted([(a, b) for a, b in chords]):
        while stack and stack[-1] < a:
            stack.pop()
        if stack and stack[-1] < b:
            return False
        stack.append(b)
    return True


def identity(m: int) -> Matching:
    if m < 1:
        raise ValueError("width must be positive")
    return Matching([m + j for j in range(m)] + list(range(m)), check=False)


def cup_cap(m: int, i: int) -> Matching:
    """The generator ``e_i`` of TL_m (1-based ``i``)."""
    if not 1 <= i <= m - 1:
        raise IndexError(f"e_{i} does not exist in TL_{m}")
    p = list(identity(m))
    a, b = i - 1, i
    p[a], p[b] = b, a
    p[m + a], p[m + b] = m + b, m + a
    return Matching(p, check=False)


def nested_cup_cap(k: int) -> Matching:
    """Width-2k diagram with k nested caps below and k nested cups above."""
    m = 2 * k
    p = [0] * (2 * m)
    for j in range(m):
        p[j] = m - 1 - j
        p[m + j] = 2 * m - 1 - j
    return Matching(p, check=False)


@lru_cache(maxsize=1 << 18)
def compose(a: Matching, b: Matching) -> tuple[Matching, int]:
    """Stack ``a`` above ``b``; return the matching and the number of loops removed."""
    m = len(a) // 2
    if len(b) != 2 * m:
        raise ValueError(f"width mismatch: {len(a) // 2} vs {len(b) // 2}")
    out = [-1] * (2 * m)
    seen = [False] * m  # middle points, indexed by position
    for start in range(2 * m):
        if out[start] >= 0:
            continue
        # walk from a free end; in_b says which layer we are in
        if start < m:
            in_b, p = True, start
        else:
            in_b, p = False, start
        while True:
            if in_b:
                q = b[p]
                if q < m:
                    end = q
                    break
                mid = q - m
                seen[mid] = True
                in_b, p = False, mid
            else:
                q = a[p]
                if q >= m:
                    end = q
                    break
                seen[q] = True
                in_b, p = True, q + m
        out[start], out[end] = end, start
    loops = 0
    for s in range(m):
        if seen[s]:
            continue
        loops += 1
        p = s
        while True:
            seen[p] = True
            p = a[p]  # partner on a's bottom, still in the middle row
            seen[p] = True
            q = b[p + m] - m  # through b's top
            if q == s:
                break
            p = q
    return Matching(out, check=False), loops


def tensor(a: Matching, b: Matching) -> Matching:
    """Juxtapose ``a`` (left) and ``b`` (right)."""
    m, n = a.width, b.width
    w = m + n

    def where_a(i):
        return i if i < m else w + (i - m)

    def where_b(i):
        return m + i if i < n else w + m + (i - n)

    out = [0] * (2 * w)
    for i, j in enumerate(a):
        out[where_a(i)] = where_a(j)
    for i, j in enumerate(b):
        out[where_b(i)] = where_b(j)
    return Matching(out, check=False)


def trace_close(a: Matching) -> int:
    """Loops in the closure joining top point ``m+j`` to bottom point ``j``."""
    m = len(a) // 2
    seen = [False] * (2 * m)
    loops = 0
    for s in range(2 * m):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = a[p]
            seen[q] = True
            p = q - m if q >= m else q + m
    return loops


def insert_turnbacks(a: Matching, at: int, k: int) -> Matching:
    """Insert ``k`` nested caps (bottom) and cups (top) after strand position ``at``.

    The result has width ``a.width + 2k``; no loops are created.
    """
    m = a.width
    if not 0 <= at <= m:
        raise IndexError("insertion point outside the diagram")
    w = m + 2 * k

    def place(i):
        if i < m:
            return i if i < at else i + 2 * k
        j = i - m
        return w + (j if j < at else j + 2 * k)

    out = [0] * (2 * w)
    for i, j in enumerate(a):
        out[place(i)] = place(j)
    for t in range(2 * k):
        out[at + t] = at + 2 * k - 1 - t
        out[w + at + t] = w + at + 2 * k - 1 - t
    return Matching(out, check=False)


def rotate(a: Matching) -> Matching:
    """Rotate the diagram by a half turn in the plane."""
    m = a.width
    # bottom j <-> top m-1-j
    def r(i):
        return 2 * m - 1 - i

    out = [0] * (2 * m)
    for i, j in enumerate(a):
        out[r(i)] = r(j)
    return Matching(out, check=False)


def catalan(m: int) -> int:
    c = 1
    for k in range(m):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def enumerate_basis(m: int, bound: int | None = None) -> list[Matching]:
    """All Catalan(m) crossingless matchings of width m, in a fixed order."""
    bound = get_bounds().max_basis_width if bound is None else bound
    if m < 1:
        raise ValueError("width must be positive")
    if m > bound:
        raise BoundError(f"enumerate_basis({m}) exceeds the width bound {bound}")
    # non-crossing perfect matchings of 2m points on the circle, then unfold
    out = []
    circ_to_point = [i if i < m else 3 * m - 1 - i for i in range(2 * m)]
    for pairs in _noncrossing(list(range(2 * m))):
        p = [0] * (2 * m)
        for x, y in pairs:
            i, j = circ_to_point[x], circ_to_point[y]
            p[i], p[j] = j, i
        out.append(Matching(p, check=False))
    out.sort()
    return out


def _noncrossing(points: list[int]):
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1 :]
        for left in _noncrossing(inside):
            for right in _noncrossing(outside):
                yield [(first, points[k])] + left + right


def brute_force_basis(m: int) -> list[Matching]:
    """Every perfect matching of 2m points filtered by planarity (test oracle)."""
    pts = list(range(2 * m))

    def all_matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for b in rest[1:]:
            remaining = [x for x in rest[1:] if x != b]
            for tail in all_matchings(remaining):
                yield [(a, b)] + tail

    out = []
    for pairs in all_matchings(pts):
        p = [0] * (2 * m)
        for x, y in pairs:
            p[x], p[y] = y, x
        if is_planar(p):
            out.append(Matching(p, check=False))
    return sorted(out)

