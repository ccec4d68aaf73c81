"""Singular braid words and their images in the colored Temperley-Lieb algebra.

A word on ``k`` strands uses the letters ``s<i>`` (positive crossing),
``S<i>`` (its inverse) and ``t<i>`` (singular vertex).  With cable color
``c = 2n`` every strand becomes ``c`` parallel strands carrying the
projector ``f^(c)``, so a word lands in TL_{c*k}.

Crossing convention: ``s<i>`` resolves as ``A * id + A^-1 * e_i``.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import LaurentPoly, RationalFn
from .config import get_bounds
from .tl_diagram import BoundError, Matching, identity, insert_turnbacks, nested_cup_cap
from .tl_element import TLElement, el_mul, el_tensor, embed, jones_wenzl

__all__ = [
    "SingularBraidWord",
    "WordParseError",
    "parse_word",
    "elementary_crossing",
    "cable_crossing_positions",
    "braid_element",
    "cabled_crossing",
    "singular_vertex",
    "colored_basis_element",
    "projector_power",
    "rho_hat",
    "rho_hat_naive",
    "Relation",
    "RelationReport",
    "relations",
    "check_relations",
    "split_rotated",
    "vertex_with_inner_projectors",
    "IdentityCheck",
    "check_crossing_expansion_color2",
    "check_vertex_crossing",
    "check_vertex_conjugation",
    "check_inner_projectors",
]

KINDS = {"s": "pos", "S": "neg", "t": "sing"}
_SYMBOL = {v: k for k, v in KINDS.items()}


class WordParseError(ValueError):
    """Malformed word text; ``offset`` is the byte offset of the bad token."""

    def __init__(self, message: str, offset: int, token: str | None = None):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.token = token


@dataclass(frozen=True)
class SingularBraidWord:
    """A word in the singular braid monoid SB_k.

    ``letters`` is a tuple of ``(kind, i)`` with kind one of ``"pos"``,
    ``"neg"``, ``"sing"`` and ``1 <= i <= strands - 1``.
    """

    strands: int
    letters: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple((str(k), int(i)) for k, i in self.letters)
        object.__setattr__(self, "letters", letters)
        for kind, i in letters:
            if kind not in _SYMBOL:
                raise ValueError(f"unknown letter kind {kind!r}")
            if not 1 <= i <= self.strands - 1:
                raise IndexError(f"generator index {i} out of range for {self.strands} strands")

    @classmethod
    def from_tokens(cls, strands: int, tokens: Iterable[str]) -> "SingularBraidWord":
        return cls(strands, tuple((KINDS[t[0]], int(t[1:])) for t in tokens))

    @property
    def writhe(self) -> int:
        return sum(1 if k == "pos" else -1 if k == "neg" else 0 for k, _ in self.letters)

    @property
    def singular_count(self) -> int:
        return sum(1 for k, _ in self.letters if k == "sing")

    def is_classical(self) -> bool:
        return self.singular_count == 0

    @property
    def components(self) -> int:
        """Number of components of the closure (vertices do not permute strands)."""
        perm = list(range(self.strands))
        for kind, i in self.letters:
            if kind != "sing":
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
        seen, count = set(), 0
        for s in range(self.strands):
            if s not in seen:
                count += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        return count

    def tokens(self) -> list[str]:
        return [f"{_SYMBOL[k]}{i}" for k, i in self.letters]

    def __str__(self):
        return " ".join([f"strands={self.strands}", *self.tokens()])

    def __add__(self, other: "SingularBraidWord") -> "SingularBraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return SingularBraidWord(self.strands, self.letters + other.letters)

    def shifted(self, by: int, strands: int | None = None) -> "SingularBraidWord":
        """Move every letter ``by`` positions to the right."""
        total = self.strands + by if strands is None else strands
        return SingularBraidWord(total, tuple((k, i + by) for k, i in self.letters))

    def inverse(self) -> "SingularBraidWord":
        """Inverse of a classical word."""
        if not self.is_classical():
            raise ValueError("singular letters have no inverse")
        flip = {"pos": "neg", "neg": "pos"}
        return SingularBraidWord(self.strands, tuple((flip[k], i) for k, i in reversed(self.letters)))

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": [[_SYMBOL[k], i] for k, i in self.letters]}

    @classmethod
    def from_json(cls, data) -> "SingularBraidWord":
        letters = []
        for sym, i in data["letters"]:
            if sym not in KINDS:
                raise ValueError(f"unknown letter symbol {sym!r}")
            letters.append((KINDS[sym], int(i)))
        return cls(int(data["strands"]), tuple(letters))


_TOKEN = re.compile(r"\S+")
_HEADER = re.compile(r"strands=([0-9]+)\Z")
_LETTER = re.compile(r"([sSt])([0-9]+)\Z")


def parse_word(text: str) -> SingularBraidWord:
    """Parse ``"strands=<k> tok tok ..."`` with tokens ``s<i>``, ``S<i>``, ``t<i>``."""
    raw = text.encode("utf-8")
    tokens = [(m.start(), m.group()) for m in _TOKEN.finditer(raw.decode("utf-8", "replace"))]
    # byte offsets for error messages
    tokens = [(len(text[:pos].encode("utf-8")), tok) for pos, tok in tokens]
    if not tokens:
        raise WordParseError("empty input; expected 'strands=<k>'", 0)
    off, head = tokens[0]
    m = _HEADER.match(head)
    if not m:
        raise WordParseError(f"expected header 'strands=<k>', got {head!r}", off, head)
    k = int(m.group(1))
    if k < 1:
        raise WordParseError("strand count must be positive", off, head)
    letters = []
    for off, tok in tokens[1:]:
        m = _LETTER.match(tok)
        if not m:
            raise WordParseError(f"malformed token {tok!r}", off, tok)
        i = int(m.group(2))
        if not 1 <= i <= k - 1:
            raise WordParseError(
                f"index out of range in token {tok!r}: need 1 <= i <= {k - 1}", off, tok
            )
        letters.append((KINDS[m.group(1)], i))
    return SingularBraidWord(k, tuple(letters))


# ---------------------------------------------------------------------------
# generator images
# ---------------------------------------------------------------------------


def elementary_crossing(sign: int) -> TLElement:
    """Width-2 Kauffman resolution: ``A id + A^-1 e`` for +1, mirror for -1."""
    a = LaurentPoly.monomial(sign)
    return TLElement(2, {identity(2): a, Matching([1, 0, 3, 2]): a.bar()})


def _crossing_at(width: int, pos: int, sign: int) -> TLElement:
    return embed(elementary_crossing(sign), width, pos - 1)


def cable_crossing_positions(c: int) -> list[int]:
    """Generator positions (1-based) of the braid carrying the left c-cable over to the right."""
    return [c - r + s for r in range(c) for s in range(c)]


def braid_element(width: int, positions: Sequence[int], sign: int, start: TLElement | None = None):
    """``start * sigma_{p1}^sign * sigma_{p2}^sign * ...`` (start defaults to 1)."""
    x = TLElement.one(width) if start is None else start
    for p in positions:
        x = el_mul(x, _crossing_at(width, p, sign))
    return x


def _check_color(color: int) -> int:
    if color < 1:
        raise ValueError("cable color must be positive")
    bound = get_bounds().max_cable_color
    if color > bound:
        raise BoundError(f"cable color {color} exceeds the bound {bound}")
    return color


def projector_power(color: int, cables: int) -> TLElement:
    """``f^(color)`` on each of ``cables`` adjacent cables."""
    f = jones_wenzl(color)
    out = f
    for _ in range(cables - 1):
        out = el_tensor(out, f)
    return out


def _right_projectors(x: TLElement, color: int, cables: Iterable[int]) -> TLElement:
    f = jones_wenzl(color)
    for j in cables:
        x = el_mul(x, embed(f, x.width, j * color))
    return x


_cache: dict[tuple, TLElement] = {}
_cache_lock = threading.Lock()


def _memo(key, build):
    hit = _cache.get(key)
    if hit is not None:
        return hit
    value = build()
    with _cache_lock:
        return _cache.setdefault(key, value)


def cabled_crossing(color: int, sign: int) -> TLElement:
    """Crossing of two ``color``-cables, projector-capped on both sides, in TL_{2*color}."""
    _check_color(color)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")

    def build():
        x = projector_power(color, 2)
        x = braid_element(2 * color, cable_crossing_positions(color), sign, start=x)
        return _right_projectors(x, color, (0, 1))

    return _memo(("crossing", color, sign), build)


def colored_basis_element(color: int, sides: int) -> TLElement:
    """Projector-capped diagram with ``sides`` through-strands on each side.

    The middle ``color - sides`` strands of the two cables form nested caps
    below and nested cups above.  ``sides = color/2`` is the singular vertex.
    """
    if not 0 <= sides <= color:
        raise ValueError("need 0 <= sides <= color")

    def build():
        turn = color - sides
        if sides == 0:
            core = nested_cup_cap(turn)
        else:
            core = insert_turnbacks(identity(2 * sides), sides, turn)
        x = el_mul(projector_power(color, 2), TLElement.basis(core))
        return _right_projectors(x, color, (0, 1))

    return _memo(("basis", color, sides), build)


def singular_vertex(color: int) -> TLElement:
    """The rigid vertex with four ``color``-legs and ``color/2``-strand bundles between adjacent legs."""
    _check_color(color)
    if color % 2:
        raise ValueError("the singular vertex needs an even color")
    return colored_basis_element(color, color // 2)


def _local_factor(letter: tuple[str, int], color: int, width: int):
    kind, i = letter
    off = (i - 1) * color
    if kind == "sing":
        n = color // 2
        core = insert_turnbacks(identity(2 * n), n, n)
        return embed(TLElement.basis(core), width, off)
    sign = 1 if kind == "pos" else -1
    return [(p + off, sign) for p in cable_crossing_positions(color)]


def rho_hat(word: SingularBraidWord, color: int) -> TLElement:
    """Image of ``word`` in TL_{color*k} with a projector on every cable.

    Evaluated as ``P B_1 P B_2 ... P`` with ``P`` the cable projectors, which
    equals the product of the projector-capped generator images because
    ``P`` is idempotent and commutes past untouched cables.
    """
    _check_color(color)
    if color % 2:
        raise ValueError("cable colors are even")
    k = word.strands
    width = color * k
    bound = get_bounds().max_total_width
    if width > bound:
        raise BoundError(f"total width {width} exceeds the bound {bound}")
    x = projector_power(color, k)
    for letter in word.letters:
        local = _local_factor(letter, color, width)
        if isinstance(local, TLElement):
            x = el_mul(x, local)
        else:
            for p, sign in local:
                x = el_mul(x, _crossing_at(width, p, sign))
        i = letter[1]
        x = _right_projectors(x, color, (i - 1, i))
    return x


def rho_hat_naive(word: SingularBraidWord, color: int) -> TLElement:
    """Literal product of embedded, cached generator images (slow reference)."""
    k = word.strands
    width = color * k
    x = projector_power(color, k)
    for kind, i in word.letters:
        if kind == "sing":
            g = singular_vertex(color)
        else:
            g = cabled_crossing(color, 1 if kind == "pos" else -1)
        x = el_mul(x, embed(g, width, (i - 1) * color))
    return x


# ---------------------------------------------------------------------------
# monoid relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: SingularBraidWord
    rhs: SingularBraidWord

    def __str__(self):
        left = " ".join(self.lhs.tokens()) or "e"
        right = " ".join(self.rhs.tokens()) or "e"
        return f"{self.label}: {left} = {right}"


def relations(k: int) -> list[Relation]:
    """Every instance of the singular braid monoid relations on ``k`` strands."""

    def w(*tokens):
        return SingularBraidWord.from_tokens(k, tokens)

    out: list[Relation] = []
    idx = range(1, k)
    for i in idx:
        out.append(Relation(f"1 (i={i})", w(f"s{i}", f"S{i}"), w()))
        out.append(Relation(f"1' (i={i})", w(f"S{i}", f"s{i}"), w()))
    for i in idx:
        for j in idx:
            if abs(i - j) <= 1:
                continue
            if i < j:
                out.append(Relation(f"2a (i={i},j={j})", w(f"s{i}", f"s{j}"), w(f"s{j}", f"s{i}")))
                out.append(Relation(f"2c (i={i},j={j})", w(f"t{i}", f"t{j}"), w(f"t{j}", f"t{i}")))
            out.append(Relation(f"2b (i={i},j={j})", w(f"s{i}", f"t{j}"), w(f"t{j}", f"s{i}")))
    for i in idx:
        out.append(Relation(f"3 (i={i})", w(f"t{i}", f"s{i}"), w(f"s{i}", f"t{i}")))
    for i in range(1, k - 1):
        j = i + 1
        out.append(Relation(f"4a (i={i})", w(f"s{i}", f"s{j}", f"s{i}"), w(f"s{j}", f"s{i}", f"s{j}")))
        out.append(Relation(f"4b (i={i})", w(f"t{i}", f"s{j}", f"s{i}"), w(f"s{j}", f"s{i}", f"t{j}")))
        out.append(Relation(f"4c (i={i})", w(f"t{j}", f"s{i}", f"s{j}"), w(f"s{i}", f"s{j}", f"t{i}")))
    return out


@dataclass
class RelationReport:
    strands: int
    color: int
    entries: list[tuple[Relation, bool]]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.entries)

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'}  {rel}" for rel, ok in self.entries]

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "color": self.color,
            "passed": self.passed,
            "relations": [
                {"label": r.label, "lhs": r.lhs.tokens(), "rhs": r.rhs.tokens(), "pass": ok}
                for r, ok in self.entries
            ],
        }


def check_relations(k: int, color: int) -> RelationReport:
    """Evaluate both sides of every relation through :func:`rho_hat` and compare."""
    memo: dict[SingularBraidWord, TLElement] = {}

    def image(word):
        if word not in memo:
            memo[word] = rho_hat(word, color)
        return memo[word]

    entries = [(rel, image(rel.lhs) == image(rel.rhs)) for rel in relations(k)]
    return RelationReport(k, color, entries)


# ---------------------------------------------------------------------------
# local identities between generator images
# ---------------------------------------------------------------------------


def _cap_with_projectors(core: TLElement, color: int) -> TLElement:
    x = el_mul(projector_power(color, 2), core)
    return _right_projectors(x, color, (0, 1))


def split_rotated(n: int, sign: int) -> TLElement:
    """Projector-capped element whose outer n-bundles cross with ``sign``.

    The inner ``n`` strands of each 2n-cable turn back (cap below, cup
    above); the outer ``n`` strands of the two cables cross as an n-cable.
    """
    _check_color(2 * n)
    raw = braid_element(2 * n, cable_crossing_positions(n), sign)
    core = TLElement(4 * n, {insert_turnbacks(m, n, n): c for m, c in raw.items()})
    return _cap_with_projectors(core, 2 * n)


def vertex_with_inner_projectors(n: int) -> TLElement:
    """Singular vertex with an extra f^(n) on each of the four internal bundles."""
    f = jones_wenzl(n)
    turn = TLElement.basis(nested_cup_cap(n))
    # f^(n) on the bundle feeding each side of the cup-cap
    inner = el_mul(el_mul(el_tensor(f, f), turn), el_tensor(f, f))
    core = el_tensor(el_tensor(f, inner), f)
    return _cap_with_projectors(core, 2 * n)


def _word(*tokens: str) -> SingularBraidWord:
    return SingularBraidWord.from_tokens(2, tokens)


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}{tail}"

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def check_crossing_expansion_color2() -> IdentityCheck:
    """X+ = A^4 (f2 x f2) + A^-4 (capped turnback) + (A^2 + A^-2) V in TL_4."""
    a = LaurentPoly.monomial
    rhs = (
        colored_basis_element(2, 2) * a(4)
        + colored_basis_element(2, 0) * a(-4)
        + singular_vertex(2) * (a(2) + a(-2))
    )
    ok = cabled_crossing(2, 1) == rhs
    return IdentityCheck("crossing = A^4 E_vert + A^-4 E_turn + (A^2+A^-2) V  [color 2]", ok)


def check_vertex_crossing(n: int) -> list[IdentityCheck]:
    """V X^-+ = (-1)^n A^(+-(3n^2+2n)) times the split-rotated element."""
    sign = -1 if n % 2 else 1
    k = 3 * n * n + 2 * n
    color = 2 * n
    out = []
    for letter, s, e in (("S1", -1, k), ("s1", 1, -k)):
        lhs = rho_hat(_word("t1", letter), color)
        rhs = split_rotated(n, s) * LaurentPoly.monomial(e, sign)
        out.append(
            IdentityCheck(
                f"t1 {letter} = (-1)^n A^{e} Z{'+' if s > 0 else '-'}  [n={n}]", lhs == rhs
            )
        )
    return out


def check_vertex_conjugation(n: int) -> list[IdentityCheck]:
    """Both ``S1 t1 s1`` and ``s1 t1 S1`` reduce to the bare vertex."""
    color = 2 * n
    v = singular_vertex(color)
    return [
        IdentityCheck(f"{' '.join(w)} = t1  [n={n}]", rho_hat(_word(*w), color) == v)
        for w in (("S1", "t1", "s1"), ("s1", "t1", "S1"))
    ]


def check_inner_projectors(n: int) -> IdentityCheck:
    ok = vertex_with_inner_projectors(n) == singular_vertex(2 * n)
    return IdentityCheck(f"vertex with internal f^({n}) = vertex  [n={n}]", ok)
