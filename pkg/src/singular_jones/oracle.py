"""Brute-force cabled Kauffman bracket, independent of the TL machinery.

The closure of a classical braid word is cabled by ``c`` parallel copies.
One symmetrizer per link component stands in for the Jones-Wenzl
projector::

    f_c = sum_pi (A^3)^len(pi) T_pi  /  sum_pi A^(4 len(pi))

where ``T_pi`` is the positive permutation braid of ``pi``.  Every
resulting diagram is evaluated by summing over all 2^N Kauffman states and
counting loops with a union-find on the planar picture.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass

from .algebra import LaurentPoly, RationalFn, loop_value
from .singular import SingularBraidWord

__all__ = ["OracleLimitError", "OracleResult", "cabled_bracket", "crossing_budget"]

ENV_MAX_CROSSINGS = "SINGULAR_JONES_ORACLE_MAX_CROSSINGS"


class OracleLimitError(ValueError):
    pass


def crossing_budget() -> int:
    return int(os.environ.get(ENV_MAX_CROSSINGS, "22"))


@dataclass(frozen=True)
class OracleResult:
    blackboard: RationalFn
    zero_framed: RationalFn
    components: int
    crossings: int

    def to_json(self) -> dict:
        return {
            "blackboard": self.blackboard.to_json(),
            "zero_framed": self.zero_framed.to_json(),
            "components": self.components,
            "cabled_crossings": self.crossings,
        }


def _reduced_word(perm: tuple[int, ...]) -> list[int]:
    """Adjacent transpositions (0-based) sorting ``perm`` by bubble sort."""
    arr = list(perm)
    out = []
    changed = True
    while changed:
        changed = False
        for j in range(len(arr) - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                out.append(j)
                changed = True
    return out[::-1]


def _cable_swap(c: int, left: int) -> list[int]:
    """Crossings moving the cable at ``left`` over to the right of its neighbour."""
    # strands left..left+2c-1; the first c must end up last
    arr = list(range(c, 2 * c)) + list(range(c))
    return [left + j for j in _reduced_word(tuple(arr))]


def _components(word: SingularBraidWord) -> list[list[int]]:
    pos = list(range(word.strands))
    for _, i in word.letters:
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    # pos[p] is the strand that ends at position p
    nxt = {pos[p]: p for p in range(word.strands)}
    seen, cycles = set(), []
    for s in range(word.strands):
        if s in seen:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = nxt[x]
        cycles.append(cyc)
    return cycles


def _self_writhe(word: SingularBraidWord) -> int:
    # strand identity at each position, tracked through the word
    comp_of = {}
    for k, cyc in enumerate(_components(word)):
        for s in cyc:
            comp_of[s] = k
    here = list(range(word.strands))
    w = 0
    for kind, i in word.letters:
        a, b = here[i - 1], here[i]
        if comp_of[a] == comp_of[b]:
            w += 1 if kind == "pos" else -1
        here[i - 1], here[i] = b, a
    return w


def _bracket_counts(n_strands: int, crossings: list[tuple[int, int]]) -> Counter:
    """Map (A-exponent, loops) -> number of states for the closed braid diagram."""
    L = len(crossings)
    if L == 0:
        return Counter({(0, n_strands): 1})

    # node (t, p) = level t in [0, L), position p; level L is glued to level 0
    def node(t, p):
        return (t % L) * n_strands + p

    size = L * n_strands

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # strands not involved in a crossing pass straight through every state
    base = list(range(size))
    for t, (p, _) in enumerate(crossings):
        for q in range(n_strands):
            if q != p and q != p + 1:
                ra, rb = find(base, node(t, q)), find(base, node(t + 1, q))
                if ra != rb:
                    base[ra] = rb
    base = [find(base, x) for x in range(size)]
    roots = len(set(base))
    pairs = []
    for t, (p, sign) in enumerate(crossings):
        vertical = ((base[node(t, p)], base[node(t + 1, p)]), (base[node(t, p + 1)], base[node(t + 1, p + 1)]))
        turn = ((base[node(t, p)], base[node(t, p + 1)]), (base[node(t + 1, p)], base[node(t + 1, p + 1)]))
        pairs.append((vertical, turn, sign))

    counts: Counter = Counter()
    for state in itertools.product((0, 1), repeat=L):
        parent = {}

        def f(x):
            while x in parent:
                x = parent[x]
            return x

        merges = 0
        expo = 0
        for (vertical, turn, sign), smooth in zip(pairs, state):
            # smooth 0: vertical (weight A^sign); smooth 1: cup-cap (weight A^-sign)
            edges = turn if smooth else vertical
            expo += -sign if smooth else sign
            for a, b in edges:
                ra, rb = f(a), f(b)
                if ra != rb:
                    parent[ra] = rb
                    merges += 1
        counts[(expo, roots - merges)] += 1
    return counts


def cabled_bracket(word: SingularBraidWord, color: int) -> OracleResult:
    """Colored bracket of the closure of a classical ``word``, cables of ``color``."""
    if not word.is_classical():
        raise ValueError("the oracle evaluates classical words only")
    c = color
    n_strands = c * word.strands
    body: list[tuple[int, int]] = []
    for kind, i in word.letters:
        sign = 1 if kind == "pos" else -1
        body.extend((p, sign) for p in _cable_swap(c, (i - 1) * c))
    comps = _components(word)
    perms = list(itertools.permutations(range(c)))
    per_perm = [(len(_reduced_word(p)), _reduced_word(p)) for p in perms]
    worst = len(body) + len(comps) * max(l for l, _ in per_perm)
    if worst > crossing_budget():
        raise OracleLimitError(
            f"{worst} crossings exceed the oracle budget {crossing_budget()} ({ENV_MAX_CROSSINGS})"
        )
    d = loop_value()
    total = LaurentPoly(0)
    for choice in itertools.product(per_perm, repeat=len(comps)):
        prefix: list[tuple[int, int]] = []
        weight = 0
        for cyc, (length, rw) in zip(comps, choice):
            base = cyc[0] * c
            prefix.extend((base + j, 1) for j in rw)
            weight += 3 * length
        for (expo, loops), k in _bracket_counts(n_strands, prefix + body).items():
            total = total + LaurentPoly.monomial(expo + weight, k) * d ** loops
    norm = LaurentPoly(0)
    for length, _ in per_perm:
        norm = norm + LaurentPoly.monomial(4 * length)
    blackboard = RationalFn(total, norm ** len(comps))
    w = _self_writhe(word)
    kink = LaurentPoly.monomial(c * c + 2 * c, -1 if c % 2 else 1)
    zero = blackboard if w == 0 else blackboard * RationalFn(1, kink ** w)
    return OracleResult(blackboard, zero, len(comps), len(body))
