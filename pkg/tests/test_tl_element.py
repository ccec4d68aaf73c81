import itertools
import random
import threading

import pytest

from singular_jones.algebra import LaurentPoly, RationalFn, delta, loop_value
from singular_jones.tl_diagram import BoundError, cup_cap, enumerate_basis, identity
from singular_jones.tl_element import (
    TLElement,
    el_trace,
    embed,
    jones_wenzl,
    right_close,
)

M = LaurentPoly.monomial
rng = random.Random(11)


def random_element(m, terms=3):
    basis = enumerate_basis(m)
    return TLElement(
        m, {rng.choice(basis): RationalFn(M(rng.randint(-3, 3), rng.randint(-4, 4)), M(0) + M(rng.choice((0, 2)))) for _ in range(terms)}
    )


def symmetrizer(n):
    """Projector from the positive-braid symmetrizer: sum (A^3)^len T_pi / sum A^(4 len)."""

    def sigma(i):
        return TLElement(n, {identity(n): M(1), cup_cap(n, i): M(-1)})

    def reduced(perm):
        arr, out = list(perm), []
        for _ in range(n):
            for j in range(n - 1):
                if arr[j] > arr[j + 1]:
                    arr[j], arr[j + 1] = arr[j + 1], arr[j]
                    out.append(j + 1)
        return out

    num = TLElement.zero(n)
    norm = LaurentPoly()
    for perm in itertools.permutations(range(n)):
        word = reduced(perm)
        t = TLElement.one(n)
        for i in word:
            t = t * sigma(i)
        num = num + t * M(3 * len(word))
        norm = norm + M(4 * len(word))
    return num * RationalFn(1, norm)


@pytest.mark.parametrize("n", range(1, 7))
def test_idempotent_and_trace(n):
    f = jones_wenzl(n)
    assert f * f == f
    assert el_trace(f) == RationalFn(delta(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_hook_kill(n):
    f = jones_wenzl(n)
    for i in range(1, n):
        e = TLElement.e(n, i)
        assert (e * f).is_zero() and (f * e).is_zero()


def test_absorption():
    for total in range(2, 7):
        for a in range(1, total):
            f = jones_wenzl(total)
            assert (jones_wenzl(a) @ jones_wenzl(total - a)) * f == f
            assert f * (jones_wenzl(a) @ jones_wenzl(total - a)) == f


def test_trace_up_to_eight():
    for n in (7, 8):
        assert el_trace(jones_wenzl(n)) == RationalFn(delta(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_symmetrizer_oracle(n):
    assert symmetrizer(n) == jones_wenzl(n)


def test_projector_denominators():
    # every denominator divides the product of Delta_1 .. Delta_{n-1}
    for n in range(2, 7):
        prod = LaurentPoly.constant(1)
        for k in range(1, n):
            prod = prod * delta(k)
        for _, c in jones_wenzl(n).items():
            assert (RationalFn(prod) * c).is_laurent()


def test_projector_bound():
    with pytest.raises(BoundError):
        jones_wenzl(9)
    with pytest.raises(ValueError):
        jones_wenzl(0)


def test_traces_and_units():
    d = RationalFn(loop_value())
    for m in range(1, 5):
        assert el_trace(TLElement.one(m)) == d ** m
    assert el_trace(TLElement.e(2, 1)) == d
    e = TLElement.e(3, 2)
    assert e * e == e * d


def test_associativity_random():
    for _ in range(25):
        m = rng.randint(1, 5)
        a, b, c = (random_element(m) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_json_roundtrip_sorted():
    f = jones_wenzl(3)
    data = f.to_json()
    assert [t[0] for t in data["terms"]] == sorted(t[0] for t in data["terms"])
    assert TLElement.from_json(data) == f


def test_embed_and_close():
    f2 = jones_wenzl(2)
    x = embed(f2, 4, 1)
    assert x.width == 4
    # closing the right strand of f^(2) gives Delta_2 / Delta_1 times a strand
    r = right_close(f2, 1)
    assert r == TLElement.one(1) * RationalFn(delta(2), delta(1))
    with pytest.raises(ValueError):
        embed(f2, 2, 1)


def test_width_mismatch():
    with pytest.raises(ValueError):
        TLElement.one(2) * TLElement.one(3)


def test_vertex_expansion_structure():
    # (f2 x f2) U (f2 x f2) expands into 16 products of cup-cap words
    d = RationalFn(loop_value())
    f2 = jones_wenzl(2)
    assert {c for _, c in f2.items()} == {RationalFn(1), -d.inverse()}
    ff = list((f2 @ f2).items())
    assert len(ff) == 4
    u = TLElement(4, {cup_cap(4, 2): 1})
    pieces = [(c1 * c2, TLElement.basis(m1) * u * TLElement.basis(m2)) for m1, c1 in ff for m2, c2 in ff]
    assert len(pieces) == 16
    prefactors = {c for c, _ in pieces}
    assert prefactors == {RationalFn(1), -d.inverse(), d.inverse() ** 2, -(d.inverse() ** 3), d.inverse() ** 4}
    # the 1/d^4 product closes exactly one loop
    ((_, last),) = [(c, x) for c, x in pieces if c == d.inverse() ** 4]
    ((_, scalar),) = last.items()
    assert scalar == d
    total = TLElement.zero(4)
    for c, x in pieces:
        total = total + x * c
    assert total == (f2 @ f2) * u * (f2 @ f2)


def test_concurrent_projector_cache():
    from singular_jones import tl_element

    tl_element._jw_cache.clear()
    out = []

    def work():
        out.append(jones_wenzl(5))

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(x == out[0] for x in out) and out[0] * out[0] == out[0]
