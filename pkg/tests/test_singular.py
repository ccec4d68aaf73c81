import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singular_jones.algebra import LaurentPoly, RationalFn, delta
from singular_jones.config import bounds
from singular_jones.singular import (
    SingularBraidWord,
    WordParseError,
    cabled_crossing,
    check_crossing_expansion_color2,
    check_inner_projectors,
    check_relations,
    check_vertex_conjugation,
    check_vertex_crossing,
    colored_basis_element,
    elementary_crossing,
    parse_word,
    projector_power,
    relations,
    rho_hat,
    rho_hat_naive,
    singular_vertex,
)
from singular_jones.tl_diagram import BoundError, cup_cap, identity
from singular_jones.tl_element import TLElement, el_trace, jones_wenzl

M = LaurentPoly.monomial


class TestParse:
    def test_examples(self):
        w = parse_word("strands=2 t1 s1")
        assert w.strands == 2 and w.letters == (("sing", 1), ("pos", 1))
        assert parse_word("strands=2").letters == ()
        assert str(parse_word("strands=3  s1\tS2\n t1")) == "strands=3 s1 S2 t1"

    def test_index_error_names_token(self):
        with pytest.raises(WordParseError) as exc:
            parse_word("strands=2 s3")
        assert exc.value.token == "s3" and exc.value.offset == 10

    @pytest.mark.parametrize(
        "text, offset",
        [("", 0), ("s1", 0), ("strands=x s1", 0), ("strands=2 s1 q1", 13), ("strands=2 s0", 10), ("strands=0", 0)],
    )
    def test_errors(self, text, offset):
        with pytest.raises(WordParseError) as exc:
            parse_word(text)
        assert exc.value.offset == offset

    def test_byte_offsets(self):
        with pytest.raises(WordParseError) as exc:
            parse_word("strands=2 s1 é")
        assert exc.value.offset == 13
        with pytest.raises(WordParseError) as exc:
            parse_word("strands=2 éé s1")
        assert exc.value.offset == 10

    def test_word_api(self):
        w = parse_word("strands=3 s1 S2 t1 s2")
        assert w.writhe == 1 and w.singular_count == 1 and not w.is_classical()
        assert SingularBraidWord.from_json(w.to_json()) == w
        assert w.to_json() == {"strands": 3, "letters": [["s", 1], ["S", 2], ["t", 1], ["s", 2]]}
        c = parse_word("strands=3 s1 S2")
        assert c.inverse() == parse_word("strands=3 s2 S1")
        assert c.shifted(1).letters == (("pos", 2), ("neg", 3)) and c.shifted(1).strands == 4
        with pytest.raises(ValueError):
            w.inverse()
        with pytest.raises(IndexError):
            SingularBraidWord(2, (("pos", 2),))


class TestGenerators:
    def test_elementary(self):
        p, n = elementary_crossing(1), elementary_crossing(-1)
        assert p == TLElement(2, {identity(2): M(1), cup_cap(2, 1): M(-1)})
        assert n == TLElement(2, {identity(2): M(-1), cup_cap(2, 1): M(1)})
        assert p * n == TLElement.one(2) == n * p

    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    def test_cabled_reidemeister_two(self, c):
        assert cabled_crossing(c, 1) * cabled_crossing(c, -1) == projector_power(c, 2)

    def test_cache_is_consistent(self):
        from singular_jones import singular

        a = cabled_crossing(2, 1)
        singular._cache.clear()
        assert cabled_crossing(2, 1) == a and cabled_crossing(2, 1) is not a

    def test_vertex(self):
        v = singular_vertex(2)
        assert el_trace(v) == RationalFn(delta(2) ** 2, delta(1))
        with pytest.raises(ValueError):
            singular_vertex(3)
        with pytest.raises(BoundError):
            singular_vertex(6)

    def test_vertex_basis_traces(self):
        for c in (2, 3, 4):
            for j in range(c + 1):
                want = RationalFn(delta(c) ** 2, delta(c - j))
                assert el_trace(colored_basis_element(c, j)) == want

    def test_vertex_is_bar_invariant_and_rotation_free(self):
        # coefficients of the vertex are symmetric under A -> A^-1
        for _, c in singular_vertex(4).items():
            assert c.bar() == c

    @pytest.mark.parametrize("n", [1, 2])
    def test_inner_projectors(self, n):
        assert check_inner_projectors(n).passed


class TestRepresentation:
    def test_empty_words(self):
        assert rho_hat(SingularBraidWord(1), 2) == jones_wenzl(2)
        assert rho_hat(SingularBraidWord(2), 2) == jones_wenzl(2) @ jones_wenzl(2)

    @pytest.mark.parametrize("color", [2, 4])
    def test_reidemeister_two_words(self, color):
        f = jones_wenzl(color)
        assert rho_hat(parse_word("strands=2 s1 S1"), color) == f @ f

    @pytest.mark.parametrize("color", [2, 4])
    def test_vertex_commutes_with_crossing(self, color):
        assert rho_hat(parse_word("strands=2 t1 s1"), color) == rho_hat(parse_word("strands=2 s1 t1"), color)

    def test_classical_restriction(self):
        # classical letters land on the plain cabled-crossing images
        w = parse_word("strands=3 s1 S2 s1")
        assert rho_hat(w, 2) == rho_hat_naive(w, 2)

    def test_bounds(self):
        with pytest.raises(BoundError):
            rho_hat(SingularBraidWord(4), 4)
        with bounds(max_total_width=6):
            with pytest.raises(BoundError):
                rho_hat(SingularBraidWord(4), 2)
        with pytest.raises(ValueError):
            rho_hat(SingularBraidWord(2), 3)

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(2, 3).flatmap(
            lambda k: st.tuples(
                st.just(k),
                st.lists(st.tuples(st.sampled_from(["pos", "neg", "sing"]), st.integers(1, k - 1)), max_size=4),
            )
        )
    )
    def test_fast_equals_naive(self, data):
        k, letters = data
        w = SingularBraidWord(k, tuple(letters))
        assert rho_hat(w, 2) == rho_hat_naive(w, 2)


class TestRelations:
    def test_instances(self):
        labels = [r.label.split()[0] for r in relations(4)]
        for lab in ("1", "1'", "2a", "2b", "2c", "3", "4a", "4b", "4c"):
            assert lab in labels
        assert [r.label for r in relations(2)] == ["1 (i=1)", "1' (i=1)", "3 (i=1)"]

    @pytest.mark.parametrize("k, color", [(2, 2), (3, 2), (4, 2), (2, 4)])
    def test_all_hold(self, k, color):
        rep = check_relations(k, color)
        assert rep.passed, [line for line in rep.lines() if line.startswith("FAIL")]
        assert rep.to_json()["passed"] is True


class TestIdentities:
    def test_crossing_expansion(self):
        assert check_crossing_expansion_color2().passed

    @pytest.mark.parametrize("n", [1, 2])
    def test_vertex_crossing(self, n):
        assert all(c.passed for c in check_vertex_crossing(n))
        assert all(c.passed for c in check_vertex_conjugation(n))

    def test_wrong_scalar_is_detected(self):
        # the mirror-image scalar must not satisfy the identity
        from singular_jones.singular import split_rotated

        lhs = rho_hat(parse_word("strands=2 t1 s1"), 2)
        assert lhs != split_rotated(1, 1) * M(5, -1)
        assert lhs == split_rotated(1, 1) * M(-5, -1)
