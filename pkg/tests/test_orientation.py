import pytest
from hypothesis import given
from hypothesis import strategies as st

from continua.errors import DomainError
from continua.orientation import (
    Parity,
    apply_composition,
    as_word,
    check_cover,
    check_decomposition,
    check_reach,
    composition_parity,
    cover_targets,
    cylinder_words,
    decompose_on_cylinder,
    flip,
    in_a_n,
    reach_with_parity,
    word_str,
)
from tests.strategies import words


class TestWords:
    @pytest.mark.parametrize("n, word, expected", [(0, "0110", "1001"), (2, "0110", "0101"), (3, "0110", "0111")])
    def test_flip(self, n, word, expected):
        assert word_str(flip(n, as_word(word))) == expected

    def test_flip_outside_the_word(self):
        with pytest.raises(DomainError):
            flip(4, as_word("0110"))

    @given(words(min_size=1, max_size=10), st.integers(0, 9))
    def test_flip_is_an_involution(self, w, n):
        n = n % len(w)
        assert flip(n, flip(n, w)) == w

    def test_as_word(self):
        assert as_word("01 1") == (0, 1, 1)
        with pytest.raises(DomainError):
            as_word([0, 2])

    @pytest.mark.parametrize(
        "n, word, member", [(0, "", True), (1, "10", True), (1, "01", False), (2, "011", True), (2, "11", False)]
    )
    def test_a_n(self, n, word, member):
        assert in_a_n(n, as_word(word)) is member

    def test_a_n_needs_enough_bits(self):
        with pytest.raises(DomainError):
            in_a_n(3, as_word("00"))

    def test_cylinder(self):
        assert cylinder_words(as_word("1"), 3) == [(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
        with pytest.raises(DomainError):
            cylinder_words(as_word("101"), 2)


class TestCompositions:
    def test_parity(self):
        assert composition_parity([]) is Parity.EVEN
        assert composition_parity([0, 1, 0]) is Parity.ODD

    def test_last_index_is_applied_first(self):
        w = as_word("0000")
        assert apply_composition([1, 0], w) == flip(1, flip(0, w))

    @given(words(min_size=4, max_size=8), st.lists(st.integers(0, 3), max_size=6))
    def test_flips_commute(self, w, c):
        assert apply_composition(c, w) == apply_composition(sorted(c), w)


class TestDecomposition:
    @pytest.mark.parametrize(
        "prefix, composition", [("0", (0, 1, 0)), ("1", (1,)), ("101", (0, 1, 3, 1, 0)), ("001", (3,))]
    )
    def test_examples(self, prefix, composition):
        dec = decompose_on_cylinder(len(prefix), prefix)
        assert dec.composition == composition
        assert composition_parity(dec.composition) is Parity.ODD
        assert check_decomposition(dec, len(prefix) + 3)

    def test_prefix_length(self):
        with pytest.raises(DomainError):
            decompose_on_cylinder(2, "1")

    @given(words(min_size=0, max_size=5))
    def test_every_cylinder(self, prefix):
        dec = decompose_on_cylinder(len(prefix), prefix)
        assert len(dec.composition) % 2 == 1
        assert check_decomposition(dec, len(prefix) + 2)


class TestReach:
    def test_shorter_source(self):
        r = reach_with_parity("0", "11", Parity.ODD, 4)
        assert r.composition == (0,)
        assert r.sub_cylinder == (0, 0)
        assert r.image == (1, 1)
        assert check_reach(r, 4)

    def test_longer_source_keeps_its_tail(self):
        r = reach_with_parity("011", "1", "even", 6)
        assert r.image == (1, 1, 1)
        assert r.parity is Parity.EVEN
        assert check_reach(r, 6)

    def test_depth_must_leave_room(self):
        with pytest.raises(DomainError):
            reach_with_parity("01", "1", Parity.ODD, 3)

    @given(words(max_size=3), words(max_size=3), st.sampled_from(list(Parity)))
    def test_every_pair_of_cylinders(self, s, target, parity):
        r = reach_with_parity(s, target, parity, 6)
        assert composition_parity(r.composition) is parity
        assert check_reach(r, 6)

    @pytest.mark.parametrize("parity", list(Parity))
    def test_cover(self, parity):
        reaches = cover_targets("01", parity, 2, 6)
        assert len(reaches) == 4
        assert check_cover(reaches, 2, 6)

    def test_serialized(self):
        r = reach_with_parity("0", "11", Parity.ODD, 4)
        assert r.to_dict() == {
            "from": "0",
            "to": "11",
            "parity": "odd",
            "composition": [0],
            "sub_cylinder": "00",
            "image": "11",
        }
