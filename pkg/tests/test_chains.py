from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from continua.catalog import get_space, separation_data
from continua.chains import (
    ChainLevel,
    ChainSequence,
    IntervalChain,
    LevelRelation,
    all_total_orders,
    canonical_interval_chain,
    chain_order_compare,
    equal_or_opposite,
    finest_needed,
    level_preorder,
    never_between_after,
    pullback_chain,
    reverse,
    sorted_order,
    triple_hypothesis,
)
from continua.errors import CertificateError, DepthError, DomainError, PreconditionError
from continua.foundations import IndexRange, cofinite, finite
from continua.inverse_limit import TENT_SYSTEM, ThreadPoint
from continua.ultrafilter import Certificate, Comparison, ComparisonVerdict, VerdictKind
from tests.strategies import unit_rationals

F = Fraction


def fixed_level(ranges: dict, k: int = 10) -> ChainLevel:
    return ChainLevel(1, k, F(1, 10), lambda p: IndexRange(*ranges[p]), "fixed")


class TestLevelPreorder:
    def test_separated_links(self):
        d = fixed_level({"x": (2, 2), "y": (5, 5)})
        assert level_preorder(d, "x", "y") is LevelRelation.LE_ONLY
        assert level_preorder(d, "y", "x") is LevelRelation.GE_ONLY

    def test_same_link(self):
        d = fixed_level({"x": (3, 3), "y": (3, 3)})
        assert level_preorder(d, "x", "y") is LevelRelation.BOTH

    def test_shared_link(self):
        d = fixed_level({"x": (3, 4), "y": (4, 5)})
        assert level_preorder(d, "x", "y") is LevelRelation.BOTH

    def test_reverse(self):
        d = fixed_level({"x": (2, 2), "y": (5, 5)})
        r = reverse(d)
        assert r.index_of("x") == IndexRange(9, 9)
        assert level_preorder(r, "x", "y") is LevelRelation.GE_ONLY

    def test_link_beyond_the_chain(self):
        d = fixed_level({"x": (11, 11)})
        with pytest.raises(DomainError):
            d.index_of("x")


class TestIntervalChain:
    def test_single_link_covers_everything(self):
        chain = canonical_interval_chain(1)
        assert chain.contains(1, F(0)) and chain.contains(1, F(1))
        assert chain.covers_unit()

    def test_four_links(self):
        chain = IntervalChain(4)
        assert chain.link(2)[:2] == (F(3, 16), F(9, 16))
        assert not chain.intersects(2, 4)
        assert chain.intersects(2, 3)
        assert chain.index_range(F(1, 2)) == IndexRange(2, 3)
        assert chain.mesh() == F(3, 8)

    def test_bad_chains(self):
        with pytest.raises(DomainError):
            IntervalChain(0)
        with pytest.raises(DomainError):
            IntervalChain(4).index_range(F(5, 4))

    @given(st.integers(1, 40), unit_rationals())
    def test_index_range_matches_membership(self, k, t):
        chain = IntervalChain(k)
        rng = chain.index_range(t)
        assert [i for i in range(1, k + 1) if chain.contains(i, t)] == list(range(rng.lo, rng.hi + 1))

    @given(st.integers(1, 40))
    def test_canonical_chains_cover(self, k):
        chain = IntervalChain(k)
        assert chain.covers_unit()
        assert all(chain.intersects(i, i + 1) for i in range(1, k))
        assert not any(chain.intersects(i, i + 2) for i in range(1, k - 1))


class TestPullback:
    def test_coarse_chain_is_rejected(self):
        with pytest.raises(PreconditionError):
            pullback_chain(TENT_SYSTEM, 3, IntervalChain(4))

    def test_levels_start_at_one(self):
        with pytest.raises(DomainError):
            pullback_chain(TENT_SYSTEM, 0, IntervalChain(4))

    def test_finest_needed_is_accepted(self):
        for n in range(1, 8):
            d = pullback_chain(TENT_SYSTEM, n, finest_needed(TENT_SYSTEM, n))
            assert d.mesh_bound == F(1, 2**n) + F(1, n)
            assert d.index_of(ThreadPoint.zero()).lo == 1

    def test_equal_coordinates_share_a_link(self):
        d = pullback_chain(TENT_SYSTEM, 2, finest_needed(TENT_SYSTEM, 2))
        x = ThreadPoint.from_branches(F(1, 2), [0, 1, 0])
        y = ThreadPoint.from_branches(F(1, 2), [0, 1, 1])
        assert level_preorder(d, x, y) is LevelRelation.BOTH


class TestSequences:
    def test_level_bounds(self):
        seq = ChainSequence("fixed", lambda n: fixed_level({}), max_level=3)
        with pytest.raises(DomainError):
            seq.level(0)
        with pytest.raises(DepthError):
            seq.level(4)

    def test_arc_comparison(self, tower):
        arc = get_space("arc")
        verdict = chain_order_compare(arc.family("standard"), arc.point("1/4"), arc.point("3/4"), tower, 20)
        assert verdict.kind is VerdictKind.STABILIZED
        assert verdict.relation is Comparison.LT
        assert verdict.threshold == 3
        flipped = chain_order_compare(arc.family("reversed"), arc.point("1/4"), arc.point("3/4"), tower, 20)
        assert flipped.relation is Comparison.GT
        same = chain_order_compare(arc.family("standard"), arc.point("1/4"), arc.point("1/4"), tower, 20)
        assert same.relation is Comparison.EQ

    def test_wrong_certificate_is_caught(self, tower):
        d = fixed_level({"x": (2, 2), "y": (5, 5)})
        wrong = Certificate(1, finite(()), cofinite(1), "claims x above y")
        seq = ChainSequence("fixed", lambda n: d, certify=lambda x, y: wrong)
        with pytest.raises(CertificateError):
            chain_order_compare(seq, "x", "y", tower, 4)

    def test_arc_mesh_shrinks(self):
        assert get_space("arc").family("standard").mesh_is_shrinking(10)


class TestBetweenness:
    def test_arc_triple(self):
        arc = get_space("arc")
        sep = separation_data(arc, "0", "1/2", "3/4")
        assert sep.threshold_mesh == F(1, 8)
        result = never_between_after(
            arc.family("standard"), arc.point("0"), arc.point("1/2"), arc.point("3/4"), sep.threshold_mesh, 12
        )
        assert result.holds
        assert result.levels_checked

    def test_degenerate_triple(self):
        arc = get_space("arc")
        p, q = arc.point("0"), arc.point("1/2")
        with pytest.raises(PreconditionError):
            never_between_after(arc.family("standard"), p, q, q, F(1, 8), 5)


class TestOrderClassification:
    def test_examples(self):
        assert equal_or_opposite([1, 2, 3], [1, 2, 3]) == "equal"
        assert equal_or_opposite([1, 2, 3], [3, 2, 1]) == "opposite"
        assert equal_or_opposite([1, 2, 3], [2, 1, 3]) == "neither"
        assert not triple_hypothesis([1, 2, 3], [2, 1, 3])

    def test_different_elements(self):
        with pytest.raises(DomainError):
            equal_or_opposite([1, 2], [1, 3])
        with pytest.raises(DomainError):
            equal_or_opposite([1, 1], [1, 1])

    @pytest.mark.parametrize("size", [3, 4])
    def test_triples_decide_equal_or_opposite(self, size):
        for first in all_total_orders(range(size)):
            for second in all_total_orders(range(size)):
                assert triple_hypothesis(first, second) == (equal_or_opposite(first, second) != "neither")


def _stabilized(a, b) -> ComparisonVerdict:
    return ComparisonVerdict(VerdictKind.STABILIZED, Comparison.of(a, b), 1)


class TestSortedOrder:
    def test_numbers(self):
        check = sorted_order(["c", "a", "b"], [3, 1, 2], _stabilized)
        assert check.passed
        assert check.order == (("a",), ("b",), ("c",))

    def test_ties_share_a_group(self):
        check = sorted_order(["x", "y", "z"], [1, 1, 0], _stabilized)
        assert check.order == (("z",), ("x", "y"))

    def test_undecided_pairs(self):
        check = sorted_order(
            ["x", "y"], [1, 2], lambda a, b: ComparisonVerdict(VerdictKind.UNKNOWN, None, 4)
        )
        assert not check.total
        assert check.undecided == [("x", "y")]
        assert check.order == ()

    def test_cycles_break_transitivity(self):
        beats = {(0, 1), (1, 2), (2, 0)}

        def rock_paper_scissors(a, b):
            if a == b:
                return _stabilized(0, 0)
            return _stabilized(0, 1) if (a, b) in beats else _stabilized(1, 0)

        check = sorted_order(["rock", "paper", "scissors"], [0, 1, 2], rock_paper_scissors)
        assert check.violations
        assert not check.passed

    def test_each_pair_is_compared_once(self):
        calls = []

        def counted(a, b):
            calls.append((a, b))
            return _stabilized(a, b)

        check = sorted_order(["a", "b", "c", "d"], [1, 2, 3, 4], counted)
        assert len(calls) == 6
        assert check.order == (("a",), ("b",), ("c",), ("d",))
        calls.clear()
        assert sorted_order(["a", "b", "c", "d"], [1, 2, 3, 4], counted, both_ways=True).passed
        assert len(calls) == 12

    def test_antisymmetry_needs_both_ways(self):
        def always_below(a, b):
            return _stabilized(0, 0) if a == b else _stabilized(0, 1)

        assert sorted_order(["x", "y"], [1, 2], always_below).passed
        check = sorted_order(["x", "y"], [1, 2], always_below, both_ways=True)
        assert check.violations == ["antisymmetry x / y"]
