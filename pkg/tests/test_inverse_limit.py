from fractions import Fraction

import pytest
from hypothesis import given

from continua.errors import DepthError, DomainError, PreconditionError
from continua.foundations import EventuallyPeriodicSet, cofinite
from continua.inverse_limit import (
    TENT_SYSTEM,
    InverseSystem,
    ThreadPoint,
    certify_threads,
    compare_level,
    epsilon_map_modulus,
    fiber_diameter_bound,
    inverse_limit_order,
    is_zero_minimal,
    level_trace,
    metric_upper_bound,
    tent_index_sets,
)
from continua.pl_maps import TENT, PLMap, evaluate, iterated_preimage_set
from continua.ultrafilter import Comparison, VerdictKind
from tests.strategies import periodic_sets

F = Fraction
HALF = F(1, 2)


def periodic(text: str) -> ThreadPoint:
    return ThreadPoint.from_branches(HALF, EventuallyPeriodicSet.parse(text))


class TestThreads:
    def test_zero_thread(self):
        assert ThreadPoint.zero().coordinate(7) == 0

    def test_branch_word(self):
        p = ThreadPoint.from_branches(HALF, [0, 1])
        assert p.coordinates(2) == [HALF, F(1, 4), F(7, 8)]
        assert p.coordinate(2) in iterated_preimage_set(TENT, HALF, 2)

    def test_finite_word_has_a_depth(self):
        p = ThreadPoint.from_branches(HALF, [1, 1, 0])
        assert p.max_depth == 3
        with pytest.raises(DepthError):
            p.coordinates(4)

    def test_periodic_bits_index_absolute_levels(self):
        p = periodic("even")
        assert p.is_infinite
        # level 1 is odd: smaller preimage, level 2 even: larger preimage
        assert p.coordinates(2) == [HALF, F(1, 4), F(7, 8)]

    def test_stem_must_be_a_thread(self):
        with pytest.raises(DomainError):
            ThreadPoint.from_stem([HALF, F(1, 3)])
        with pytest.raises(DomainError):
            ThreadPoint.from_stem([])
        with pytest.raises(DomainError):
            ThreadPoint.from_stem([F(3, 2)])

    @given(periodic_sets())
    def test_coordinates_satisfy_the_bonding_map(self, word):
        coords = ThreadPoint.from_branches(HALF, word).coordinates(20)
        assert all(evaluate(TENT, b) == a for a, b in zip(coords, coords[1:]))

    def test_with_stem_keeps_the_point(self):
        p = ThreadPoint.from_branches(HALF, [0, 1, 1, 0])
        q = p.with_stem(2)
        assert q.coordinates(4) == p.coordinates(4)

    def test_constant_system(self):
        system = InverseSystem.constant(TENT, "tent again")
        assert system == TENT_SYSTEM
        assert system.is_tent
        assert not InverseSystem.constant(PLMap.from_points([(0, 0), (1, 1)])).is_tent


class TestLevelComparison:
    def test_equal_threads(self):
        p = periodic("odd")
        assert set(level_trace(p, p, 10).outcomes) == {Comparison.EQ}

    def test_first_level(self):
        x = ThreadPoint.from_stem([HALF, F(1, 4)])
        y = ThreadPoint.from_stem([HALF, F(3, 4)])
        assert compare_level(x, y, 1) is Comparison.LT
        assert level_trace(x, y, 1).to_list() == ["EQ", "LT"]

    @given(periodic_sets(), periodic_sets())
    def test_exact_index_sets_match_the_trace(self, a, b):
        x, y = ThreadPoint.from_branches(HALF, a), ThreadPoint.from_branches(HALF, b)
        le, ge = tent_index_sets(x, y)
        for n, outcome in enumerate(level_trace(x, y, 30).outcomes):
            assert le.member(n) == (outcome is not Comparison.GT)
            assert ge.member(n) == (outcome is not Comparison.LT)

    def test_exact_index_sets_need_infinite_threads(self):
        with pytest.raises(DepthError):
            tent_index_sets(ThreadPoint.from_branches(HALF, [0]), periodic("all"))


class TestOrder:
    def test_zero_thread_is_below(self, tower):
        verdict = inverse_limit_order(ThreadPoint.zero(), periodic("all"), tower, 20)
        assert verdict.kind is VerdictKind.STABILIZED
        assert verdict.relation is Comparison.LT

    def test_same_thread(self, tower):
        p = periodic("mod:3:0")
        verdict = inverse_limit_order(p, p, tower, 20)
        assert verdict.kind is VerdictKind.STABILIZED
        assert verdict.relation is Comparison.EQ

    def test_stem_only_threads_are_unknown(self, tower):
        x = ThreadPoint.from_branches(HALF, [0, 1, 0])
        y = ThreadPoint.from_branches(HALF, [1, 1, 0])
        assert certify_threads(x, y) is None
        verdict = inverse_limit_order(x, y, tower, 3)
        assert verdict.kind is VerdictKind.UNKNOWN
        assert not verdict.decided

    def test_ultrafilter_dependent_pairs_flip_with_the_tower(self, evens_tower, odds_tower):
        x, y = periodic("even"), periodic("odd")
        # x is below y on odd levels and above it on even ones
        first = inverse_limit_order(x, y, evens_tower, 20)
        second = inverse_limit_order(x, y, odds_tower, 20)
        assert first.kind is VerdictKind.ULTRAFILTER_DEPENDENT
        assert first.relation is Comparison.GT
        assert second.relation is Comparison.LT

    def test_zero_is_minimal(self, tower):
        samples = [periodic(text) for text in ("all", "empty", "even", "odd", "mod:3:0")]
        assert is_zero_minimal(samples, tower, 20)
        assert not is_zero_minimal([ThreadPoint.from_branches(HALF, [0, 1])], tower, 2)


class TestModulus:
    @pytest.mark.parametrize("n, bound", [(0, F(1)), (10, F(1, 2**10)), (20, F(1, 2**20))])
    def test_fiber_bound(self, n, bound):
        assert fiber_diameter_bound(TENT_SYSTEM, n) == bound

    def test_fiber_bound_halves(self):
        for n in range(30):
            assert fiber_diameter_bound(TENT_SYSTEM, n) <= 2 * fiber_diameter_bound(TENT_SYSTEM, n + 1)

    def test_whole_space(self):
        assert epsilon_map_modulus(TENT_SYSTEM, 0, F(2)) == 1

    @pytest.mark.parametrize("n", [3, 5])
    def test_modulus_bounds_projection_fibers(self, n):
        eps = F(2, 2**n)
        delta = epsilon_map_modulus(TENT_SYSTEM, n, eps)
        assert 0 < delta <= 1
        for k in range(65):
            a = F(k, 64) * (1 - delta / 2)
            xs, ys = [a], [a + delta / 2]
            for _ in range(n):
                xs.insert(0, evaluate(TENT, xs[0]))
                ys.insert(0, evaluate(TENT, ys[0]))
            x, y = ThreadPoint.from_stem(xs), ThreadPoint.from_stem(ys)
            assert metric_upper_bound(x, y, n) < eps

    def test_eps_below_the_fiber_bound(self):
        with pytest.raises(PreconditionError):
            epsilon_map_modulus(TENT_SYSTEM, 3, F(1, 8))


def test_positive_thread_against_zero():
    le, ge = tent_index_sets(periodic("even"), ThreadPoint.zero())
    assert le.is_empty()
    assert ge == cofinite(0)
