from fractions import Fraction
from itertools import combinations

import pytest

from continua.catalog import (
    CatalogPoint,
    arc_chain_family,
    compare,
    component_of,
    get_space,
    list_spaces,
    orders_count,
    s1_chain_family,
    s2_chain_family,
    s3_chain_family,
    separation_data,
    t_chain_family,
)
from continua.catalog.forest import all_prefixes, covering_pattern, folded_height
from continua.catalog.sine import level_pattern, s2_pattern, triangle
from continua.catalog.space_t import component_order, shadow
from continua.catalog.validator import validate_level
from continua.chains import LevelRelation, level_preorder
from continua.errors import ConfigError, DepthError, DomainError, PreconditionError
from continua.ultrafilter import Comparison, VerdictKind

F = Fraction


class TestRegistry:
    def test_lookup(self):
        assert get_space(" ARC ").name == "arc"
        with pytest.raises(ConfigError):
            get_space("circle")

    def test_listing(self):
        names = [entry["name"] for entry in list_spaces()]
        assert names == ["arc", "s1", "s2", "s3", "t", "knaster"]

    def test_points(self):
        assert str(CatalogPoint.parse("1/3")) == "arc:1/3"
        with pytest.raises(DomainError):
            get_space("arc").point("3/2")
        with pytest.raises(DomainError):
            get_space("s1").point("sine:2")

    def test_family_functions(self):
        assert arc_chain_family("standard", 2).k == 4
        assert s1_chain_family("D", 1).k == 16
        assert s2_chain_family("standard", 1).k == 22
        assert s3_chain_family("01", 2).level == 2
        assert t_chain_family("E", 1).level == 1

    def test_unknown_variant(self):
        with pytest.raises(ConfigError):
            get_space("arc").family("sideways")


class TestArc:
    def test_level_relation(self):
        arc = get_space("arc")
        level = arc.level(3, "standard")
        assert level.k == 8
        assert level_preorder(level, arc.point("1/4"), arc.point("3/4")) is LevelRelation.LE_ONLY
        assert level_preorder(arc.level(3, "reversed"), arc.point("1/4"), arc.point("3/4")) is LevelRelation.GE_ONLY

    def test_alternating_family_is_ultrafilter_dependent(self, evens_tower, odds_tower):
        arc = get_space("arc")
        first = compare(arc, "alternating", "1/4", "3/4", evens_tower, 12)
        second = compare(arc, "alternating", "1/4", "3/4", odds_tower, 12)
        assert first.kind is VerdictKind.ULTRAFILTER_DEPENDENT
        # even levels are numbered from the right
        assert first.relation is Comparison.GT
        assert second.relation is Comparison.LT

    def test_two_orders(self, tower):
        result = orders_count(get_space("arc"), tower, 12, arc_grid=5)
        assert result.passed
        assert result.distinct == 2
        assert result.checks["standard"].order == (("0",), ("1/4",), ("1/2",), ("3/4",), ("1",))

    def test_order_count_compares_each_pair_once(self, tower, monkeypatch):
        calls = []

        def counted(*args):
            calls.append(args)
            return compare(*args)

        monkeypatch.setattr("continua.catalog.compare", counted)
        result = orders_count(get_space("arc"), tower, 12, arc_grid=5)
        assert result.distinct == 2
        # two families, ten unordered pairs each
        assert len(calls) == 20

    def test_levels_remember_located_points(self):
        level = get_space("arc").level(6, "standard")
        point = CatalogPoint("arc", F(1, 3))
        level.index_of(point)
        before = level.locate.cache_info().hits
        assert level.index_of(point) == level.index_of(point)
        assert level.locate.cache_info().hits == before + 2

    def test_order_is_closed_along_convergent_sequences(self, tower):
        arc = get_space("arc")
        approaching = [F(1, 2) - F(1, 2**k) for k in range(2, 8)]
        verdicts = [compare(arc, "standard", x, arc.point("3/4"), tower, 20) for x in approaching]
        assert all(v.relation is Comparison.LT for v in verdicts)
        assert compare(arc, "standard", "1/2", "3/4", tower, 20).relation is Comparison.LT

    def test_separation(self):
        arc = get_space("arc")
        with pytest.raises(PreconditionError):
            separation_data(arc, "0", "1", "1/2")

    @pytest.mark.parametrize("variant", ["standard", "alternating"])
    def test_levels_fit_the_geometry(self, variant):
        for n in range(1, 5):
            report = validate_level(get_space("arc"), n, variant)
            assert report.passed, report.to_dict()
            assert report.covered_links == 2**n


class TestSineCurves:
    @pytest.mark.parametrize("text, variant", [("d", "D"), ("dp", "D'"), ("E′", "E'"), ("e prime", None)])
    def test_variant_names(self, text, variant):
        space = get_space("s1")
        if variant is None:
            with pytest.raises(ConfigError):
                space.variant(text)
        else:
            assert space.variant(text) == variant

    def test_triangle_wave(self):
        assert [triangle(F(t)) for t in (3, 4, 5, 6, 7)] == [-1, 0, 1, 0, -1]

    def test_first_level_of_d(self):
        s1 = get_space("s1")
        level = s1.level(1, "D")
        assert level.k == 16
        assert level.index_of(s1.point("sine:3")).lo == 1
        assert level.index_of(s1.point("limit:1")).lo == 13
        assert level.index_of(s1.point("limit:-1")).lo == 16

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_defining_conditions(self, n):
        assert all(get_space("s1").conditions(n).values())

    def test_components(self):
        assert component_of(get_space("s1"), "limit:0") == "limit"
        assert component_of(get_space("s2"), "limit:0") == "outer"

    def test_junctions_are_one_point(self):
        s2 = get_space("s2")
        assert s2.point("limit:-1") == s2.point("bottom:0")
        assert s2.point("bottom:1") == s2.point("left:-1")

    def test_s2_patterns(self):
        assert s2_pattern(Comparison.LT, Comparison.GT) == 1
        assert s2_pattern(Comparison.GT, Comparison.LT) == 4
        assert s2_pattern(Comparison.EQ, Comparison.LT) is None
        s2 = get_space("s2")
        assert {level_pattern(s2, n, "standard") for n in range(1, 6)} == {1}
        assert {level_pattern(s2, n, "reversed") for n in range(1, 6)} == {4}

    def test_separating_continuum_of_the_limit_interval(self):
        s1 = get_space("s1")
        sep = separation_data(s1, "limit:1", "limit:-1", "sine:3")
        assert sep.component == "limit"
        assert sep.threshold_mesh > 0
        with pytest.raises(PreconditionError):
            separation_data(s1, "limit:1", "sine:3", "sine:5")

    @pytest.mark.slow
    def test_four_orders(self, tower):
        result = orders_count(get_space("s1"), tower, 10)
        assert result.passed
        assert result.distinct == 4


class TestComb:
    def test_prefixes(self):
        assert all_prefixes(2) == ["00", "01", "10", "11"]

    def test_folded_height(self):
        assert [folded_height(F(p, 4)) for p in range(5)] == [0, F(1, 2), 1, F(1, 2), 0]

    @pytest.mark.parametrize("prefix", ["011", "100", "000"])
    def test_covering_follows_the_prefix(self, prefix):
        s3 = get_space("s3")
        for m in range(1, len(prefix) + 1):
            assert covering_pattern(s3.level(m, prefix), m) == tuple(int(b) for b in prefix[:m])

    def test_prefix_must_reach_the_level(self):
        with pytest.raises(DepthError):
            s3_chain_family("01", 3)
        with pytest.raises(ConfigError):
            get_space("s3").variant("abc")

    def test_strands_are_generated(self):
        s3 = get_space("s3")
        assert s3.point("i7:1/2").strand == "i7"
        with pytest.raises(DomainError):
            s3.point("i7:2")


class TestSpaceT:
    def test_shadow(self):
        assert shadow(F(0)) == CatalogPoint("sine", F(3))
        # pass 1 runs backwards and starts on the vertical descent
        assert shadow(F(1)).strand == "limit"

    @pytest.mark.parametrize("variant, expected", [("D", ["T3", "T1", "T2"]), ("E", ["T1", "T2", "T3"])])
    def test_component_order(self, tower, variant, expected):
        space = get_space("t")
        reps = {"T1": "limit:0", "T2": "sine:3", "T3": "ray:1/2"}
        verdicts = {
            (a, b): compare(space, variant, reps[a], reps[b], tower, 10) for a, b in combinations(sorted(reps), 2)
        }
        assert all(v.kind is VerdictKind.STABILIZED for v in verdicts.values())
        assert component_order(verdicts) == expected


class TestKnaster:
    def test_points(self):
        space = get_space("knaster")
        assert space.point("zero").coordinate(3) == 0
        with pytest.raises(DomainError):
            space.point("sometimes")

    def test_comparison(self, tower):
        verdict = compare(get_space("knaster"), "pullback", "zero", "all", tower, 10)
        assert verdict.relation is Comparison.LT
        with pytest.raises(ConfigError):
            compare(get_space("knaster"), "other", "zero", "all", tower, 10)

    def test_orders_count_is_refused(self, tower):
        with pytest.raises(ConfigError):
            orders_count(get_space("knaster"), tower, 5)

    @pytest.mark.parametrize("x, y", [("even", "odd"), ("all", "empty"), ("zero", "mod:3:0")])
    def test_chain_relation_matches_coordinates(self, x, y):
        records = get_space("knaster").transfer(x, y, 6)
        assert len(records) == 6
        assert all(record.consistent for record in records)

    def test_mesh(self):
        assert all(row["ok"] for row in get_space("knaster").mesh_check(6))
