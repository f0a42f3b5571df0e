"""
File: orders.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Counting the orders the chain families of a space induce, with the
    space-specific facts each count rests on: opposite arc orders, the
    displayed inequalities of S1, the S2 patterns, the S3 covering rule and
    the component orders of T.
"""

from itertools import combinations

from continua.catalog import compare, get_space, orders_count, separation_data
from continua.catalog.arc import ArcSpace
from continua.catalog.base import StrandSpace
from continua.catalog.forest import S3Space, covering_pattern
from continua.catalog.sine import S1Space, S2Space, level_pattern
from continua.catalog.space_t import TSpace, component_order
from continua.chains import equal_or_opposite, never_between_after, sorted_order
from continua.errors import PreconditionError
from continua.ultrafilter import SimulatedUltrafilter
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec
from utils.logger import logger

EXPECTED = {"arc": 2, "s1": 4, "s2": 2, "t": 2}

# pairs inside one arc component, with points of other components as z
NON_MIXING = {
    "s1": ([("limit:1", "limit:-1"), ("sine:3", "sine:7")], ["limit:0", "limit:1", "sine:3", "sine:5"]),
    "s2": ([("left:-1", "left:1"), ("sine:3", "sine:7")], ["left:1", "bottom:1/2", "sine:3", "sine:5"]),
    "t": (
        [("limit:-1/2", "limit:1/2"), ("sine:5", "sine:7"), ("ray:1/4", "ray:3/4")],
        ["limit:0", "sine:3", "ray:1/2"],
    ),
}


def _flat(order) -> list[str]:
    return [label for group in order for label in group]


def _before(order, a: str, b: str) -> bool:
    flat = _flat(order)
    return flat.index(a) < flat.index(b)


def non_mixing(space: StrandSpace, variant: str, depth: int) -> list[dict]:
    """Points of other arc components never lie between two points of one component."""
    pairs, others = NON_MIXING[space.name]
    family = space.family(variant)
    rows = []
    for x, y in pairs:
        for z in others:
            if space.component_of(space.point(z)) == space.component_of(space.point(x)):
                continue
            try:
                sep = separation_data(space, x, y, z)
            except PreconditionError as err:
                logger.warning(f"{space.name}: no separating continuum for {x}, {y}, {z}: {err}")
                rows.append({"x": x, "y": y, "z": z, "holds": False, "levels": []})
                continue
            result = never_between_after(
                family, space.point(x), space.point(y), space.point(z), sep.threshold_mesh, depth
            )
            rows.append(
                {
                    "x": x,
                    "y": y,
                    "z": z,
                    "threshold_mesh": sep.threshold_mesh,
                    "holds": result.holds and bool(result.levels_checked),
                    "levels": list(result.levels_checked),
                }
            )
    return rows


def _arc_checks(report: Report, space: ArcSpace, result, u: SimulatedUltrafilter, depth: int, grid: int):
    standard, reversed_ = result.checks["standard"].order, result.checks["reversed"].order
    opposite = equal_or_opposite(_flat(standard), _flat(reversed_)) == "opposite"
    report.check("standard and reversed orders are opposite", opposite)
    points = space.grid(grid)
    late = []
    for x, y in combinations(points, 2):
        cert = space.certify("standard", x, y)
        half = abs(x.param - y.param) / 2
        expected = next((n for n in range(1, depth + 1) if space.mesh_bound(n, "standard") < half), None)
        if cert is None or cert.threshold != expected:
            late.append(f"{x} {y}")
    report.traces["late_pairs"] = late
    report.check("every grid pair stabilizes at the first level with mesh below half its distance", not late)
    labels = [str(p.param) for p in points]
    alternating = sorted_order(labels, points, lambda a, b: compare(space, "alternating", a, b, u, depth))
    report.traces["alternating"] = alternating.to_dict()
    report.check(
        "the alternating family realizes one of the two arc orders",
        alternating.passed and alternating.order in (standard, reversed_),
    )


def _s1_checks(report: Report, space: S1Space, result):
    top, bottom, far, near = "(0,1)", "(0,-1)", "(2/7pi,-1)", "(2/3pi,-1)"
    orders = {v: check.order for v, check in result.checks.items()}
    expected = {
        "D": (False, False),
        "D'": (True, False),
        "E": (True, True),
        "E'": (False, True),
    }
    for variant, (bottom_first, far_first) in expected.items():
        order = orders[variant]
        sign, other = ("<" if bottom_first else ">"), ("<" if far_first else ">")
        report.check(f"{variant}: (0,-1) {sign} (0,1)", _before(order, bottom, top) == bottom_first)
        report.check(f"{variant}: (2/7pi,-1) {other} (2/3pi,-1)", _before(order, far, near) == far_first)
    conditions = {n: space.conditions(n) for n in range(1, 5)}
    report.traces["conditions"] = conditions
    report.check("defining conditions of D, D', E, E' hold at levels 1..4", all(
        all(row.values()) for row in conditions.values()
    ))


def _s2_checks(report: Report, space: S2Space, depth: int):
    patterns = {v: [level_pattern(space, n, v) for n in range(1, depth + 1)] for v in space.variants}
    report.traces["patterns"] = patterns
    report.check("standard family gives pattern 1 at every level", set(patterns["standard"]) == {1})
    report.check("reversed family gives pattern 4 at every level", set(patterns["reversed"]) == {4})


def _s3_checks(report: Report, space: S3Space, result):
    wrong = []
    for prefix in result.checks:
        for m in range(1, len(prefix) + 1):
            pattern = covering_pattern(space.level(m, prefix), m)
            if pattern != tuple(int(b) for b in prefix[:m]):
                wrong.append(f"{prefix}@{m}: {pattern}")
    report.traces["covering_mismatches"] = wrong
    report.check("every level m covers I_1..I_m in the directions the prefix gives", not wrong)
    distinct = result.distinct == len(result.checks)
    report.check(f"all {len(result.checks)} prefixes give pairwise distinct orders", distinct)


def _t_checks(report: Report, space: TSpace, u: SimulatedUltrafilter, depth: int):
    reps = {"T1": "limit:0", "T2": "sine:3", "T3": "ray:1/2"}
    expected = {"D": ["T3", "T1", "T2"], "E": ["T1", "T2", "T3"]}
    for variant, wanted in expected.items():
        verdicts = {
            (a, b): compare(space, variant, reps[a], reps[b], u, depth) for a, b in combinations(sorted(reps), 2)
        }
        order = component_order(verdicts)
        report.verdicts[f"components {variant}"] = order
        report.check(f"{variant}: components ordered {' <= '.join(wanted)}", order == wanted)
        rows = non_mixing(space, variant, depth)
        report.traces[f"non_mixing {variant}"] = rows
        holds = all(r["holds"] for r in rows)
        report.check(f"{variant}: no point of another component between two points of one", holds)


def count_orders(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    space = get_space(spec.get("space", ""))
    depth = runner.depth(spec)
    u = runner.tower(spec.get("tower"))
    grid = int(spec.get("arc_grid", runner.config.arc_grid))
    result = orders_count(space, u, depth, arc_grid=grid)
    report = Report(
        "orders-count",
        inputs={"space": space.name, "depth": result.depth, "tower": u.describe()},
        traces={"orders": result.to_dict()},
        verdicts={"distinct": result.distinct},
    )
    report.check("every family gives a total order satisfying the order axioms", result.passed)
    if space.name in EXPECTED:
        report.check(f"{EXPECTED[space.name]} distinct orders", result.distinct == EXPECTED[space.name])
    if isinstance(space, ArcSpace):
        _arc_checks(report, space, result, u, depth, grid)
    elif isinstance(space, S2Space):
        _s2_checks(report, space, depth)
    elif isinstance(space, S1Space):
        _s1_checks(report, space, result)
    elif isinstance(space, S3Space):
        _s3_checks(report, space, result)
    elif isinstance(space, TSpace):
        _t_checks(report, space, u, depth)
    return report


def setup(runner: ExperimentRunner):
    runner.register("orders-count", count_orders, "Distinct orders induced by the chain families of a space")
