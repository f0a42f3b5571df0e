"""
File: axioms.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Seeded sweeps of the laws everything else leans on: the ultrafilter laws
    of the residue towers, the order axioms of every catalog order and the
    classification of pairs of finite total orders.
"""

import random
from itertools import combinations, permutations

from continua.catalog import SPACES, compare
from continua.catalog.arc import ArcSpace
from continua.catalog.sine import S1Space, S2Space
from continua.chains import equal_or_opposite, sorted_order, triple_hypothesis
from continua.foundations import random_set
from continua.ultrafilter import SimulatedUltrafilter, filter_axiom_check
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec
from experiments.orders import non_mixing

# every period random_set can produce divides this
PERIOD_LCM = 60
EXTRA_TOWERS = ("r2=1,r4=3", "fact:5", "r3=2,r9=5")
S3_VARIANTS = ("010110", "111111", "even")
ORACLE_SIZE = 5


def _towers(runner: ExperimentRunner, spec: ExperimentSpec) -> list[SimulatedUltrafilter]:
    base = runner.tower(spec.get("tower"))
    return [tower.extended_for(PERIOD_LCM) for tower in (base, *map(SimulatedUltrafilter.parse, EXTRA_TOWERS))]


def check_filter_axioms(report: Report, runner: ExperimentRunner, spec: ExperimentSpec) -> None:
    pairs = int(spec.get("pairs", runner.config.axiom_pairs))
    seed = runner.seed(spec)
    report.inputs.update({"pairs": pairs, "seed": seed})
    for tower in _towers(runner, spec):
        rng = random.Random(seed)
        failures = []
        for i in range(pairs):
            s, t = random_set(rng), random_set(rng)
            result = filter_axiom_check(tower, s, t)
            if not result.passed:
                failures.append({"pair": i, "s": s.describe(), "t": t.describe(), "laws": result.failures})
        name = tower.describe()
        report.traces[f"filter failures {name}"] = failures
        report.check(f"{name}: {pairs} random set pairs obey the ultrafilter laws", not failures)


def _variants(space) -> list[str]:
    if space.name == "s3":
        return list(S3_VARIANTS)
    return list(space.variants)


def _points(space, grid: int) -> tuple[list[str], list]:
    if isinstance(space, ArcSpace):
        points = space.grid(grid)
        return [str(p.param) for p in points], points
    witnesses = space.witness_points()
    return list(witnesses), list(witnesses.values())


def check_order_axioms(report: Report, runner: ExperimentRunner, spec: ExperimentSpec) -> None:
    depth = runner.depth(spec)
    u = runner.tower(spec.get("tower"))
    grid = int(spec.get("arc_grid", runner.config.arc_grid))
    report.inputs.update({"depth": depth, "tower": u.describe()})
    arc_orders = {}
    for space in SPACES.values():
        labels, points = _points(space, grid)
        for variant in _variants(space):
            check = sorted_order(
                labels, points, lambda x, y, v=variant: compare(space, v, x, y, u, depth), both_ways=True
            )
            key = f"{space.name}/{variant}"
            report.traces[f"order {key}"] = check.to_dict()
            report.check(f"{key}: total, antisymmetric and transitive on {len(labels)} points", check.passed)
            if isinstance(space, ArcSpace):
                arc_orders[variant] = [label for group in check.order for label in group]
        if isinstance(space, (S1Space, S2Space)):
            for variant in space.variants:
                rows = non_mixing(space, variant, depth)
                report.traces[f"non_mixing {space.name}/{variant}"] = rows
                report.check(
                    f"{space.name}/{variant}: arc components are never interleaved",
                    all(r["holds"] for r in rows),
                )
    if len(arc_orders) == len(ArcSpace.variants):
        kinds = {
            f"{a}/{b}": equal_or_opposite(arc_orders[a], arc_orders[b]) for a, b in combinations(arc_orders, 2)
        }
        report.verdicts["arc families"] = kinds
        report.check("any two arc families give equal or opposite orders", "neither" not in kinds.values())


def _brute_force(order1: tuple, order2: tuple) -> str:
    if order1 == order2:
        return "equal"
    if order1 == tuple(reversed(order2)):
        return "opposite"
    return "neither"


def check_order_oracle(report: Report, size: int = ORACLE_SIZE) -> None:
    mismatches, non_monotone, pairs = [], [], 0
    for k in range(1, size + 1):
        for order1 in permutations(range(k)):
            for order2 in permutations(range(k)):
                pairs += 1
                kind = equal_or_opposite(order1, order2)
                monotone = triple_hypothesis(order1, order2)
                row = {"order1": list(order1), "order2": list(order2), "kind": kind}
                if kind != _brute_force(order1, order2):
                    mismatches.append(row)
                if monotone != (kind != "neither"):
                    non_monotone.append(row)
    report.inputs["max_size"] = size
    report.verdicts["pairs"] = pairs
    report.traces["oracle mismatches"] = mismatches
    report.traces["triple mismatches"] = non_monotone
    report.check(f"all {pairs} order pairs on up to {size} elements classified as brute force does", not mismatches)
    report.check("equal or opposite exactly when every triple stays monotone", not non_monotone)


def filter_axioms(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    report = Report("filter-axioms")
    check_filter_axioms(report, runner, spec)
    return report


def order_axioms(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    report = Report("order-axioms")
    check_order_axioms(report, runner, spec)
    return report


def order_oracle(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    report = Report("order-oracle")
    check_order_oracle(report, int(spec.get("size", ORACLE_SIZE)))
    return report


def axioms(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    report = Report("axioms")
    check_filter_axioms(report, runner, spec)
    check_order_axioms(report, runner, spec)
    check_order_oracle(report)
    return report


def setup(runner: ExperimentRunner):
    runner.register("filter-axioms", filter_axioms, "Ultrafilter laws on seeded random set pairs")
    runner.register("order-axioms", order_axioms, "Order axioms of every catalog order")
    runner.register("order-oracle", order_oracle, "Equal-or-opposite classification against brute force")
    runner.register("axioms", axioms, "All of the above in one report")
