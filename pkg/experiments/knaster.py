"""
File: knaster.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Experiments on the Knaster continuum: the witness pair that two
    ultrafilters order in opposite ways, and the agreement between pulled-back
    chains and the coordinate order on seeded random threads.
"""

import random

from continua.catalog.knaster import SEED, KnasterSpace
from continua.errors import ConfigError
from continua.foundations import EventuallyPeriodicSet, random_set
from continua.inverse_limit import ThreadPoint
from continua.knaster_witness import demonstrate_distinct_orders, zero_thread_minimal
from continua.ultrafilter import SimulatedUltrafilter
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec
from utils.logger import logger


def knaster_witness(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    A = EventuallyPeriodicSet.parse(spec.get("set", "even"))
    depth = spec.depth or runner.config.witness_depth
    u1 = SimulatedUltrafilter.parse(spec.get("u1", "r2=0"))
    u2 = SimulatedUltrafilter.parse(spec.get("u2", "r2=1"))
    oracle_depth = min(int(spec.get("oracle_depth", runner.config.oracle_depth)), depth)
    result = demonstrate_distinct_orders(A, depth, u1, u2, oracle_depth)
    report = Report(
        "knaster-witness",
        inputs={
            "set": A.describe(),
            "depth": depth,
            "u1": u1.describe(),
            "u2": u2.describe(),
            "oracle_depth": oracle_depth,
        },
        traces={"witness": result.to_dict()},
        verdicts={"u1": result.first, "u2": result.second},
    )
    report.check("both stems are threads and x_n > y_n exactly for n in A", result.matches)
    report.check("the two ultrafilters order the pair in opposite ways", result.opposite)
    if oracle_depth > 0:
        report.check(f"brute force at depth {oracle_depth} finds the constructed branch words", result.oracle)

    space = KnasterSpace()
    samples = {label: p for label, p in space.witness_points().items() if label != "zero"}
    minimal = zero_thread_minimal(samples, u1, depth)
    report.traces["zero_thread"] = minimal
    report.check("the zero thread is below every sampled thread", minimal["minimal"])
    return report


def _random_thread(rng: random.Random) -> ThreadPoint:
    return ThreadPoint.from_branches(SEED, random_set(rng))


def bridge(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    samples = int(spec.get("samples", runner.config.bridge_samples))
    if samples < 1:
        raise ConfigError(f"Bridge needs at least one sample, got {samples}")
    depth = spec.depth or 12
    seed = runner.seed(spec)
    rng = random.Random(seed)
    space = KnasterSpace()
    report = Report("bridge", inputs={"samples": samples, "depth": depth, "seed": seed})

    bad, strict_levels = [], 0
    for i in range(samples):
        x, y = _random_thread(rng), _random_thread(rng)
        records = space.transfer(x, y, depth)
        strict_levels += sum(1 for r in records if abs(r.coordinates[0] - r.coordinates[1]) >= 2 * r.link_width)
        for record in records:
            if not record.consistent:
                bad.append({"sample": i, "x": x.to_dict(), "y": y.to_dict(), **record.to_dict()})
    logger.debug(f"bridge: {strict_levels} levels with a gap above the mesh over {samples} pairs")
    report.traces["inconsistent"] = bad
    report.verdicts["levels_with_gap"] = strict_levels
    report.check("pulled-back chains and coordinates agree on every level with a wide gap", not bad)

    mesh = space.mesh_check(depth)
    report.traces["mesh"] = mesh
    report.check("pullback mesh is gamma_n + 1/n with gamma_n <= 2^-n", all(row["ok"] for row in mesh))
    return report


def setup(runner: ExperimentRunner):
    runner.register("knaster-witness", knaster_witness, "Thread pair ordered oppositely by two ultrafilters")
    runner.register("bridge", bridge, "Pulled-back chain order against coordinate order")
