"""
File: compare.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Compares two points of a catalog space and reports the level trace next
    to the verdict.
"""

from continua.catalog import compare, get_space
from continua.catalog.knaster import KnasterSpace
from continua.chains import chain_trace
from continua.errors import ConfigError
from continua.inverse_limit import level_trace
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec


def compare_points(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    space = get_space(spec.get("space", ""))
    variant = spec.get("prefix") or spec.get("variant")
    if variant is None:
        if space.name == "s3":
            raise ConfigError("Space s3 needs --prefix, a binary word or a bit set")
        variant = space.variants[0]
    variant = space.variant(variant)
    depth = runner.depth(spec)
    u = runner.tower(spec.get("tower"))
    x, y = space.point(spec.get("x", "")), space.point(spec.get("y", ""))

    verdict = compare(space, variant, x, y, u, depth)
    report = Report(
        "compare",
        inputs={
            "space": space.name,
            "variant": variant,
            "x": str(spec.get("x")),
            "y": str(spec.get("y")),
            "depth": depth,
            "tower": u.describe(),
        },
    )
    if isinstance(space, KnasterSpace):
        report.traces["levels"] = level_trace(x, y, depth).to_list()
    else:
        max_level = space.max_level(variant)
        levels = depth if max_level is None else min(depth, max_level)
        report.traces["levels"] = [r.to_dict() for r in chain_trace(space.family(variant), x, y, levels)]
    report.verdicts["verdict"] = verdict.to_dict()
    report.verdicts["summary"] = str(verdict)
    return report


def setup(runner: ExperimentRunner):
    runner.register("compare", compare_points, "Two points in the order of one chain family")
