"""
File: catalog.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Listing the example continua and validating their chain levels.
"""

from continua.catalog import SPACES, get_space, list_spaces
from continua.catalog.knaster import KnasterSpace
from continua.catalog.validator import validate_level
from continua.errors import ConfigError
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec


def catalog_list(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    report = Report("catalog-list")
    report.traces["spaces"] = list_spaces()
    report.check("every space resolves its witness points", all(
        len(space.witness_points()) == len(space.witnesses) for space in SPACES.values()
    ))
    return report


def catalog_validate(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    space = get_space(spec.get("space", ""))
    if isinstance(space, KnasterSpace):
        raise ConfigError("The Knaster continuum has no strand geometry to validate")
    variant = space.variant(spec.get("variant", ""))
    depth = spec.depth or 2
    report = Report("catalog-validate", inputs={"space": space.name, "variant": variant, "depth": depth})
    levels = []
    for n in range(1, depth + 1):
        result = validate_level(space, n, variant)
        levels.append(result.to_dict())
        report.check(f"level {n}: adjacent links along every strand", not result.skips)
        report.check(f"level {n}: sampled link diameters within the mesh bound", not result.oversized)
    report.traces["levels"] = levels
    return report


def setup(runner: ExperimentRunner):
    runner.register("catalog-list", catalog_list, "Spaces, chain families and witness points")
    runner.register("catalog-validate", catalog_validate, "Sampled geometry check of chain levels")
