"""
File: suite.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The acceptance suite: eleven numbered criteria, each one experiment run
    with fixed selectors. Every criterion also writes its own report,
    suite-NN-<experiment>, next to the suite report.
"""

from continua.errors import ConfigError, UltraorderError
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec
from utils.logger import logger

CRITERIA: dict[str, tuple[str, str, dict]] = {
    "1": ("arc order count", "orders-count", {"space": "arc"}),
    "2": ("S1 order count", "orders-count", {"space": "s1"}),
    "3": ("S2 pattern exclusion", "orders-count", {"space": "s2"}),
    "4": ("S3 distinct orders", "orders-count", {"space": "s3"}),
    "5": ("T component orders", "orders-count", {"space": "t"}),
    "6": ("Knaster witness", "knaster-witness", {"set": "even", "u1": "r2=0", "u2": "r2=1"}),
    "7": ("pullback bridge", "bridge", {}),
    "8": ("ultrafilter laws", "filter-axioms", {}),
    "9": ("order axioms", "order-axioms", {}),
    "10": ("orientation sweep", "orientation-sweep", {}),
    "11": ("order classification oracle", "order-oracle", {}),
}

BRIDGE_DEPTH = 12


def report_name(criterion: str, experiment: str) -> str:
    return f"suite-{int(criterion):02d}-{experiment}"


def _criterion_spec(
    runner: ExperimentRunner, spec: ExperimentSpec, criterion: str, experiment: str, selectors: dict
) -> ExperimentSpec:
    depth = None
    if experiment == "knaster-witness":
        depth = runner.config.witness_depth
    elif experiment == "bridge":
        depth = BRIDGE_DEPTH
    return ExperimentSpec(
        experiment,
        dict(selectors),
        depth,
        spec.seed,
        spec.format,
        spec.output,
        report_name(criterion, experiment),
    )


def run_suite(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    only = [str(c) for c in spec.get("only", [])]
    unknown = [c for c in only if c not in CRITERIA]
    if unknown:
        raise ConfigError(f"Unknown criteria {unknown}, choose from {list(CRITERIA)}")
    selected = only or list(CRITERIA)
    report = Report("suite", inputs={"criteria": selected})
    for criterion in selected:
        title, experiment, selectors = CRITERIA[criterion]
        try:
            result = runner.run(_criterion_spec(runner, spec, criterion, experiment, selectors))
        except UltraorderError as err:
            logger.error(f"Criterion {criterion} ({title}) raised: {err}", exc_info=True)
            report.traces[criterion] = {"experiment": experiment, "error": str(err)}
            report.check(f"{criterion}. {title}", False)
            continue
        report.traces[criterion] = {
            "experiment": experiment,
            "selectors": selectors,
            "report": report_name(criterion, experiment),
            "failed": [name for name, ok in result.checks.items() if not ok],
        }
        report.check(f"{criterion}. {title}", result.passed)
    report.verdicts["passed"] = sum(report.checks.values())
    report.verdicts["total"] = len(report.checks)
    return report


def setup(runner: ExperimentRunner):
    runner.register("suite", run_suite, "The numbered acceptance criteria")
