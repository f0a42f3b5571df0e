"""
File: sweeps.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Tail-flip experiments: one decomposition, one parity-constrained reach,
    and the exhaustive sweep over short prefixes.
"""

from itertools import product

from continua.errors import ConfigError, SearchBoundError
from continua.orientation import (
    Parity,
    as_word,
    check_cover,
    check_decomposition,
    check_reach,
    cover_targets,
    decompose_on_cylinder,
    reach_with_parity,
    word_str,
)
from core.reports import Report
from core.runner import ExperimentRunner, ExperimentSpec
from utils.logger import logger

MAX_FLIP = 4
MAX_PREFIX = 3


def _depth(runner: ExperimentRunner, spec: ExperimentSpec) -> int:
    return spec.depth or runner.config.orientation_depth


def _prefixes(max_length: int) -> list[str]:
    return [word_str(w) for length in range(max_length + 1) for w in product((0, 1), repeat=length)]


def decompose(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    if spec.get("n") is None:
        raise ConfigError("orientation decompose needs --n")
    n, depth = int(spec.get("n")), _depth(runner, spec)
    prefix = as_word(spec.get("prefix", ""))
    report = Report("orientation-decompose", inputs={"n": n, "prefix": word_str(prefix), "depth": depth})
    dec = decompose_on_cylinder(n, prefix)
    report.traces["decomposition"] = dec.to_dict()
    report.verdicts["composition"] = list(dec.composition)
    report.check("composition has odd length", len(dec.composition) % 2 == 1)
    report.check(f"composition equals s_{n} on every word of length {depth} in the cylinder",
                 check_decomposition(dec, depth))
    return report


def reach(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    source, target = as_word(spec.get("source", "")), as_word(spec.get("target", ""))
    parity, depth = Parity(spec.get("parity", "odd")), _depth(runner, spec)
    report = Report(
        "orientation-reach",
        inputs={"from": word_str(source), "to": word_str(target), "parity": parity.value, "depth": depth},
    )
    result = reach_with_parity(source, target, parity, depth)
    report.traces["reach"] = result.to_dict()
    report.verdicts["composition"] = list(result.composition)
    report.check("the sub-cylinder is mapped bit for bit onto the target cylinder", check_reach(result, depth))
    return report


def sweep(runner: ExperimentRunner, spec: ExperimentSpec) -> Report:
    depth = _depth(runner, spec)
    report = Report("orientation-sweep", inputs={"depth": depth, "max_flip": MAX_FLIP, "max_prefix": MAX_PREFIX})

    wrong = []
    for n in range(MAX_FLIP + 1):
        for prefix in product((0, 1), repeat=n):
            dec = decompose_on_cylinder(n, prefix)
            if len(dec.composition) % 2 == 0 or not check_decomposition(dec, depth):
                wrong.append(dec.to_dict())
    report.traces["bad decompositions"] = wrong
    report.check(f"every s_n with n <= {MAX_FLIP} is an odd composition on each cylinder B_s, |s| = n", not wrong)

    failed, found = [], 0
    for source, target, parity in product(_prefixes(MAX_PREFIX), _prefixes(MAX_PREFIX), Parity):
        try:
            result = reach_with_parity(source, target, parity, depth)
        except SearchBoundError as err:
            logger.warning(f"orientation sweep: {err}")
            failed.append({"from": source, "to": target, "parity": parity.value, "error": str(err)})
            continue
        found += 1
        if not check_reach(result, depth):
            failed.append(result.to_dict())
    report.verdicts["reaches"] = found
    report.traces["failed reaches"] = failed
    report.check(f"every pair of prefixes of length <= {MAX_PREFIX} is reachable in both parities", not failed)

    uncovered = []
    for source, parity in product(_prefixes(MAX_PREFIX), Parity):
        for length in range(1, MAX_PREFIX + 1):
            if not check_cover(cover_targets(source, parity, length, depth), length, depth):
                uncovered.append({"from": source, "parity": parity.value, "length": length})
    report.traces["uncovered"] = uncovered
    report.check("the reached images cover every prefix of each length", not uncovered)
    return report
