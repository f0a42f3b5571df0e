"""
File: reports.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Experiment reports: the Report record, its JSON and plain-text
    serializations, and the store that writes them to the report directory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

from continua.foundations import qstr
from utils.logger import logger

SCHEMA = "ultraorder-report/1"


@dataclass
class Report:
    experiment: str
    inputs: dict = field(default_factory=dict)
    traces: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    wall_clock: float | None = None

    @property
    def passed(self) -> bool:
        """True unless a check failed; a report without checks passes."""
        return all(self.checks.values())

    @property
    def status(self) -> str:
        """Passed, failed, or unchecked when the report only carries verdicts (compare)."""
        if not self.checks:
            return "unchecked"
        return "passed" if self.passed else "failed"

    def check(self, name: str, ok: bool) -> bool:
        self.checks[name] = bool(ok)
        if not ok:
            logger.warning(f"{self.experiment}: check failed: {name}")
        return bool(ok)

    def to_dict(self, timing: bool = False) -> dict:
        data = {
            "schema": SCHEMA,
            "experiment": self.experiment,
            "inputs": self.inputs,
            "traces": self.traces,
            "verdicts": self.verdicts,
            "checks": self.checks,
            "passed": self.passed,
            "status": self.status,
        }
        if timing and self.wall_clock is not None:
            data["wall_clock"] = round(self.wall_clock, 6)
        return data


def _plain(value):
    """Turns report values into JSON-ready data; rationals become 'p/q'."""
    if isinstance(value, Fraction):
        return qstr(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "to_dict"):
        return _plain(value.to_dict())
    return value


def _text(report: Report) -> str:
    lines = [
        f"experiment: {report.experiment}",
        f"passed:     {report.passed}",
        f"status:     {report.status}",
    ]
    if report.wall_clock is not None:
        lines.append(f"wall clock: {report.wall_clock:.3f} s")
    for title, section in (("inputs", report.inputs), ("verdicts", report.verdicts)):
        if section:
            lines.append(f"{title}:")
            width = max(len(str(k)) for k in section)
            lines += [f"  {str(k):<{width}}  {_plain(v)}" for k, v in section.items()]
    if report.checks:
        lines.append("checks:")
        width = max(len(k) for k in report.checks)
        lines += [f"  {k:<{width}}  {'ok' if ok else 'FAILED'}" for k, ok in report.checks.items()]
    for name, trace in report.traces.items():
        lines.append(f"trace {name}:")
        rows = _plain(trace)
        if isinstance(rows, list):
            lines += [f"  {row}" for row in rows]
        else:
            lines.append(f"  {rows}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "json", timing: bool = False) -> str:
    """
    Serializes a report.

    :param report: The report.
    :param fmt: "json" (sorted keys, two-space indent) or "text".
    :param timing: Include the wall clock in JSON output.
    :return: The serialized report.
    """
    if fmt == "text":
        return _text(report)
    return json.dumps(_plain(report.to_dict(timing)), indent=2, sort_keys=True) + "\n"


class ReportStore:
    """Writes reports as <name>.<format> files in one directory; the name defaults to the experiment."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)

    def path_for(self, report: Report, fmt: str, name: str | None = None) -> Path:
        return self.directory / f"{name or report.experiment}.{fmt}"

    def save(
        self, report: Report, fmt: str = "json", timing: bool = False, name: str | None = None
    ) -> Path | None:
        """
        Writes the report.

        :param name: File name without extension, when several runs of one
            experiment must keep their own reports.
        :return: The written path, or None if the directory cannot be used.
        """
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            path = self.path_for(report, fmt, name)
            path.write_text(emit_report(report, fmt, timing), encoding="utf-8")
        except OSError as err:
            logger.warning(f"Reports: could not write {report.experiment} to {self.directory}: {err}")
            return None
        logger.info(f"Reports: {report.experiment} written to {path}")
        return path

    def load(self, name: str) -> dict | None:
        path = self.directory / f"{name}.json"
        if not path.exists():
            logger.warning(f"Reports: no JSON report for {name} in {self.directory}")
            return None
        return json.loads(path.read_text(encoding="utf-8"))
