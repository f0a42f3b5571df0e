"""
File: runner.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The experiment runner, responsible for automatically loading experiment
    modules from ./experiments, resolving experiment specs and storing the
    reports they produce.
"""

from __future__ import annotations

import importlib
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from continua.errors import ConfigError
from continua.ultrafilter import SimulatedUltrafilter
from core.config import Config
from core.reports import Report, ReportStore
from utils.logger import logger


@dataclass
class ExperimentSpec:
    experiment: str
    selectors: dict = field(default_factory=dict)
    depth: int | None = None
    seed: int | None = None
    format: str | None = None
    output: Path | None = None
    name: str | None = None

    def get(self, key: str, default=None):
        value = self.selectors.get(key)
        return default if value is None else value


Experiment = Callable[["ExperimentRunner", ExperimentSpec], Report]


@dataclass(frozen=True)
class Registered:
    name: str
    run: Experiment
    description: str
    module: str


class ExperimentRunner:
    def __init__(self, config: Config, experiments_dir: Path = Path("./experiments")):
        self.config = config
        self.experiments_dir = experiments_dir
        self.experiments: dict[str, Registered] = {}
        self.store = ReportStore(config.report_dir)

    def register(self, name: str, run: Experiment, description: str = "") -> None:
        if name in self.experiments:
            logger.warning(f"Experiment {name} registered twice, keeping {self.experiments[name].module}")
            return
        self.experiments[name] = Registered(name, run, description, run.__module__)

    def load_experiments(self) -> None:
        """
        Automatically loads all modules from the experiments directory and
        calls their setup(runner) hook.
        """
        if not self.experiments_dir.exists():
            logger.error(f"The {self.experiments_dir} directory does not exist.")
            return

        package = self.experiments_dir.name
        for module_path in sorted(self.experiments_dir.iterdir()):
            # Loading .py files (excluding __init__.py)
            if module_path.suffix == ".py" and module_path.name != "__init__.py":
                ext = f"{package}.{module_path.stem}"
            # Loading directories containing __init__.py
            elif module_path.is_dir() and (module_path / "__init__.py").exists():
                ext = f"{package}.{module_path.name}"
            # Skip mismatched files
            else:
                continue
            # Attempt to load module
            try:
                importlib.import_module(ext).setup(self)
            except Exception as err:
                logger.error(f"Loading error {ext}: {err}", exc_info=True)
            else:
                logger.info(f"Experiment module loaded: {ext}")
        self.config.experiments_count = len(self.experiments)
        logger.info(f"Registered {self.config.experiments_count} experiments.")

    # -- helpers shared by experiments ----------------------------------------

    def depth(self, spec: ExperimentSpec) -> int:
        depth = spec.depth if spec.depth is not None else self.config.depth
        if depth < 1:
            raise ConfigError(f"Depth must be at least 1, got {depth}")
        return depth

    def seed(self, spec: ExperimentSpec) -> int:
        return spec.seed if spec.seed is not None else self.config.seed

    def tower(self, text: str | None) -> SimulatedUltrafilter:
        return SimulatedUltrafilter.parse(text) if text else self.config.tower

    # -- running --------------------------------------------------------------

    def execute(self, spec: ExperimentSpec) -> Report:
        """Runs an experiment without storing its report."""
        try:
            registered = self.experiments[spec.experiment]
        except KeyError:
            raise ConfigError(
                f"Unknown experiment '{spec.experiment}', choose from {sorted(self.experiments)}"
            ) from None
        logger.info(f"Experiment {spec.experiment} started: {spec.selectors}")
        started = time.perf_counter()
        report = registered.run(self, spec)
        report.wall_clock = time.perf_counter() - started
        logger.info(
            f"Experiment {spec.experiment} finished in {report.wall_clock:.3f} s, "
            f"{'passed' if report.passed else 'FAILED'}"
        )
        return report

    def run(self, spec: ExperimentSpec) -> Report:
        """Runs an experiment and writes its report to the report directory (or spec.output)."""
        report = self.execute(spec)
        fmt = spec.format or self.config.format
        if spec.output is not None:
            ReportStore(spec.output).save(report, fmt, self.config.timing, spec.name)
        else:
            self.store.save(report, fmt, self.config.timing, spec.name)
        return report


def setup_runner(config: Config, experiments_dir: Path = Path("./experiments")) -> ExperimentRunner:
    runner = ExperimentRunner(config, experiments_dir)
    runner.load_experiments()
    return runner
