"""
File: config.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Configuration class, loading settings from a configuration file and environment variables.
    Command-line flags override the environment, which overrides the JSON file.
"""

import os
import time
from pathlib import Path

from dotenv import load_dotenv

from continua.errors import ConfigError
from continua.ultrafilter import SimulatedUltrafilter
from utils.logger import logger
from utils.tools import load_config_file

DEFAULTS = {
    "depth": 20,
    "seed": 1729,
    "format": "json",
    "arc_grid": 25,
    "bridge_samples": 100,
    "axiom_pairs": 1000,
    "orientation_depth": 10,
    "witness_depth": 16,
    "oracle_depth": 6,
}


class Config:
    def __init__(
        self,
        env_path: Path = Path(".env"),
        config_path: Path = Path("utils/config.json"),
        is_debug: bool = False,
        overrides: dict | None = None,
    ):
        if env_path.exists():
            load_dotenv(env_path)
        else:
            logger.warning(f"Environment file {env_path} not found, using defaults")
        overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        self.config_file: dict = load_config_file(str(config_path)) or {}
        self.start_timestamp: float = time.time()
        self.debug: bool = is_debug
        self.experiments_count: int = 0

        self.report_dir = Path(
            overrides.get("report_dir") or os.getenv("ULTRAORDER_REPORT_DIR") or "reports"
        )
        seed = overrides.get("seed", os.getenv("ULTRAORDER_SEED"))
        self.seed: int = self._int("seed", seed if seed is not None else self._file("seed"), minimum=0)
        self.depth: int = self._int("depth", overrides.get("depth", self._file("depth")), minimum=1)
        self.format: str = overrides.get("format") or self._file("format")
        if self.format not in ("json", "text"):
            raise ConfigError(f"Unknown report format '{self.format}'")
        self.timing: bool = bool(overrides.get("timing", False))
        self.arc_grid: int = self._int("arc_grid", self._file("arc_grid"), minimum=2)
        self.bridge_samples: int = self._int("bridge_samples", self._file("bridge_samples"), minimum=1)
        self.axiom_pairs: int = self._int("axiom_pairs", self._file("axiom_pairs"), minimum=1)
        self.orientation_depth: int = self._int("orientation_depth", self._file("orientation_depth"), minimum=3)
        self.witness_depth: int = self._int("witness_depth", self._file("witness_depth"), minimum=1)
        self.oracle_depth: int = self._int("oracle_depth", self._file("oracle_depth"), minimum=1)
        self.tower: SimulatedUltrafilter = self._tower(self.config_file.get("tower"))

    def _file(self, key: str):
        return self.config_file.get(key, DEFAULTS[key])

    @staticmethod
    def _int(key: str, value, minimum: int) -> int:
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None
        if number < minimum:
            raise ConfigError(f"{key} must be at least {minimum}, got {number}")
        return number

    @staticmethod
    def _tower(data) -> SimulatedUltrafilter:
        if data is None:
            return SimulatedUltrafilter.powers_of_two(10)
        try:
            return SimulatedUltrafilter.from_dict(data)
        except (KeyError, TypeError) as err:
            raise ConfigError(f"Malformed tower in config: {data!r}") from err
