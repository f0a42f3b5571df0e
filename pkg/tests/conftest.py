import json
import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from continua.ultrafilter import SimulatedUltrafilter
from core.config import Config
from core.runner import ExperimentRunner

settings.register_profile("ci", derandomize=True, max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def evens_tower() -> SimulatedUltrafilter:
    return SimulatedUltrafilter.parse("r2=0")


@pytest.fixture
def odds_tower() -> SimulatedUltrafilter:
    return SimulatedUltrafilter.parse("r2=1")


@pytest.fixture
def tower() -> SimulatedUltrafilter:
    return SimulatedUltrafilter.powers_of_two(10)


@pytest.fixture
def config_file(tmp_path) -> Path:
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps(
            {
                "depth": 12,
                "seed": 7,
                "tower": {"moduli": [1, 2, 4], "residues": [0, 0, 0]},
                "format": "json",
                "arc_grid": 9,
                "bridge_samples": 10,
                "axiom_pairs": 50,
                "orientation_depth": 8,
                "witness_depth": 10,
                "oracle_depth": 4,
            }
        )
    )
    return path


@pytest.fixture
def config(tmp_path, config_file, monkeypatch) -> Config:
    monkeypatch.delenv("ULTRAORDER_REPORT_DIR", raising=False)
    monkeypatch.delenv("ULTRAORDER_SEED", raising=False)
    return Config(
        env_path=tmp_path / "missing.env",
        config_path=config_file,
        overrides={"report_dir": str(tmp_path / "reports")},
    )


@pytest.fixture
def runner(config, monkeypatch) -> ExperimentRunner:
    monkeypatch.chdir(ROOT)
    runner = ExperimentRunner(config, ROOT / "experiments")
    runner.load_experiments()
    return runner
