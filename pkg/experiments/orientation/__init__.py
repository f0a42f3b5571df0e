from core.runner import ExperimentRunner

from .sweeps import decompose, reach, sweep


def setup(runner: ExperimentRunner):
    runner.register("orientation-decompose", decompose, "Odd decomposition of s_n on a cylinder")
    runner.register("orientation-reach", reach, "Composition of a given parity between two cylinders")
    runner.register("orientation-sweep", sweep, "Exhaustive decomposition, reach and cover checks")
