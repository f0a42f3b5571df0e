import pytest

from continua.errors import ConfigError, PreconditionError
from core.reports import emit_report
from core.runner import ExperimentSpec
from experiments.suite import CRITERIA, report_name

EXPERIMENTS = {
    "axioms",
    "bridge",
    "catalog-list",
    "catalog-validate",
    "compare",
    "filter-axioms",
    "knaster-witness",
    "order-axioms",
    "order-oracle",
    "orders-count",
    "orientation-decompose",
    "orientation-reach",
    "orientation-sweep",
    "suite",
}


class TestRunner:
    def test_every_experiment_module_is_loaded(self, runner):
        assert set(runner.experiments) == EXPERIMENTS
        assert runner.config.experiments_count == len(EXPERIMENTS)

    def test_registering_twice_keeps_the_first(self, runner):
        first = runner.experiments["compare"]
        runner.register("compare", lambda r, s: None)
        assert runner.experiments["compare"] is first

    def test_unknown_experiment(self, runner):
        with pytest.raises(ConfigError):
            runner.execute(ExperimentSpec("bogus"))

    def test_helpers(self, runner):
        assert runner.depth(ExperimentSpec("compare")) == 12
        assert runner.depth(ExperimentSpec("compare", depth=3)) == 3
        with pytest.raises(ConfigError):
            runner.depth(ExperimentSpec("compare", depth=0))
        assert runner.seed(ExperimentSpec("bridge")) == 7
        assert runner.tower(None) is runner.config.tower
        assert runner.tower("r2=1").residues == (0, 1)

    def test_run_stores_the_report(self, runner):
        report = runner.run(ExperimentSpec("catalog-list"))
        assert report.passed
        assert runner.store.load("catalog-list")["passed"] is True

    def test_output_directory(self, runner, tmp_path):
        runner.run(ExperimentSpec("catalog-list", output=tmp_path / "elsewhere"))
        assert (tmp_path / "elsewhere" / "catalog-list.json").exists()


class TestExperiments:
    def test_compare(self, runner):
        report = runner.execute(
            ExperimentSpec("compare", {"space": "arc", "variant": "standard", "x": "1/4", "y": "3/4"})
        )
        assert report.verdicts["summary"] == "Stabilized(LT, from level 3)"
        assert len(report.traces["levels"]) == 12

    def test_compare_s3_needs_a_prefix(self, runner):
        with pytest.raises(ConfigError):
            runner.execute(ExperimentSpec("compare", {"space": "s3", "x": "i1:0", "y": "i1:1"}))

    def test_compare_knaster(self, runner):
        spec = ExperimentSpec("compare", {"space": "knaster", "x": "even", "y": "odd", "tower": "r2=1"})
        report = runner.execute(spec)
        assert report.verdicts["verdict"]["relation"] == "LT"
        assert report.traces["levels"][:3] == ["EQ", "LT", "GT"]

    def test_validate(self, runner):
        report = runner.execute(ExperimentSpec("catalog-validate", {"space": "arc", "variant": "reversed"}, 3))
        assert report.passed
        assert len(report.traces["levels"]) == 3

    def test_arc_orders(self, runner):
        report = runner.execute(ExperimentSpec("orders-count", {"space": "arc"}))
        assert report.passed, report.checks
        assert report.verdicts["distinct"] == 2

    def test_s3_orders(self, runner):
        report = runner.execute(ExperimentSpec("orders-count", {"space": "s3"}, depth=3))
        assert report.passed, report.checks
        assert report.verdicts["distinct"] == 8

    def test_knaster_witness(self, runner):
        report = runner.execute(ExperimentSpec("knaster-witness", {"set": "even"}))
        assert report.passed, report.checks
        assert report.inputs["oracle_depth"] == 4

    def test_knaster_witness_needs_disagreeing_towers(self, runner):
        with pytest.raises(PreconditionError):
            runner.execute(ExperimentSpec("knaster-witness", {"set": "even", "u1": "r2=1", "u2": "r2=0"}))

    def test_bridge_replays(self, runner):
        spec = ExperimentSpec("bridge", {"samples": 5}, depth=6)
        first, second = runner.execute(spec), runner.execute(spec)
        assert first.passed
        assert emit_report(first) == emit_report(second)

    def test_bridge_needs_samples(self, runner):
        with pytest.raises(ConfigError):
            runner.execute(ExperimentSpec("bridge", {"samples": 0}))

    def test_filter_axioms(self, runner):
        report = runner.execute(ExperimentSpec("filter-axioms"))
        assert report.passed
        assert report.inputs == {"pairs": 50, "seed": 7}
        assert len(report.checks) == 4

    def test_order_oracle(self, runner):
        report = runner.execute(ExperimentSpec("order-oracle", {"size": 4}))
        assert report.passed
        assert report.verdicts["pairs"] == 1 + 4 + 36 + 576

    def test_orientation(self, runner):
        decompose = runner.execute(ExperimentSpec("orientation-decompose", {"n": 3, "prefix": "101"}))
        assert decompose.verdicts["composition"] == [0, 1, 3, 1, 0]
        reach = runner.execute(
            ExperimentSpec("orientation-reach", {"source": "0", "target": "11", "parity": "odd"})
        )
        assert reach.passed
        with pytest.raises(ConfigError):
            runner.execute(ExperimentSpec("orientation-decompose"))

    @pytest.mark.slow
    def test_orientation_sweep(self, runner):
        assert runner.execute(ExperimentSpec("orientation-sweep")).passed

    @pytest.mark.slow
    def test_order_axioms(self, runner):
        report = runner.execute(ExperimentSpec("order-axioms", depth=10))
        assert report.passed, [name for name, ok in report.checks.items() if not ok]


class TestSuite:
    def test_selected_criteria(self, runner):
        report = runner.execute(ExperimentSpec("suite", {"only": ["6", "11"]}))
        assert report.passed
        assert report.verdicts == {"passed": 2, "total": 2}
        assert runner.store.load("suite-06-knaster-witness")["passed"] is True
        assert report.traces["11"]["report"] == "suite-11-order-oracle"

    def test_every_criterion_has_its_own_report_file(self):
        names = {report_name(c, experiment) for c, (_, experiment, _) in CRITERIA.items()}
        assert len(names) == len(CRITERIA) == 11
        assert report_name("4", "orders-count") == "suite-04-orders-count"

    def test_runs_of_one_experiment_do_not_overwrite_each_other(self, runner):
        runner.execute(ExperimentSpec("suite", {"only": ["1", "6", "11"]}))
        runner.run(ExperimentSpec("orders-count", {"space": "arc"}, depth=6, name="orders-count-arc-depth-6"))
        files = sorted(p.name for p in runner.store.directory.glob("*.json"))
        assert files == [
            "orders-count-arc-depth-6.json",
            "suite-01-orders-count.json",
            "suite-06-knaster-witness.json",
            "suite-11-order-oracle.json",
        ]
        assert runner.store.load("suite-01-orders-count")["inputs"]["depth"] == 12
        assert runner.store.load("orders-count-arc-depth-6")["inputs"]["depth"] == 6

    @pytest.mark.slow
    def test_full_suite_leaves_eleven_reports(self, runner):
        report = runner.run(ExperimentSpec("suite"))
        assert report.verdicts["total"] == 11
        files = {p.stem for p in runner.store.directory.glob("*.json")}
        assert files == {report_name(c, e) for c, (_, e, _) in CRITERIA.items()} | {"suite"}

    def test_unknown_criterion(self, runner):
        with pytest.raises(ConfigError):
            runner.execute(ExperimentSpec("suite", {"only": ["12"]}))
