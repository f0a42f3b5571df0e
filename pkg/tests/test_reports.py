import json
from fractions import Fraction

from continua.ultrafilter import Comparison
from core.reports import SCHEMA, Report, ReportStore, emit_report


def sample_report() -> Report:
    report = Report(
        "compare",
        inputs={"x": "arc:1/4", "depth": 12},
        traces={"levels": [{"level": 1, "mesh": Fraction(3, 4)}], "seen": {3, 1, 2}},
        verdicts={"relation": Comparison.LT},
    )
    report.check("stabilized", True)
    return report


class TestReport:
    def test_checks(self):
        report = sample_report()
        assert report.passed
        assert not report.check("broken", False)
        assert not report.passed
        assert report.checks == {"stabilized": True, "broken": False}

    def test_status(self):
        report = sample_report()
        assert report.status == "passed"
        report.check("broken", False)
        assert report.status == "failed"
        bare = Report("compare", verdicts={"relation": Comparison.LT})
        assert bare.passed
        assert bare.status == "unchecked"
        assert json.loads(emit_report(bare))["status"] == "unchecked"
        assert "status:     unchecked" in emit_report(bare, "text")

    def test_json(self):
        data = json.loads(emit_report(sample_report()))
        assert data["schema"] == SCHEMA
        assert data["passed"] is True
        assert data["traces"]["levels"][0]["mesh"] == "3/4"
        assert data["traces"]["seen"] == [1, 2, 3]
        assert data["verdicts"]["relation"] == "LT"

    def test_keys_are_sorted(self):
        text = emit_report(sample_report())
        keys = [line.strip().split(":")[0] for line in text.splitlines() if line.startswith('  "')]
        assert keys == sorted(keys)

    def test_wall_clock_only_with_timing(self):
        report = sample_report()
        report.wall_clock = 0.25
        assert "wall_clock" not in json.loads(emit_report(report))
        assert json.loads(emit_report(report, timing=True))["wall_clock"] == 0.25

    def test_identical_runs_serialize_identically(self):
        first, second = sample_report(), sample_report()
        first.wall_clock, second.wall_clock = 1.0, 2.0
        assert emit_report(first) == emit_report(second)

    def test_text(self):
        report = sample_report()
        report.check("broken", False)
        text = emit_report(report, "text")
        assert text.startswith("experiment: compare\npassed:     False\n")
        assert "FAILED" in text
        assert "trace levels:" in text


class TestStore:
    def test_save_and_load(self, tmp_path):
        store = ReportStore(tmp_path / "reports")
        path = store.save(sample_report())
        assert path == tmp_path / "reports" / "compare.json"
        assert store.load("compare")["experiment"] == "compare"
        assert store.load("missing") is None

    def test_text_files(self, tmp_path):
        path = ReportStore(tmp_path).save(sample_report(), "text")
        assert path.suffix == ".text"
        assert path.read_text().startswith("experiment: compare")

    def test_unusable_directory(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        assert ReportStore(blocker / "reports").save(sample_report()) is None


def test_empty_trace_is_an_empty_array():
    report = Report("catalog-list", traces={"levels": []})
    assert json.loads(emit_report(report))["traces"]["levels"] == []
