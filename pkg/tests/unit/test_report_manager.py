"""Unit tests for ReportManager"""

import io
import json
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent.parent))

import pandas as pd
import pytest

from src import __version__
from src.graphs.builder import build_family
from src.invariants.chain import compute_invariants
from src.services.report_manager import Report, ReportManager
from src.verification.models import CaseResult, CaseStatus, SuiteResult


@pytest.fixture
def suite_result():
    return SuiteResult("thm21", [
        CaseResult({"k": 1, "n": 2}, CaseStatus.PASS, {"even": 5, "odd": 4}),
        CaseResult({"k": 1, "n": 3}, CaseStatus.SKIP, {"reason": "limit"}),
    ], runtime_ms=12)


class TestReportManager:
    """Test cases for report building and rendering"""

    def test_build_drops_unset_inputs(self):
        report = ReportManager.build("census", {"expr": "C(3) x P(2)", "blocks": None}, {"even": 5, "odd": 4})
        assert report.inputs == {"expr": "C(3) x P(2)"}
        assert report.version == __version__

    def test_json_render(self, suite_result):
        report = ReportManager.build("verify", {"suite": "thm21"}, suite_result, seed=3)
        data = json.loads(ReportManager.render(report, "json"))
        assert data["command"] == "verify"
        assert data["seed"] == 3
        assert data["outputs"]["cases"][0] == {"params": {"k": 1, "n": 2}, "status": "pass", "values": {"even": 5, "odd": 4}}

    def test_suite_frame(self, suite_result):
        df = ReportManager.to_frame(suite_result)
        assert len(df) == 2
        assert list(df.columns) == sorted(df.columns)
        assert {"params.k", "params.n", "status", "suite", "values.even"} <= set(df.columns)

    def test_invariant_frame(self):
        report = compute_invariants(build_family("C", 5), ["chi", "col"])
        df = ReportManager.to_frame(report)
        assert list(df["invariant"]) == ["chi", "col"]
        assert list(df["value"]) == [3, 3]

    def test_csv_render(self, suite_result):
        text = ReportManager.render(Report("verify", {}, suite_result), "csv")
        df = pd.read_csv(io.StringIO(text))
        assert list(df["status"]) == ["pass", "skip"]

    def test_unknown_format(self, suite_result):
        with pytest.raises(ValueError, match="unknown report format"):
            ReportManager.render(Report("verify", {}, suite_result), "xlsx")

    def test_write_to_file(self, tmp_path, suite_result):
        output = tmp_path / "reports" / "thm21.json"
        path = ReportManager.write(Report("verify", {}, suite_result), "json", output)
        assert path == output
        assert json.loads(output.read_text())["outputs"]["suite"] == "thm21"

    def test_write_to_stdout(self, capsys):
        ReportManager.write(Report("census", {}, {"even": 1, "odd": 0}))
        assert json.loads(capsys.readouterr().out)["outputs"] == {"even": 1, "odd": 0}

    def test_bare_name_goes_to_reports_dir(self, tmp_path, mocker, suite_result):
        mocker.patch("src.services.report_manager.Config.REPORTS_OUTPUT_DIR", tmp_path / "reports")
        path = ReportManager.write(Report("verify", {}, suite_result), "csv", "thm21.csv")
        assert path == tmp_path / "reports" / "thm21.csv"
        assert pd.read_csv(path)["status"].tolist() == ["pass", "skip"]
