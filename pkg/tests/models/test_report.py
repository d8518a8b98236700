"""Tests for verification report models."""

import json

import pytest
import tomli

from mpalg.models.report import CheckFailure, CheckResult, SuiteReport, expect


@pytest.fixture
def report():
    """A report with one pass and one failure."""
    return SuiteReport(
        seed=5,
        size="tiny",
        results=[
            CheckResult(suite="examples", name="k2-product", passed=True, detail="3 terms", elapsed=0.01),
            CheckResult(suite="oracle", name="exhaustive-1", passed=False, detail="mismatch"),
        ],
    )


class TestSuiteReport:
    """Tests for SuiteReport."""

    def test_summary(self, report):
        """Counts of total, passed and failed."""
        assert report.summary() == {"total": 2, "passed": 1, "failed": 1}
        assert not report.passed
        assert [r.name for r in report.failures] == ["exhaustive-1"]

    def test_empty_report_passes(self):
        """No checks, no failures."""
        assert SuiteReport(seed=1, size="desk").passed

    def test_write_json(self, report, tmp_path):
        """Non-TOML suffixes write JSON."""
        path = tmp_path / "report.json"
        report.write(path)
        data = json.loads(path.read_text())
        assert data["seed"] == 5
        assert data["summary"]["failed"] == 1
        assert data["results"][0]["detail"] == "3 terms"

    def test_write_toml(self, report, tmp_path):
        """A .toml suffix writes TOML."""
        path = tmp_path / "report.toml"
        report.write(path)
        data = tomli.loads(path.read_text())
        assert data["size"] == "tiny"
        assert data["results"][1]["passed"] is False


class TestExpect:
    """Tests for the expect helper."""

    def test_passes_silently(self):
        """True conditions do nothing."""
        expect(True, "unused")

    def test_raises_check_failure(self):
        """False conditions raise with the message."""
        with pytest.raises(CheckFailure, match="boom"):
            expect(False, "boom")
