"""Unit tests for src/cli/table.py."""

import pytest

from src.cli.table import load_fixture, render_table, run_table
from src.config import DEFAULT_TABLE_FIXTURE
from src.errors import FixtureMissing
from src.models.schemas import TableFixture, TableFixtureRow, TableReport


@pytest.fixture
def bundled() -> TableFixture:
    return load_fixture(DEFAULT_TABLE_FIXTURE)


def row(alpha: str, beta: str, gamma: str, lower: int, upper: int) -> TableFixtureRow:
    return TableFixtureRow(
        family="test",
        condition="",
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        sr_lower=lower,
        sr_upper=upper,
        exact=lower == upper,
    )


class TestBundledFixture:
    """Test the committed stable-rank rows."""

    def test_row_count(self, bundled):
        """Test every family row is present."""
        assert len(bundled.rows) == 21

    def test_all_rows_match(self, bundled):
        """Test the classifier reproduces every row."""
        report = run_table(bundled)
        assert report.passed, [r for r in report.rows if not r.matches]

    def test_exact_rows(self, bundled):
        """Test the rows with sr = 3 exactly."""
        exact = [r for r in run_table(bundled).rows if r.actual == (3, 3)]
        assert len(exact) == 5
        assert all(r.parameters[2] == "0" for r in exact)

    def test_osp_row(self, bundled):
        """Test U(osp(1,2)) = A(0, 1, 1/2)."""
        [osp] = [r for r in run_table(bundled).rows if r.family == "U(osp(1,2))"]
        assert osp.parameters == ("0", "1", "1/2")
        assert osp.actual == (2, 3)

    def test_quadratic_witness(self, bundled):
        """Test the conformal row realized with a primitive cube root of unity."""
        [conformal] = [r for r in run_table(bundled).rows if "sqrt(-3)" in r.parameters[0]]
        assert conformal.matches and conformal.actual == (2, 3)


class TestRunTable:
    """Test mismatches and errors are reported, not raised."""

    def test_mismatch(self):
        """Test wrong expected bounds fail the report."""
        report = run_table(TableFixture(rows=[row("2", "-1", "0", 2, 3)]))
        assert not report.passed
        assert report.rows[0].actual == (3, 3)

    def test_non_noetherian_row(self):
        """Test beta = 0 is a failed row."""
        report = run_table(TableFixture(rows=[row("1", "0", "0", 2, 3)]))
        assert not report.passed
        assert report.rows[0].error.startswith("NonNoetherian")

    def test_unparsable_row(self):
        """Test a malformed parameter is a failed row."""
        report = run_table(TableFixture(rows=[row("2 +", "-1", "0", 2, 3)]))
        assert report.rows[0].error.startswith("ParseError")

    def test_round_trip(self, bundled):
        """Test the report serializes."""
        report = run_table(bundled)
        assert TableReport.model_validate_json(report.model_dump_json()) == report


class TestLoadFixture:
    """Test fixture loading errors."""

    def test_missing(self, tmp_path):
        """Test an absent file."""
        with pytest.raises(FixtureMissing):
            load_fixture(tmp_path / "absent.json")

    def test_invalid(self, tmp_path):
        """Test a file that is not a fixture."""
        path = tmp_path / "bad.json"
        path.write_text('{"rows": [{"family": "x"}]}')
        with pytest.raises(FixtureMissing):
            load_fixture(path)


class TestRender:
    """Test the text table."""

    def test_lines(self, bundled):
        """Test a header, a rule and one line per row."""
        lines = render_table(run_table(bundled)).splitlines()
        assert len(lines) == 23
        assert lines[0].startswith("family")
        assert set(lines[1].replace(" ", "")) == {"-"}
        assert all(line.endswith("ok") for line in lines[2:])

    def test_mismatch_marked(self):
        """Test failed rows are flagged."""
        text = render_table(run_table(TableFixture(rows=[row("2", "-1", "0", 2, 3)])))
        assert "MISMATCH" in text
