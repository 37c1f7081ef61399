"""Tests for the verification suite (src/cli/suite.py)."""

import random

import pytest

from src.cli.suite import CHECKS, Check, CheckContext, checks_for, run_check, run_suite
from src.config import Settings
from src.errors import NotInvertible
from src.models.schemas import Certificate, Suite, Verdict, VerificationReport


@pytest.fixture
def small_settings() -> Settings:
    """Reduced sample counts so the suites run quickly under test."""
    return Settings(property_samples=10, orbit_horizon=20)


def failing_check(check_id: str = "engine.zz_failing") -> Check:
    def run(ctx):
        raise NotInvertible("beta = 0")

    return Check(check_id, "always fails", frozenset({Suite.ENGINE}), run)


def crashing_check(check_id: str = "engine.zz_crashing") -> Check:
    def run(ctx):
        raise ValueError("unexpected")

    return Check(check_id, "always crashes", frozenset({Suite.ENGINE}), run)


class TestRegistry:
    """Test check registration and suite selection."""

    def test_every_check_has_a_suite(self):
        """Test no check is unreachable from a named suite."""
        assert all(entry.suites for entry in CHECKS.values())

    def test_all_selects_everything(self):
        """Test Suite.ALL returns every check, sorted by id."""
        ids = [entry.id for entry in checks_for(Suite.ALL)]
        assert ids == sorted(CHECKS)

    @pytest.mark.parametrize(
        "check_id",
        [
            "section3_1.ra_cofactor",
            "section3_1.rb_cofactor",
            "section3_2.rb_cofactor",
            "section3_2.delta_powers",
            "section4.stable_rank_table",
            "engine.associativity",
        ],
    )
    def test_known_ids(self, check_id):
        """Test the checks the report promises exist."""
        assert check_id in CHECKS

    def test_ids_carry_suite_name(self):
        """Test each check id starts with the name of a suite it belongs to."""
        for entry in CHECKS.values():
            prefix = entry.id.split(".")[0]
            assert prefix in {suite.value for suite in entry.suites}, entry.id

    def test_shared_check(self):
        """Test the embedding check runs in two suites."""
        ids = {entry.id for entry in checks_for(Suite.ENGINE)}
        assert "section3_1.embedding" in ids


class TestRunCheck:
    """Test error handling around a single check."""

    def test_error_becomes_failure(self, small_settings):
        """Test workbench errors are reported as FAIL with the error as witness."""
        ctx = CheckContext(3, small_settings, random.Random(0))
        result = run_check(failing_check(), ctx)
        assert result.verdict is Verdict.FAIL
        assert result.witness == "NotInvertible: beta = 0"

    def test_unexpected_error_becomes_failure(self, small_settings):
        """Test exceptions outside the workbench hierarchy are also reported as FAIL."""
        ctx = CheckContext(3, small_settings, random.Random(0))
        result = run_check(crashing_check(), ctx)
        assert result.verdict is Verdict.FAIL
        assert result.witness == "ValueError: unexpected"


class TestRunSuite:
    """Test whole suites at a reduced bound."""

    async def test_gamma_nonzero(self, small_settings):
        """Test the gamma != 0 suite passes at bound 3."""
        report = await run_suite(Suite.GAMMA_NONZERO, 3, small_settings)
        assert report.passed, report.failures()
        assert [c.id for c in report.checks] == sorted(c.id for c in report.checks)
        assert all(c.ms >= 0 for c in report.checks)

    async def test_gamma_zero(self, small_settings):
        """Test the gamma = 0 suite passes and certifies r*b."""
        report = await run_suite(Suite.GAMMA_ZERO, 3, small_settings)
        assert report.passed, report.failures()
        [rb] = [c for c in report.checks if c.id == "section3_2.rb_cofactor"]
        assert isinstance(rb.witness, Certificate)
        assert rb.witness.verdict is Verdict.PASS

    async def test_dynamics(self, small_settings):
        """Test the dynamics suite passes."""
        report = await run_suite(Suite.DYNAMICS, 2, small_settings)
        assert report.passed, report.failures()

    async def test_engine(self, small_settings):
        """Test the engine suite passes."""
        report = await run_suite(Suite.ENGINE, 2, small_settings)
        assert report.passed, report.failures()

    async def test_failure_reported(self, small_settings, mocker):
        """Test a failing check fails the report without stopping the others."""
        mocker.patch.dict(CHECKS, {"engine.zz_failing": failing_check()})
        report = await run_suite(Suite.ENGINE, 2, small_settings)
        assert not report.passed
        assert [c.id for c in report.failures()] == ["engine.zz_failing"]

    async def test_crash_keeps_other_results(self, small_settings, mocker):
        """Test a check raising an unexpected error still yields a full report."""
        mocker.patch.dict(CHECKS, {"engine.zz_crashing": crashing_check()})
        report = await run_suite(Suite.ENGINE, 2, small_settings)
        assert [c.id for c in report.failures()] == ["engine.zz_crashing"]
        assert report.failures()[0].witness == "ValueError: unexpected"
        assert len(report.checks) == len(checks_for(Suite.ENGINE))
        others = [c for c in report.checks if c.id != "engine.zz_crashing"]
        assert all(c.verdict is Verdict.PASS for c in others)

    async def test_json_round_trip(self, small_settings):
        """Test the report survives JSON serialization with certificate witnesses."""
        report = await run_suite(Suite.GAMMA_NONZERO, 2, small_settings)
        assert VerificationReport.model_validate_json(report.model_dump_json()) == report

    async def test_bound_too_small(self, small_settings):
        """Test bound 1 is rejected."""
        with pytest.raises(ValueError):
            await run_suite(Suite.ENGINE, 1, small_settings)
