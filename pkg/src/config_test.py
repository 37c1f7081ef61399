"""Unit tests for src/config.py."""

import pytest

from src.config import DEFAULT_TABLE_FIXTURE, get_settings, load_settings


class TestLoadSettings:
    """Test reading settings from the environment."""

    def test_defaults(self, monkeypatch):
        """Test defaults apply when no variables are set."""
        for key in (
            "DUA_DEGREE_BOUND",
            "DUA_ORBIT_HORIZON",
            "DUA_RANDOM_SEED",
            "DUA_PROPERTY_SAMPLES",
            "DUA_LOG_LEVEL",
            "DUA_TABLE_FIXTURE",
        ):
            monkeypatch.delenv(key, raising=False)
        settings = load_settings()
        assert settings.degree_bound == 6
        assert settings.orbit_horizon == 50
        assert settings.property_samples == 200
        assert settings.log_level == "WARNING"
        assert settings.table_fixture == DEFAULT_TABLE_FIXTURE

    def test_overrides(self, monkeypatch, tmp_path):
        """Test every variable is honoured."""
        monkeypatch.setenv("DUA_DEGREE_BOUND", "4")
        monkeypatch.setenv("DUA_ORBIT_HORIZON", "12")
        monkeypatch.setenv("DUA_LOG_LEVEL", "debug")
        monkeypatch.setenv("DUA_TABLE_FIXTURE", str(tmp_path / "rows.json"))
        settings = load_settings()
        assert settings.degree_bound == 4
        assert settings.orbit_horizon == 12
        assert settings.log_level == "DEBUG"
        assert settings.table_fixture == tmp_path / "rows.json"

    def test_malformed_integer(self, monkeypatch):
        """Test a non-integer value names the offending key."""
        monkeypatch.setenv("DUA_DEGREE_BOUND", "six")
        with pytest.raises(ValueError, match="DUA_DEGREE_BOUND"):
            load_settings()

    def test_bound_below_minimum(self, monkeypatch):
        """Test the degree bound must be at least 2."""
        monkeypatch.setenv("DUA_DEGREE_BOUND", "1")
        with pytest.raises(ValueError, match="at least 2"):
            load_settings()

    def test_unknown_log_level(self, monkeypatch):
        """Test an unknown log level is rejected."""
        monkeypatch.setenv("DUA_LOG_LEVEL", "LOUD")
        with pytest.raises(ValueError, match="DUA_LOG_LEVEL"):
            load_settings()


class TestGetSettings:
    """Test the cached accessor."""

    def test_returns_same_instance(self):
        """Test the accessor caches its result."""
        assert get_settings() is get_settings()
