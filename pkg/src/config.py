"""Runtime settings read from the environment (and an optional .env file)."""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

DEFAULT_TABLE_FIXTURE = Path(__file__).parent / "fixtures" / "stable_rank_table.json"
LOG_LEVELS = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}


class Settings(BaseModel):
    """Tunable knobs of the workbench."""

    degree_bound: int = Field(6, description="Default degree bound for membership checks")
    orbit_horizon: int = Field(50, description="Number of orbit steps scanned")
    random_seed: int = Field(20240917, description="Seed for randomized property checks")
    property_samples: int = Field(200, description="Random samples per property check")
    log_level: str = Field("WARNING", description="loguru level for the CLI sink")
    table_fixture: Path = Field(
        DEFAULT_TABLE_FIXTURE, description="JSON file with the stable-rank table rows"
    )


def _int_from_env(key: str, default: int, minimum: int) -> int:
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{key} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"{key} must be at least {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    """Build Settings from DUA_* environment variables.

    Raises:
        ValueError: if a variable is present but malformed.
    """
    log_level = os.getenv("DUA_LOG_LEVEL", "WARNING").upper()
    if log_level not in LOG_LEVELS:
        raise ValueError(f"DUA_LOG_LEVEL must be one of {sorted(LOG_LEVELS)}")
    fixture = os.getenv("DUA_TABLE_FIXTURE")
    return Settings(
        degree_bound=_int_from_env("DUA_DEGREE_BOUND", 6, 2),
        orbit_horizon=_int_from_env("DUA_ORBIT_HORIZON", 50, 1),
        random_seed=_int_from_env("DUA_RANDOM_SEED", 20240917, 0),
        property_samples=_int_from_env("DUA_PROPERTY_SAMPLES", 200, 1),
        log_level=log_level,
        table_fixture=Path(fixture) if fixture else DEFAULT_TABLE_FIXTURE,
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the process-wide settings instance."""
    return load_settings()
