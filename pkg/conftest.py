"""Pytest configuration and shared fixtures."""

import os
import random

import pytest

# Keep tests independent of a developer's .env
os.environ.setdefault("DUA_DEGREE_BOUND", "6")
os.environ.setdefault("DUA_ORBIT_HORIZON", "50")
os.environ.setdefault("DUA_RANDOM_SEED", "20240917")
os.environ.setdefault("DUA_LOG_LEVEL", "WARNING")


@pytest.fixture
def rng():
    """Seeded generator for the randomized property tests."""
    return random.Random(20240917)
