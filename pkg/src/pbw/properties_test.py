"""Property tests of the rewriting engine (src/pbw/properties.py)."""

import pytest

from src.pbw.ore import delta_ut, downup_tower, ore_data, tilde_tower
from src.pbw.presentation import make_downup, make_tilde
from src.pbw.properties import (
    associativity_check,
    embedding_independence_check,
    lexp_additivity_check,
    p_recursion_check,
    sigma_delta_consistency_check,
)

PRESENTATIONS = [
    pytest.param(lambda: make_downup(0), id="A0"),
    pytest.param(lambda: make_downup(1), id="A1"),
    pytest.param(lambda: make_tilde(1), id="tilde1"),
]


class TestEngineProperties:
    """Test associativity and the domain property on random inputs."""

    @pytest.mark.parametrize("build", PRESENTATIONS)
    def test_associativity(self, build, rng):
        """Test (f*g)*h = f*(g*h)."""
        ok, failure = associativity_check(build(), 20, rng)
        assert ok, failure

    @pytest.mark.parametrize("build", PRESENTATIONS)
    def test_leading_exponents_add(self, build, rng):
        """Test lexp(f*g) = lexp(f) + lexp(g)."""
        ok, failure = lexp_additivity_check(build(), 40, rng)
        assert ok, failure

    def test_embedding_independence(self):
        """Test the bracket embedding sends u^i*w^j to distinct normal words."""
        ok, failure = embedding_independence_check(6)
        assert ok, failure


class TestOreProperties:
    """Test sigma/delta consistency against the engine."""

    def test_downup_rules(self, rng):
        """Test the gamma = 0 algebra read as an Ore extension in d."""
        ok, failure = sigma_delta_consistency_check(ore_data(make_downup(0), "d"), 15, rng)
        assert ok, failure

    @pytest.mark.parametrize("tower", [downup_tower, tilde_tower])
    def test_built_towers(self, tower, rng):
        """Test towers built from sigma and delta reproduce their own data."""
        _, ore = tower()
        ok, failure = sigma_delta_consistency_check(ore, 15, rng)
        assert ok, failure

    def test_p_recursion(self):
        """Test p_(t+1) - p_t = (mu/lambda)^t and the closed form of delta(u^t)."""
        ok, failure = p_recursion_check(ore_data(make_downup(0), "d"))
        assert ok, failure

    def test_delta_checked_up_to_t_max(self, mocker):
        """Test a closed form that only breaks at t = 15 is still caught."""
        real = delta_ut
        mocker.patch(
            "src.pbw.properties.delta_ut",
            side_effect=lambda t, presentation: real(t, presentation) * (2 if t == 15 else 1),
        )
        ok, failure = p_recursion_check(ore_data(make_downup(0), "d"))
        assert not ok
        assert failure == "delta(u^15) differs from its closed form"
