"""Unit tests for src/pbw/filtration.py."""

import pytest

from src.errors import PresentationMismatch
from src.pbw.filtration import (
    d_degree,
    filtration_check,
    graded_check,
    top_component,
    transport,
    weighted_degree,
)
from src.pbw.presentation import make_downup, make_tilde
from src.scalars.fields import RatFunc

MU = RatFunc.mu()


class TestDDegree:
    """Test the d-filtration degree."""

    def test_tilde_elements_have_degree_zero(self):
        """Test elements without d lie in F_0."""
        presentation = make_tilde(1)
        u, w = presentation.generator("u"), presentation.generator("w")
        a = (w + 1 / MU) * (1 + u) - 1 / MU
        assert d_degree(a) == 0

    def test_d_squared_word(self):
        """Test d_degree(u*w*d^2) = 2."""
        assert d_degree(make_downup(1).monomial((1, 1, 2))) == 2

    def test_product_of_d_powers(self):
        """Test d^2*u*w keeps d-degree 2 after rewriting."""
        presentation = make_downup(1)
        u, w, d = (presentation.generator(s) for s in ("u", "w", "d"))
        assert d_degree(d * d * u * w) == 2


class TestFiltrationCheck:
    """Test F_p * F_q is contained in F_(p+q)."""

    @pytest.mark.parametrize("p,q", [(0, 1), (2, 2), (1, 3)])
    def test_random_pairs(self, p, q, rng):
        """Test random products respect the d-filtration."""
        assert filtration_check(p, q, 4, samples=25, rng=rng)

    def test_gamma_zero(self, rng):
        """Test the filtration in A(gamma = 0)."""
        assert filtration_check(2, 2, 4, samples=25, rng=rng, presentation=make_downup(0))


class TestGradedCheck:
    """Test gr A(gamma = 1) = A(gamma = 0) for the weights u:1, w:2, d:1."""

    def test_weighted_degree(self):
        """Test w has weight 2 and d*u has weight 2."""
        presentation = make_downup(1)
        w, d, u = (presentation.generator(s) for s in ("w", "d", "u"))
        assert weighted_degree(w) == 2
        assert weighted_degree(d * u) == 2
        assert weighted_degree(presentation.zero()) == -1

    def test_top_component_drops_tail(self):
        """Test the top part of w*u in A(gamma = 1) is mu*u*w."""
        presentation = make_downup(1)
        u, w = presentation.generator("u"), presentation.generator("w")
        assert top_component(w * u) == (u * w).scale(MU)

    def test_random_products(self, rng):
        """Test top components multiply as in A(gamma = 0)."""
        assert graded_check(samples=25, rng=rng)

    def test_transport_needs_same_generators(self):
        """Test transport between different generator sets fails."""
        with pytest.raises(PresentationMismatch):
            transport(make_tilde(1).generator("u"), make_downup(0))
