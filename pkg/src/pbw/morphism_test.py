"""Unit tests for src/pbw/morphism.py."""

import pytest

from src.errors import PresentationMismatch
from src.pbw.morphism import (
    Relation,
    bracket_images,
    downup_images,
    downup_relations,
    gwa_images,
    gwa_relations,
    verify_morphism,
    verify_relations,
)
from src.pbw.presentation import make_downup, make_tilde
from src.scalars.fields import RatFunc

LAM, MU = RatFunc.lam(), RatFunc.mu()
ALPHA, BETA = LAM + MU, -(LAM * MU)


class TestVerifyMorphism:
    """Test homomorphisms given by generator images."""

    @pytest.mark.parametrize("gamma", [0, 1])
    def test_bracket_embedding(self, gamma):
        """Test u -> u, w -> d*u - lambda*u*d respects the tilde rule."""
        result = verify_morphism(make_tilde(gamma), bracket_images(make_downup(gamma)))
        assert result.ok, result.failure
        assert result.checked == 1

    def test_wrong_gamma_fails(self):
        """Test the gamma = 1 rule does not hold in A(gamma = 0)."""
        result = verify_morphism(make_tilde(1), bracket_images(make_downup(0)))
        assert not result
        assert result.failure.startswith("w*u")

    def test_missing_image(self):
        """Test every generator needs an image."""
        images = bracket_images(make_downup(1))
        del images["w"]
        with pytest.raises(ValueError):
            verify_morphism(make_tilde(1), images)

    def test_images_in_two_presentations(self):
        """Test images must share a target presentation."""
        images = {"u": make_downup(1).generator("u"), "w": make_downup(0).generator("w")}
        with pytest.raises(PresentationMismatch):
            verify_morphism(make_tilde(1), images)

    def test_bracket_images_need_parameters(self):
        """Test presentations without lambda have no bracket."""
        from src.pbw.ore import polynomial_ring

        with pytest.raises(PresentationMismatch):
            bracket_images(polynomial_ring())


class TestDownUpRelations:
    """Test the cubic defining relations."""

    @pytest.mark.parametrize("gamma", [0, 1])
    def test_relations_hold(self, gamma):
        """Test D*U^2 and D^2*U relations with alpha = lambda + mu, beta = -lambda*mu."""
        presentation = make_downup(gamma)
        result = verify_relations(
            downup_relations(ALPHA, BETA, gamma), downup_images(presentation), presentation
        )
        assert result.ok, result.failure
        assert result.checked == 2

    def test_wrong_alpha_fails(self):
        """Test alpha = lambda - mu is rejected."""
        presentation = make_downup(1)
        result = verify_relations(
            downup_relations(LAM - MU, BETA, 1), downup_images(presentation), presentation
        )
        assert not result.ok
        assert result.failure.startswith("D*U^2")

    def test_unknown_symbol(self):
        """Test relations using symbols without images are rejected."""
        presentation = make_downup(1)
        relation = Relation("X", ((1, ("X",)),))
        with pytest.raises(ValueError):
            verify_relations([relation], downup_images(presentation), presentation)


class TestGwaRelations:
    """Test the generalized Weyl algebra relations under Xp -> d, Xm -> u."""

    @pytest.mark.parametrize("gamma", [0, 1])
    def test_relations_hold(self, gamma):
        """Test all seven relations normalize to zero."""
        presentation = make_downup(gamma)
        result = verify_relations(
            gwa_relations(ALPHA, BETA, gamma), gwa_images(presentation), presentation
        )
        assert result.ok, result.failure
        assert result.checked == 7

    def test_wrong_gamma_fails(self):
        """Test gamma = 0 relations fail in A(gamma = 1)."""
        presentation = make_downup(1)
        result = verify_relations(
            gwa_relations(ALPHA, BETA, 0), gwa_images(presentation), presentation
        )
        assert not result.ok
        assert result.failure.startswith("Xp*y")
