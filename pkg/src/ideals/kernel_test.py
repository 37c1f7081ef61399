"""Unit tests for src/ideals/kernel.py."""

import pytest

from src.errors import PresentationMismatch, ZeroPolynomial
from src.ideals.instances import downup_instance, tilde_instance
from src.ideals.kernel import generated_dimension, kernel_ideal_basis
from src.pbw.presentation import make_tilde
from src.scalars.fields import RatFunc

MU = RatFunc.mu()


class TestKernelOfUnit:
    """Test r = 1, where the kernel is z*S itself."""

    def test_gamma_zero(self):
        """Test the degree <= 2 part of w*S is spanned by w, u*w and w^2."""
        presentation = make_tilde(0)
        u, w = presentation.generator("u"), presentation.generator("w")
        kernel = kernel_ideal_basis(presentation.one(), "w", 2)
        assert kernel.dimension == 3
        for f in (w, u * w, w * w):
            assert kernel.contains(f)

    def test_gamma_one(self):
        """Test u*w is not in w*S once w*u = mu*u*w + u, but mu*u*w + u is."""
        presentation = make_tilde(1)
        u, w = presentation.generator("u"), presentation.generator("w")
        kernel = kernel_ideal_basis(presentation.one(), "w", 2)
        assert kernel.dimension == 3
        assert kernel.contains(w)
        assert kernel.contains(w * w)
        assert kernel.contains((u * w).scale(MU) + u)
        assert not kernel.contains(u * w)


class TestTildeKernel:
    """Test the kernel of r = 1 + u modulo w."""

    def test_bound_two(self):
        """Test the degree <= 2 kernel is spanned by a and b."""
        instance = tilde_instance()
        kernel = kernel_ideal_basis(instance.r, "w", 2)
        assert kernel.dimension == 2
        assert kernel.contains(instance.a)
        assert kernel.contains(instance.b)

    def test_basis_is_echelon(self):
        """Test leading monomials are distinct, ascending and monic."""
        kernel = kernel_ideal_basis(tilde_instance().r, "w", 4)
        leads = [f.leading_monomial() for f in kernel.basis]
        assert len(set(leads)) == len(leads)
        assert all(f.leading_coefficient() == 1 for f in kernel.basis)

    def test_cofactors_certify_membership(self):
        """Test r*f = w*q for every basis element."""
        instance = tilde_instance()
        w = instance.presentation.generator("w")
        kernel = kernel_ideal_basis(instance.r, "w", 3)
        for f, q in zip(kernel.basis, kernel.cofactors):
            assert instance.r * f == w * q

    def test_monotone_in_bound(self):
        """Test the bound 2 kernel embeds in the bound 3 kernel."""
        instance = tilde_instance()
        small = kernel_ideal_basis(instance.r, "w", 2)
        large = kernel_ideal_basis(instance.r, "w", 3)
        assert large.dimension >= small.dimension
        assert all(large.contains(f) for f in small.basis)

    def test_no_constants(self):
        """Test no nonzero constant lies in the kernel."""
        assert kernel_ideal_basis(tilde_instance().r, "w", 0).dimension == 0

    @pytest.mark.parametrize("bound", [2, 3, 4])
    def test_generators_fill_each_degree(self, bound):
        """Test a and b generate the kernel in every degree up to the bound."""
        instance = tilde_instance()
        kernel = kernel_ideal_basis(instance.r, "w", bound)
        assert generated_dimension(instance.gens, bound) == kernel.dimension


class TestDownUpKernel:
    """Test the kernel of r = 1 + u*w modulo d in A(gamma=0)."""

    def test_bound_two(self):
        """Test only d^2 survives in degree <= 2."""
        instance = downup_instance()
        kernel = kernel_ideal_basis(instance.r, "d", 2)
        assert kernel.dimension == 1
        assert kernel.contains(instance.a)

    def test_bound_three(self):
        """Test a and b both appear by degree 3."""
        instance = downup_instance()
        kernel = kernel_ideal_basis(instance.r, "d", 3)
        assert kernel.contains(instance.a)
        assert kernel.contains(instance.b)
        assert generated_dimension(instance.gens, 3) == kernel.dimension


class TestKernelErrors:
    """Test argument validation."""

    def test_zero_r(self):
        """Test r = 0 is rejected."""
        with pytest.raises(ZeroPolynomial):
            kernel_ideal_basis(make_tilde(1).zero(), "w", 2)

    def test_negative_bound(self):
        """Test a negative bound is rejected."""
        with pytest.raises(ValueError):
            kernel_ideal_basis(make_tilde(1).one(), "w", -1)

    def test_unknown_generator(self):
        """Test z must be a generator of the presentation."""
        with pytest.raises(PresentationMismatch):
            kernel_ideal_basis(make_tilde(1).one(), "d", 2)
