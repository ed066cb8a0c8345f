"""
Unit tests for the bidiagonal factorization of the tilde matrix.
"""
import dataclasses
import random
from fractions import Fraction

import pytest

from models.polynomial import RationalPolynomial
from services.euclid_service import run_generalized_euclid, synthesize_from_leading
from services.factorization_service import (
    factor_hm,
    factor_product_window,
    ratio_from_minors,
    verify_factorization,
)
from tests.fixtures.polynomials import random_leading, random_nondegenerate
from utils.errors import (
    FactorizationInapplicableError,
    IndexRangeError,
    StepRangeError,
    WindowTooSmallError,
)

F = Fraction
P = RationalPolynomial.from_coeffs


class TestFactorHm:
    """Test cases for factor_hm"""

    @pytest.mark.unit
    def test_binomial_seven(self, binomial_seven):
        """c_i = h_{i-1} / h_i for (x+1)^7 at M = 3."""
        result = factor_hm(binomial_seven, 3)
        assert result.cs == (F(1, 7), F(1, 3), F(7, 10), F(15, 14), F(140, 81), F(14, 5), F(81, 14))
        assert result.terminal == 1
        assert result.all_positive()
        assert verify_factorization(binomial_seven, 3, result, 7 + 3 + 2)

    @pytest.mark.unit
    def test_degree_one(self):
        """2x + 3 factors as J(2/3) applied to the constant 3."""
        f = P([2, 3])
        result = factor_hm(f, 2)
        assert result.cs == (F(2, 3),)
        assert result.terminal == 3
        assert verify_factorization(f, 2, result, 3)

    @pytest.mark.unit
    def test_zero_h(self):
        """x^3 + x at M = 2 has h_1 = 0."""
        with pytest.raises(FactorizationInapplicableError) as info:
            factor_hm(P([1, 0, 1, 0]), 2)
        assert info.value.index == 1

    @pytest.mark.unit
    def test_constant(self):
        """Constants have nothing to factor."""
        with pytest.raises(StepRangeError):
            factor_hm(P([4]), 2)


class TestVerifyFactorization:
    """Test cases for verify_factorization and factor_product_window"""

    @pytest.mark.property
    def test_random_nondegenerate(self):
        """The product matches H~_M(f) on N = n + M + 2 for seeded random runs."""
        rng = random.Random(19)
        for _ in range(100):
            f, m, _ = random_nondegenerate(rng, max_degree=9)
            result = factor_hm(f, m)
            assert verify_factorization(f, m, result, int(f.degree) + m + 2)

    @pytest.mark.unit
    def test_perturbed_parameter_fails(self, near_boundary_quintic):
        """Changing c_1 changes the (1, 1) entry of the product."""
        result = factor_hm(near_boundary_quintic, 3)
        perturbed = dataclasses.replace(result, cs=(result.cs[0] + 1,) + result.cs[1:])
        assert not verify_factorization(near_boundary_quintic, 3, perturbed, 10)
        assert factor_product_window(perturbed, 10)[0][0] != factor_product_window(result, 10)[0][0]

    @pytest.mark.unit
    def test_window_too_small(self, near_boundary_quintic):
        """The window must be at least n + M."""
        result = factor_hm(near_boundary_quintic, 3)
        with pytest.raises(WindowTooSmallError):
            verify_factorization(near_boundary_quintic, 3, result, 7)

    @pytest.mark.unit
    def test_negative_parameters_still_factor(self, stable_quintic):
        """The identity needs nonzero h only, not positive h."""
        table = run_generalized_euclid(stable_quintic, 3)
        assert table.leading[3] == -2
        result = factor_hm(stable_quintic, 3)
        assert not result.all_positive()
        assert verify_factorization(stable_quintic, 3, result, 10)


class TestRatioFromMinors:
    """Test cases for ratio_from_minors"""

    @pytest.mark.property
    def test_matches_leading_ratio(self):
        """c_i through special minors equals h_{i-1} / h_i for every M."""
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(2, 8)
            h = random_leading(rng, n)
            for m in range(2, n + 1):
                f = synthesize_from_leading(h, m)
                for i in range(1, n + 1):
                    assert ratio_from_minors(f, m, i) == h[i - 1] / h[i]

    @pytest.mark.unit
    def test_index_range(self, binomial_seven):
        """i must lie in 1..n."""
        with pytest.raises(IndexRangeError):
            ratio_from_minors(binomial_seven, 3, 8)
