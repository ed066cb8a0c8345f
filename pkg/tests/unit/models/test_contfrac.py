"""
Unit tests for ContinuedFraction and FactorizationResult.
"""
from fractions import Fraction

import pytest

from models.contfrac import ContinuedFraction
from models.factorization import FactorizationResult
from models.polynomial import RationalPolynomial

F = Fraction
P = RationalPolynomial.from_coeffs


@pytest.fixture
def quintic_cfrac() -> ContinuedFraction:
    """Pair (0, 1) expansion of the near-boundary quintic at M = 3"""
    return ContinuedFraction(
        coefficients=(F(1), F(1000), F(1, 1000)),
        exponent_low=1,
        exponent_high=2,
        pair=(0, 1),
        degrees=(5, 4, 2, 1),
    )


class TestContinuedFraction:
    """Test cases for ContinuedFraction"""

    @pytest.mark.unit
    def test_exponents_alternate(self, quintic_cfrac):
        """Exponents alternate low, high, low."""
        assert quintic_cfrac.exponents == [1, 2, 1]
        assert quintic_cfrac.step == 3
        assert quintic_cfrac.final_exponent == 1

    @pytest.mark.unit
    def test_final_exponent_even_length(self):
        """An even number of terms ends on the high exponent."""
        cf = ContinuedFraction(coefficients=(F(1), F(2)), exponent_low=1, exponent_high=3)
        assert cf.final_exponent == 3

    @pytest.mark.unit
    def test_to_rational(self, quintic_cfrac):
        """Folding gives N = x^4 + 1.001x and D = x^3 + 1."""
        numerator, denominator = quintic_cfrac.to_rational()
        assert numerator == P([1, 0, 0, "1001/1000", 0])
        assert denominator == P([1, 0, 0, 1])

    @pytest.mark.unit
    def test_to_rational_matches_residue_ratio(self, quintic_cfrac):
        """N / D equals f_0 / f_1 of the source polynomial."""
        f0 = P([1, 0, 0, "1001/1000", 0, 0])
        f1 = P([1, 0, 0, 1, 0])
        numerator, denominator = quintic_cfrac.to_rational()
        assert numerator * f1 == denominator * f0

    @pytest.mark.unit
    def test_empty(self):
        """The empty fraction folds to 0 / 1."""
        cf = ContinuedFraction(coefficients=(), exponent_low=1, exponent_high=1)
        numerator, denominator = cf.to_rational()
        assert numerator.is_zero
        assert denominator == P([1])

    @pytest.mark.unit
    def test_to_dict(self, quintic_cfrac):
        """Coefficients serialize as exact strings."""
        data = quintic_cfrac.to_dict()
        assert data["coefficients"] == ["1", "1000", "1/1000"]
        assert data["pair"] == [0, 1]
        assert data["final_exponent"] == 1


class TestFactorizationResult:
    """Test cases for FactorizationResult"""

    @pytest.mark.unit
    def test_zeta_entries(self):
        """J(c) has c at diagonal positions Mk+1 and 1 on the superdiagonal."""
        result = FactorizationResult(cs=(F(2), F(5)), terminal=F(1), m=3)
        assert result.zeta(1, 1, 1) == 2
        assert result.zeta(2, 4, 4) == 5
        assert result.zeta(1, 2, 2) == 0
        assert result.zeta(1, 3, 4) == 1
        assert result.zeta(1, 2, 1) == 0

    @pytest.mark.unit
    def test_all_positive_includes_terminal(self):
        """A nonpositive terminal makes the factorization not all positive."""
        assert FactorizationResult(cs=(F(1),), terminal=F(2), m=2).all_positive()
        assert not FactorizationResult(cs=(F(1),), terminal=F(-2), m=2).all_positive()
