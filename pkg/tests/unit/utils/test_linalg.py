"""
Unit tests for the exact determinant kernels.
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.fixtures.polynomials import random_grid
from utils.errors import MinorShapeError
from utils.linalg import det_bareiss, det_cofactor

F = Fraction

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def square_grids(max_order: int = 5):
    return st.integers(min_value=1, max_value=max_order).flatmap(
        lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n)
    )


class TestDetBareiss:
    """Test cases for det_bareiss"""

    @pytest.mark.unit
    def test_identity(self):
        """The identity has determinant 1."""
        grid = [[F(int(i == j)) for j in range(4)] for i in range(4)]
        assert det_bareiss(grid) == 1

    @pytest.mark.unit
    def test_rational_entries(self):
        """Rational entries give the exact rational determinant."""
        grid = [[F(3), F(2), F(0)], [F(1), F(3, 2), F(1, 9)], [F(0), F(9), F(1)]]
        assert det_bareiss(grid) == F(-1, 2)

    @pytest.mark.unit
    def test_needs_row_swap(self):
        """A zero leading pivot is handled by a row swap with a sign change."""
        grid = [[F(0), F(1), F(2)], [F(1), F(0), F(3)], [F(4), F(-3), F(8)]]
        assert det_bareiss(grid) == det_cofactor(grid) == F(-2)

    @pytest.mark.unit
    def test_singular(self):
        """A grid with a zero column is singular."""
        grid = [[F(0), F(1)], [F(0), F(5)]]
        assert det_bareiss(grid) == 0
        grid3 = [[F(0), F(1), F(2)], [F(0), F(3), F(4)], [F(0), F(5), F(6)]]
        assert det_bareiss(grid3) == 0

    @pytest.mark.unit
    def test_does_not_modify_input(self):
        """The input grid is left untouched."""
        grid = [[F(1, 2), F(1)], [F(3), F(4)]]
        copy = [row[:] for row in grid]
        det_bareiss(grid)
        assert grid == copy

    @pytest.mark.unit
    def test_rejects_non_square(self):
        """Non-square and empty grids raise MinorShapeError."""
        with pytest.raises(MinorShapeError):
            det_bareiss([[F(1), F(2)]])
        with pytest.raises(MinorShapeError):
            det_bareiss([])

    @pytest.mark.property
    @settings(max_examples=200, deadline=None)
    @given(square_grids())
    def test_matches_cofactor_expansion(self, grid):
        """Both kernels agree exactly on arbitrary rational grids."""
        assert det_bareiss(grid) == det_cofactor(grid)

    @pytest.mark.property
    def test_row_swap_flips_sign(self):
        """Swapping two rows negates the determinant on seeded random grids."""
        rng = random.Random(7)
        for _ in range(50):
            order = rng.randint(2, 5)
            a = random_grid(rng, order)
            i, j = rng.sample(range(order), 2)
            b = [list(row) for row in a]
            b[i], b[j] = b[j], b[i]
            assert det_bareiss(b) == -det_bareiss(a)


class TestCofactor:
    """Test cases for det_cofactor"""

    @pytest.mark.unit
    def test_order_limit(self):
        """Cofactor expansion refuses orders above 6."""
        grid = [[F(int(i == j)) for j in range(7)] for i in range(7)]
        with pytest.raises(MinorShapeError):
            det_cofactor(grid)

