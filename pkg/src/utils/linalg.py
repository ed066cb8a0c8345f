"""
Exact linear algebra over the rationals.

Matrices are plain lists of rows of Fractions. Determinants use Bareiss' fraction-free
elimination (every intermediate division is exact); cofactor expansion is kept as an
independent check for small orders.
"""
import logging
import math
from fractions import Fraction
from typing import List, Sequence

from utils.errors import MinorShapeError

logger = logging.getLogger(__name__)

Grid = List[List[Fraction]]

# Cofactor expansion is factorial in the order
BRUTEFORCE_MAX_ORDER = 6


def _check_square(grid: Sequence[Sequence[Fraction]]) -> int:
    n = len(grid)
    if n == 0:
        raise MinorShapeError("determinant of an empty grid")
    for row in grid:
        if len(row) != n:
            raise MinorShapeError(f"grid is not square: {n} rows, a row of length {len(row)}")
    return n


def det_bareiss(grid: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Determinant by Bareiss' fraction-free Gaussian elimination.

    Rational entries are first brought to a common denominator so the elimination runs
    on integers, where each step's division by the previous pivot is exact.

    Args:
        grid: Square grid of Fractions (not modified)

    Returns:
        Exact determinant

    Raises:
        MinorShapeError: If the grid is empty or not square
    """
    n = _check_square(grid)
    if n == 1:
        return Fraction(grid[0][0])
    if n == 2:
        return Fraction(grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0])

    # Scale each row to integers; det(grid) = det(scaled) / prod(scales)
    scale = Fraction(1)
    work: List[List[int]] = []
    for row in grid:
        common = math.lcm(*(Fraction(value).denominator for value in row))
        scale *= common
        work.append([int(Fraction(value) * common) for value in row])

    sign = 1  # track current sign in case of row swap
    previous = 1
    for k in range(n - 1):
        # look for a pivot in the current column and assume det == 0 if none is found
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k] != 0:
                    work[i], work[k] = work[k], work[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)

        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (pivot * work[i][j] - work[i][k] * work[k][j]) // previous
        previous = pivot

    return Fraction(sign * work[n - 1][n - 1]) / scale


def det_cofactor(grid: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Determinant by cofactor expansion along the first row.

    Raises:
        MinorShapeError: If the grid is not square or its order exceeds BRUTEFORCE_MAX_ORDER
    """
    n = _check_square(grid)
    if n > BRUTEFORCE_MAX_ORDER:
        raise MinorShapeError(f"cofactor expansion limited to order {BRUTEFORCE_MAX_ORDER}, got {n}")
    return _cofactor(grid)


def _cofactor(grid: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(grid)
    if n == 1:
        return Fraction(grid[0][0])
    total = Fraction(0)
    for col in range(n):
        entry = grid[0][col]
        if entry == 0:
            continue
        sub = [row[:col] + row[col + 1:] for row in grid[1:]]
        term = Fraction(entry) * _cofactor(sub)
        total += term if col % 2 == 0 else -term
    return total

