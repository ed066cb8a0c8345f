"""
Factorization H~_M(f) = J(c_1) ... J(c_n) H~_M(a_n) with c_i = h_{i-1} / h_i.

The J factors are upper bidiagonal, so the leading N x N block of the product only
needs the first N + n rows of H~_M(a_n): every factor maps a block of R rows to a
block of R - 1 rows via row_i -> zeta_ii row_i + row_{i+1}.
"""
import logging
from fractions import Fraction
from typing import List, Tuple

from constants import MatrixVariant
from models.factorization import FactorizationResult
from models.hurwitz import GeneralizedHurwitzMatrix
from models.polynomial import RationalPolynomial
from services.euclid_service import run_generalized_euclid
from services.hurwitz_service import hurwitz_matrix, special_minor
from utils.errors import FactorizationInapplicableError, IndexRangeError, StepRangeError, WindowTooSmallError
from utils.linalg import Grid

logger = logging.getLogger(__name__)


def factor_leading(f: RationalPolynomial, m: int) -> Tuple[Fraction, ...]:
    """h_0..h_n used by the factorization (n = 1 needs no Euclid run)"""
    if f.degree == 1:
        return tuple(f.coeffs)
    return run_generalized_euclid(f, m).leading


def factor_hm(f: RationalPolynomial, m: int) -> FactorizationResult:
    """
    Compute the J-factor parameters c_1..c_n of H~_M(f).

    Args:
        f: Polynomial of degree n >= 1
        m: Step; 2 <= m <= n for n >= 2, any m >= 1 for n = 1

    Returns:
        FactorizationResult with cs[i-1] = h_{i-1} / h_i and terminal a_n

    Raises:
        StepRangeError: If m or the degree is out of range
        FactorizationInapplicableError: If some h_i is zero (the lowest such index)
    """
    if f.is_zero or f.degree < 1:
        raise StepRangeError(m, 1, 0, what="step M for a constant polynomial")
    if f.degree == 1 and m < 1:
        raise StepRangeError(m, 1, 1)

    leading = factor_leading(f, m)
    zero = next((index for index, h in enumerate(leading) if h == 0), None)
    if zero is not None:
        raise FactorizationInapplicableError(zero)

    cs = tuple(leading[i - 1] / leading[i] for i in range(1, len(leading)))
    logger.debug(f"Factorization parameters for M={m}: {[str(c) for c in cs]}")
    return FactorizationResult(cs=cs, terminal=f.coeffs[-1], m=m)


def factor_product_window(result: FactorizationResult, size: int) -> Grid:
    """
    Leading size x size block of J(c_1) ... J(c_n) H~_M(a_n), computed exactly.

    Factors are applied right to left to the first size + n rows of H~_M(a_n).
    """
    n, m = result.n, result.m
    rows = size + n
    # H~_M of the constant a_n: column j holds a_n at row M(j-1)+1
    block: List[List[Fraction]] = [
        [result.terminal if row == m * (col - 1) + 1 else Fraction(0) for col in range(1, size + 1)]
        for row in range(1, rows + 1)
    ]
    for factor in range(n, 0, -1):
        block = [
            [result.zeta(factor, row + 1, row + 1) * a + b for a, b in zip(block[row], block[row + 1])]
            for row in range(len(block) - 1)
        ]
    return block


def verify_factorization(f: RationalPolynomial, m: int, result: FactorizationResult, size: int) -> bool:
    """
    Compare the size x size blocks of the factor product and of H~_M(f) exactly.

    Raises:
        WindowTooSmallError: If size < n + M
    """
    n = int(f.degree)
    if size < n + m:
        raise WindowTooSmallError(f"verification window {size} is smaller than n + M = {n + m}")
    product = factor_product_window(result, size)
    # built directly: the degree-one case allows M > n
    target = GeneralizedHurwitzMatrix(source=f, m=m, variant=MatrixVariant.H_TILDE)
    for row in range(1, size + 1):
        for col in range(1, size + 1):
            expected = target.entry(row, col)
            if product[row - 1][col - 1] != expected:
                logger.debug(f"Factorization mismatch at ({row}, {col}): {product[row - 1][col - 1]} != {expected}")
                return False
    return True


def ratio_from_minors(f: RationalPolynomial, m: int, i: int) -> Fraction:
    """
    c_i written through special minors H_M(k, r).

    With r = ceil(i/(M-1)) and k = r(M-1) - i:
      - if ceil((i-1)/(M-1)) = r:
          c_i = H(k+2, r) H(k+1, r-1) / (H(k+2, r-1) H(k+1, r))
      - otherwise i = l(M-1) + 1 and
          c_i = H(k-M+3, r-1) H(k+1, r-1) / (H(k-M+3, r-2) H(k+1, r))
    For i = 1 the numerator h_0 is a_0 itself.

    Raises:
        IndexRangeError: If i is not in 1..n
        ZeroDivisionError: If a denominator minor vanishes
    """
    n = int(f.degree)
    if i < 1 or i > n:
        raise IndexRangeError(f"c_{i} is defined for 1 <= i <= {n}")
    matrix = hurwitz_matrix(f, m)
    r = -(-i // (m - 1))
    k = r * (m - 1) - i

    if i == 1:
        return f.coeffs[0] / special_minor(matrix, k + 1, r)
    if -(-(i - 1) // (m - 1)) == r:
        numerator = special_minor(matrix, k + 2, r) * special_minor(matrix, k + 1, r - 1)
        denominator = special_minor(matrix, k + 2, r - 1) * special_minor(matrix, k + 1, r)
    else:
        top = k - m + 3
        numerator = special_minor(matrix, top, r - 1) * special_minor(matrix, k + 1, r - 1)
        denominator = special_minor(matrix, top, r - 2) * special_minor(matrix, k + 1, r)
    return numerator / denominator
