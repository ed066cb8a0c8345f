"""
Generalized Hurwitz matrices: entries, exact minors, special minors, total
nonnegativity verdicts and the residue-pair lift.

Minor convention used throughout: row indices first, column indices second,
both 1-based.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import Iterable, List, Optional, Sequence, Tuple

from constants import MatrixVariant, TNMethod, TNStatus
from models.euclid import EuclidTable
from models.hurwitz import (
    GeneralizedHurwitzMatrix,
    MinorWitness,
    PairLift,
    SpecialMinorSet,
    TNVerdict,
    special_minor_index,
)
from models.polynomial import RationalPolynomial, coefficient, split_arithmetic
from utils.errors import IndexRangeError, MinorShapeError, StepRangeError
from utils.linalg import det_bareiss

logger = logging.getLogger(__name__)

DEFAULT_MINOR_ORDER_CAP = 4


def _degree(f: RationalPolynomial) -> int:
    return -1 if f.is_zero else int(f.degree)


def hurwitz_matrix(f: RationalPolynomial, m: int, variant: MatrixVariant = MatrixVariant.H) -> GeneralizedHurwitzMatrix:
    """
    Matrix view of f for step M.

    Raises:
        StepRangeError: If M is not in [1, n]
    """
    n = _degree(f)
    if m < 1 or m > n:
        raise StepRangeError(m, 1, max(n, 1))
    return GeneralizedHurwitzMatrix(source=f, m=m, variant=variant)


def hm_entry(f: RationalPolynomial, m: int, variant: MatrixVariant, i: int, j: int) -> Fraction:
    """
    Entry (i, j) of H_M(f) or its tilde variant.

    Raises:
        StepRangeError: If M is out of range
        IndexRangeError: If i or j is below 1
    """
    return hurwitz_matrix(f, m, variant).entry(i, j)


def minor_exact(matrix: GeneralizedHurwitzMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """
    Exact minor of a matrix view on the given rows and columns.

    Args:
        matrix: Any generalized Hurwitz view
        rows: 1-based row indices
        cols: 1-based column indices (same count as rows)

    Returns:
        Exact determinant of the selected submatrix

    Raises:
        MinorShapeError: If the index sets differ in size or are empty
        IndexRangeError: If an index is below 1

    Example:
        >>> h3 = hurwitz_matrix(parse_polynomial("1,1,5,2,4,1/2"), 3)
        >>> minor_exact(h3, [2, 3], [1, 2])
        Fraction(-2, 1)
    """
    if len(rows) != len(cols):
        raise MinorShapeError(f"minor needs as many rows as columns, got {len(rows)} and {len(cols)}")
    if not rows:
        raise MinorShapeError("minor of order zero")
    return det_bareiss(matrix.window(rows, cols))


def special_minor(matrix: GeneralizedHurwitzMatrix, k: int, r: int) -> Fraction:
    """H_M(k, r): rows k..k+r-1, columns 1..r; equals 1 for r = 0"""
    if r == 0:
        return Fraction(1)
    return minor_exact(matrix, range(k, k + r), range(1, r + 1))


def special_minors(f: RationalPolynomial, m: int) -> SpecialMinorSet:
    """
    Delta_1..Delta_n of H_M(f).

    Raises:
        StepRangeError: If M is not in [2, n]
    """
    n = _degree(f)
    if m < 2 or m > n:
        raise StepRangeError(m, 2, max(n, 2))
    matrix = hurwitz_matrix(f, m)
    values = []
    for p in range(1, n + 1):
        k, r = special_minor_index(p, m)
        values.append(special_minor(matrix, k, r))
    logger.debug(f"Special minors of H_{m}: {[str(v) for v in values]}")
    return SpecialMinorSet(m=m, values=tuple(values))


def h_products(table: EuclidTable, k: int, r: int) -> Fraction:
    """
    Product of leading coefficients equal to the special minor H_M(k, r).

    H_M(k, r) = h_{(M-1)-k+1} * h_{2(M-1)-k+1} * ... * h_{r(M-1)-k+1}
    """
    m = table.m
    product = Fraction(1)
    for s in range(1, r + 1):
        product *= table.leading[s * (m - 1) - k + 1]
    return product


def h_from_special_minors(minors: SpecialMinorSet, i: int) -> Fraction:
    """
    h_i as a ratio of special minors.

    With r = ceil(i/(M-1)) and k = r(M-1) - i, h_i = H_M(k+1, r) / H_M(k+1, r-1);
    in p-numbering that is Delta_i / Delta_{i-(M-1)}.

    Raises:
        ZeroDivisionError: If the denominator minor vanishes
    """
    if i < 1 or i > minors.n:
        raise IndexRangeError(f"h_{i} is not expressible by special minors (1 <= i <= {minors.n})")
    return minors.value(i) / minors.value(i - (minors.m - 1))


# ----------------------------------------------------------------------
# Total nonnegativity
# ----------------------------------------------------------------------


def witness_window(n: int, m: int) -> Tuple[int, int]:
    """Rows 1..n+M and columns 1..ceil(n/M)+2 searched for negative minors"""
    return n + m, ceil(n / m) + 2


def iter_minor_indices(n_rows: int, n_cols: int, order: int) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Row sets lexicographically, then column sets lexicographically"""
    for rows in combinations(range(1, n_rows + 1), order):
        for cols in combinations(range(1, n_cols + 1), order):
            yield rows, cols


def find_negative_minor(matrix: GeneralizedHurwitzMatrix, n: int, cap: int) -> Tuple[Optional[MinorWitness], int, int]:
    """
    Search the truncation window for the first negative minor.

    Returns:
        (witness or None, highest order searched, number of minors evaluated)
    """
    n_rows, n_cols = witness_window(n, matrix.m)
    checked = 0
    searched = 0
    for order in range(1, min(cap, n_rows, n_cols) + 1):
        searched = order
        for rows, cols in iter_minor_indices(n_rows, n_cols, order):
            grid = matrix.window(rows, cols)
            # a zero row or column forces a zero minor
            if any(not any(row) for row in grid) or any(not any(col) for col in zip(*grid)):
                continue
            checked += 1
            value = det_bareiss(grid)
            if value < 0:
                logger.info(f"Negative minor of H_{matrix.m}: rows {rows} cols {cols} = {value}")
                return MinorWitness(rows=rows, cols=cols, value=value), order, checked
    return None, searched, checked


def tn_verdict(f: RationalPolynomial, m: int, cap: int = DEFAULT_MINOR_ORDER_CAP) -> TNVerdict:
    """
    Decide total nonnegativity of H_M(f) where the exact criteria allow.

    All special minors positive gives TN_CERTIFIED. Otherwise the truncation window
    is searched for a negative minor up to order `cap`; a hit gives NOT_TN with the
    witness. With no hit, a negative special minor is itself the witness; a zero
    special minor (or M = 1, which has no special minors) gives INCONCLUSIVE.

    Args:
        f: Polynomial of degree n
        m: Step with 1 <= m <= n
        cap: Largest minor order searched

    Returns:
        TNVerdict

    Raises:
        StepRangeError: If M is out of range
    """
    n = _degree(f)
    matrix = hurwitz_matrix(f, m)

    minors = None
    if m >= 2:
        minors = special_minors(f, m)
        if minors.all_positive():
            logger.info(f"H_{m} is totally nonnegative: all {n} special minors positive")
            return TNVerdict(
                status=TNStatus.TN_CERTIFIED,
                method=TNMethod.SPECIAL_MINORS_POSITIVE,
                special_minors=minors,
            )

    witness, searched, checked = find_negative_minor(matrix, n, cap)
    if witness is not None:
        return TNVerdict(
            status=TNStatus.NOT_TN,
            method=TNMethod.WITNESS_FOUND,
            witness=witness,
            special_minors=minors,
            searched_order=searched,
            minors_checked=checked,
        )

    if minors is not None:
        negative = next((p for p, v in enumerate(minors.values, start=1) if v < 0), None)
        if negative is not None:
            k, r = minors.index(negative)
            witness = MinorWitness(
                rows=tuple(range(k, k + r)),
                cols=tuple(range(1, r + 1)),
                value=minors.values[negative - 1],
            )
            logger.info(f"Special minor Delta_{negative} of H_{m} is negative: {witness.value}")
            return TNVerdict(
                status=TNStatus.NOT_TN,
                method=TNMethod.WITNESS_FOUND,
                witness=witness,
                special_minors=minors,
                searched_order=searched,
                minors_checked=checked,
            )

    return TNVerdict(
        status=TNStatus.INCONCLUSIVE,
        method=TNMethod.EXHAUSTIVE_CAP,
        special_minors=minors,
        searched_order=searched,
        minors_checked=checked,
    )


# ----------------------------------------------------------------------
# Residue pairs
# ----------------------------------------------------------------------


def _check_pair(m: int, i: int, j: int) -> None:
    if not (0 <= i < j <= m - 1):
        raise IndexRangeError(f"residue pair ({i}, {j}) needs 0 <= i < j <= {m - 1}")


def pair_lift(f: RationalPolynomial, m: int, i: int, j: int) -> PairLift:
    """
    Interleave residues i and j of f into one coefficient vector.

    p_{2k} = a_{kM+i}, p_{2k+1} = a_{kM+j}, giving
    m = floor((n-i)/M) + floor((n-j)/M) + 1, which is 2 floor(n/M) when
    (n-i)/M and (n-j)/M have different integer parts and 2 floor((n-i)/M) + 1
    otherwise. alpha and beta are the fractional parts of (n-i)/M and (n-j)/M.

    Raises:
        StepRangeError: If M is not in [2, n]
        IndexRangeError: If (i, j) is not a valid residue pair, or both parts are zero
    """
    n = _degree(f)
    if m < 2 or m > n:
        raise StepRangeError(m, 2, max(n, 2))
    _check_pair(m, i, j)

    parts = split_arithmetic(f, m)
    part_i, part_j = parts[i].poly, parts[j].poly
    if part_i.is_zero and part_j.is_zero:
        raise IndexRangeError(f"residue parts f_{i} and f_{j} are both zero")

    slots_i = (n - i) // m
    slots_j = (n - j) // m
    degree = slots_i + slots_j + 1
    coefficients = []
    for slot in range(degree + 1):
        k, odd = divmod(slot, 2)
        residue = j if odd else i
        coefficients.append(coefficient(f, k * m + residue))

    alpha = Fraction(n - i, m) - slots_i
    beta = Fraction(n - j, m) - slots_j
    return PairLift(
        i=i,
        j=j,
        step=m,
        n=n,
        coefficients=tuple(coefficients),
        alpha=alpha,
        beta=beta,
        part_i=part_i,
        part_j=part_j,
    )


def pair_row(m: int, i: int, j: int, row: int) -> int:
    """Row of H_M carrying row `row` of the pair submatrix: tM - j for row 2t-1, tM - i for row 2t"""
    t = (row + 1) // 2
    return t * m - (j if row % 2 == 1 else i)


def pair_matrix_entry(f: RationalPolynomial, m: int, i: int, j: int, row: int, col: int) -> Fraction:
    """
    Entry of the pair submatrix H_M^(ij).

    Odd row 2t-1 holds a_{(col-t)M+j}, even row 2t holds a_{(col-t)M+i}; these are
    rows tM-j and tM-i of H_M.
    """
    _check_pair(m, i, j)
    if row < 1 or col < 1:
        raise IndexRangeError(f"matrix indices are 1-based, got ({row}, {col})")
    return hm_entry(f, m, MatrixVariant.H, pair_row(m, i, j, row), col)


def pair_leading_principal_minors(f: RationalPolynomial, m: int, i: int, j: int, count: Optional[int] = None) -> List[Fraction]:
    """
    Leading principal minors of H_M^(ij) of orders 1..count.

    count defaults to the lift degree m, the number of nonzero leading principal
    minors of a pair coming from a polynomial with positive leading coefficients.
    """
    lift = pair_lift(f, m, i, j)
    if count is None:
        count = lift.m
    matrix = hurwitz_matrix(f, m)
    minors = []
    for order in range(1, count + 1):
        rows = [pair_row(m, i, j, r) for r in range(1, order + 1)]
        minors.append(minor_exact(matrix, rows, range(1, order + 1)))
    return minors


# ----------------------------------------------------------------------
# Even M against the ordinary Hurwitz matrix
# ----------------------------------------------------------------------


def map_special_minor_to_h2(m: int, j: int, r: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    H_2 index sets whose minor equals the special minor H_M(j, r) for even M = 2k.

    Odd j: rows 1..r, columns c*k - (j-1)/2.
    Even j: rows 2..r+1, columns c*k - (j-2)/2.

    Raises:
        StepRangeError: If M is odd or below 2
        IndexRangeError: If (j, r) is not a special-minor index
    """
    if m < 2 or m % 2:
        raise StepRangeError(m, 2, m, what="even step M")
    if not (1 <= j <= m - 1) or r < 1:
        raise IndexRangeError(f"({j}, {r}) is not a special-minor index for M={m}")
    k = m // 2
    if j % 2 == 1:
        rows = tuple(range(1, r + 1))
        shift = (j - 1) // 2
    else:
        rows = tuple(range(2, r + 2))
        shift = (j - 2) // 2
    cols = tuple(c * k - shift for c in range(1, r + 1))
    return rows, cols


def hurwitz_positivity_predicate(n: int, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """
    Index rule 0 <= 2c_l - r_l <= n for every paired (r_l, c_l).

    When it holds, the H_2 minor on these index sets is positive for every stable
    polynomial of degree n.
    """
    if len(rows) != len(cols):
        raise MinorShapeError("rows and cols must have the same length")
    return all(0 <= 2 * c - r <= n for r, c in zip(sorted(rows), sorted(cols)))
