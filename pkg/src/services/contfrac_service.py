"""
Continued-fraction expansion of residue-pair ratios f_i / f_j and cone checks.

Each step extracts only the leading term of f_{l-1} / f_l:
    f_{l-1} = q_l f_l + f_{l+1},  q_l = (h_{l-1} / h_l) x^e_l
with e_l = j - i for odd l and M - (j - i) for even l. In the generic case the
remainders have degrees
    deg f_l = n - i - M l/2        (l even)
    deg f_l = n - j - M (l-1)/2    (l odd)
"""
import cmath
import logging
import math
from typing import List, Tuple

from models.contfrac import ContinuedFraction
from models.polynomial import RationalPolynomial, split_arithmetic
from utils.errors import DegeneratePairError, EvaluationError, IndexRangeError, StepRangeError

logger = logging.getLogger(__name__)

# Smallest magnitude we divide by during evaluation
EVALUATION_FLOOR = 1e-300


def expected_degree(n: int, m: int, i: int, j: int, index: int) -> int:
    """Generic degree of the pair remainder f^{ij}_index"""
    if index % 2 == 0:
        return n - i - m * (index // 2)
    return n - j - m * ((index - 1) // 2)


def expand_pair_cfrac(f: RationalPolynomial, m: int, i: int, j: int) -> ContinuedFraction:
    """
    Expand f_i / f_j by leading-term division.

    The expansion stops at the first zero remainder. If the generic degree of that
    remainder is still nonnegative the fraction is marked terminated_early.

    Args:
        f: Polynomial of degree n
        m: Step with 2 <= m <= n
        i, j: Residues with 0 <= i < j <= m-1

    Returns:
        ContinuedFraction with exact coefficients h_{l-1}/h_l

    Raises:
        StepRangeError: If m is out of range
        IndexRangeError: If (i, j) is not a residue pair
        DegeneratePairError: If f_i or f_j is zero or a remainder has a non-generic
            degree; step is the division step (0 for the starting pair)

    Example:
        >>> cf = expand_pair_cfrac(parse_polynomial("1,1,1,1.001,1,0.999"), 3, 0, 1)
        >>> [str(c) for c in cf.coefficients], cf.exponents
        (['1', '1000', '1/1000'], [1, 2, 1])
    """
    n = -1 if f.is_zero else int(f.degree)
    if m < 2 or m > n:
        raise StepRangeError(m, 2, max(n, 2))
    if not (0 <= i < j <= m - 1):
        raise IndexRangeError(f"residue pair ({i}, {j}) needs 0 <= i < j <= {m - 1}")

    parts = split_arithmetic(f, m)
    remainders: List[RationalPolynomial] = [parts[i].poly, parts[j].poly]
    for index, poly in enumerate(remainders):
        if poly.is_zero or poly.degree != expected_degree(n, m, i, j, index):
            raise DegeneratePairError(0, f"f_{(i, j)[index]} does not have degree {expected_degree(n, m, i, j, index)}")

    low, high = j - i, m - (j - i)
    coefficients = []
    terminated_early = False
    ell = 1
    while True:
        previous, current = remainders[ell - 1], remainders[ell]
        exponent = low if ell % 2 == 1 else high
        ratio = previous.leading / current.leading
        coefficients.append(ratio)
        following = previous - RationalPolynomial.monomial(ratio, exponent) * current
        target = expected_degree(n, m, i, j, ell + 1)
        logger.debug(f"pair ({i},{j}) step {ell}: q = {ratio} x^{exponent}, remainder degree {following.degree}")

        if following.is_zero:
            if target >= 0:
                terminated_early = True
                logger.warning(f"Pair ({i},{j}) expansion ended early at step {ell}: remainder vanished, expected degree {target}")
            break
        if following.degree != target:
            raise DegeneratePairError(ell, f"remainder has degree {following.degree}, expected {target}")
        remainders.append(following)
        ell += 1

    return ContinuedFraction(
        coefficients=tuple(coefficients),
        exponent_low=low,
        exponent_high=high,
        pair=(i, j),
        terminated_early=terminated_early,
        degrees=tuple(int(r.degree) for r in remainders),
    )


def cfrac_evaluate(cf: ContinuedFraction, z: complex) -> complex:
    """
    Evaluate the fraction bottom-up in double precision.

    Raises:
        EvaluationError: If z = 0 or an intermediate denominator is below EVALUATION_FLOOR
    """
    if z == 0:
        raise EvaluationError("continued fraction is evaluated at z != 0")
    if not cf.coefficients:
        raise EvaluationError("empty continued fraction")
    terms = [float(c) * complex(z) ** e for c, e in zip(cf.coefficients, cf.exponents)]
    value = terms[-1]
    for term in reversed(terms[:-1]):
        if abs(value) < EVALUATION_FLOOR:
            raise EvaluationError(f"denominator {abs(value):.3e} too close to zero")
        value = term + 1 / value
    return value


def cone_image_bounds(cf: ContinuedFraction, alpha: float) -> Tuple[float, float]:
    """
    Argument range [-(M-m) alpha, m alpha] that a positive fraction maps the cone
    0 <= arg z <= alpha into, for alpha in [0, pi/M] and m = exponent_low.
    """
    return -cf.exponent_high * alpha, cf.exponent_low * alpha


def maps_into_cone(cf: ContinuedFraction, alpha: float, z: complex, slack: float = 1e-9) -> bool:
    """True if arg R(z) lies within cone_image_bounds(cf, alpha) widened by slack"""
    if alpha < 0 or alpha > math.pi / cf.step + slack:
        raise ValueError(f"alpha must lie in [0, pi/{cf.step}]")
    low, high = cone_image_bounds(cf, alpha)
    angle = cmath.phase(cfrac_evaluate(cf, z))
    return low - slack <= angle <= high + slack
