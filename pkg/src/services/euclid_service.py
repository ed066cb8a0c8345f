"""
Generalized Euclidean algorithm with step M.

Starting from the arithmetic split f = f_0 + ... + f_{M-1}, step i (i = 0..n-M)
produces f_{i+M}:
  - if deg f_i >= deg f_{i+1} and f_{i+1} is nonzero, f_{i+M} is the remainder of
    f_i divided by f_{i+1} and d_i the quotient;
  - otherwise (f_i of smaller degree, or f_{i+1} zero) d_i = 0 and f_{i+M} = f_i.
The run stops once f_n is constructed.
"""
import logging
from fractions import Fraction
from typing import List, Sequence

from models.euclid import EuclidTable, NondegeneracyReport, TableLayout
from models.polynomial import RationalPolynomial, split_arithmetic
from utils.errors import StepRangeError
from utils.rationals import RationalLike, to_fraction

logger = logging.getLogger(__name__)


def validate_step(f: RationalPolynomial, m: int) -> int:
    """
    Check 2 <= M <= n with n >= 2 and return n.

    Raises:
        StepRangeError: If the step or the degree is out of range
    """
    n = int(f.degree) if not f.is_zero else -1
    if n < 2 or m < 2 or m > n:
        raise StepRangeError(m, 2, n)
    return n


def run_generalized_euclid(f: RationalPolynomial, m: int) -> EuclidTable:
    """
    Run the step-M algorithm on f.

    Args:
        f: Polynomial of degree n >= 2
        m: Step with 2 <= m <= n

    Returns:
        EuclidTable with f_0..f_n, d_0..d_{n-M} and h_0..h_n

    Raises:
        StepRangeError: If m is out of range

    Example:
        >>> table = run_generalized_euclid(parse_polynomial("1,7,21,35,35,21,7,1"), 3)
        >>> table.leading[3]
        Fraction(30, 1)
    """
    n = validate_step(f, m)

    polys: List[RationalPolynomial] = [part.poly for part in split_arithmetic(f, m)]
    quotients: List[RationalPolynomial] = []

    for i in range(n - m + 1):
        current, following = polys[i], polys[i + 1]
        if not following.is_zero and current.degree >= following.degree:
            quotient, remainder = current.divmod_exact(following)
            logger.debug(f"step {i}: divide, d_{i} = {quotient}, f_{i + m} = {remainder}")
        else:
            quotient, remainder = RationalPolynomial.zero(), current
            logger.debug(f"step {i}: copy, f_{i + m} = f_{i}")
        quotients.append(quotient)
        polys.append(remainder)

    leading = tuple(p.leading for p in polys)
    nondegenerate = all(not p.is_zero for p in polys)
    logger.debug(f"Euclid step {m} on degree {n}: nondegenerate={nondegenerate}")

    return EuclidTable(
        m=m,
        source=f,
        polys=tuple(polys),
        quotients=tuple(quotients),
        leading=leading,
        nondegenerate=nondegenerate,
    )


def leading_coefficients(table: EuclidTable) -> List[Fraction]:
    """h_0..h_n; h_i = 0 where f_i is the zero polynomial"""
    return list(table.leading)


def check_nondegenerate(table: EuclidTable) -> NondegeneracyReport:
    """
    Non-degeneracy verdict with diagnostics.

    When no f_i vanishes, also confirms deg f_k = n - k and that every d_i is a
    degree-one monomial c_i x; any index breaking either rule is listed.
    """
    first_zero = next((k for k, p in enumerate(table.polys) if p.is_zero), None)
    if first_zero is not None:
        return NondegeneracyReport(nondegenerate=False, first_zero=first_zero)

    n = table.n
    degree_mismatches = [k for k, p in enumerate(table.polys) if p.degree != n - k]
    nonlinear = [
        i for i, d in enumerate(table.quotients)
        if d.degree != 1 or d.coefficient(0) != 0
    ]
    return NondegeneracyReport(
        nondegenerate=True,
        degree_mismatches=degree_mismatches,
        nonlinear_quotients=nonlinear,
    )


def render_table(table: EuclidTable) -> TableLayout:
    """Group layout: row j holds f_j, f_{j+M}, ...; cells past f_n are None"""
    m, n = table.m, table.n
    columns = n // m + 1
    rows = []
    for j in range(m):
        row = []
        for k in range(columns):
            index = j + m * k
            row.append(table.polys[index] if index <= n else None)
        rows.append(row)
    return TableLayout(m=m, rows=rows)


def verify_structure(table: EuclidTable) -> List[str]:
    """
    Check the structural properties every table satisfies.

    Returns:
        Human-readable violations; empty for a correct table
    """
    m, n = table.m, table.n
    polys, quotients = table.polys, table.quotients
    violations: List[str] = []

    for i, p in enumerate(polys):
        if not p.is_arithmetic(m):
            violations.append(f"f_{i} is not arithmetic with difference {m}")

    for i in range(n - m + 1):
        a, b = polys[i], polys[i + m]
        if not a.is_zero and not b.is_zero and a.exponent_residue(m) != b.exponent_residue(m):
            violations.append(f"f_{i} and f_{i + m} have different residues")

    for i, d in enumerate(quotients):
        if d.is_zero:
            continue
        if not d.is_arithmetic(m):
            violations.append(f"d_{i} is not arithmetic with difference {m}")
        elif table.nondegenerate and d.degree != 1:
            violations.append(f"d_{i} has degree {d.degree} in a nondegenerate table")

    for i in range(n):
        a, b = polys[i], polys[i + 1]
        if not a.is_zero and not b.is_zero and abs(a.degree - b.degree) < 1:
            violations.append(f"f_{i} and f_{i + 1} have equal degree")

    for i, d in enumerate(quotients):
        if not (polys[i] - d * polys[i + 1] - polys[i + m]).is_zero:
            violations.append(f"division identity fails at step {i}")
        if polys[i + 1].is_zero and polys[i + m] != polys[i]:
            violations.append(f"row of f_{i} is not propagated after zero f_{i + 1}")

    return violations


def synthesize_from_leading(leading: Sequence[RationalLike], m: int) -> RationalPolynomial:
    """
    Build the polynomial whose step-M algorithm has the given leading coefficients.

    Inverse of the non-degenerate run: f_{n-j} = h_{n-j} x^j for j < M, then
    f_i = (h_i / h_{i+1}) x f_{i+1} + f_{i+M} for i = n-M down to 0, and
    f = f_0 + ... + f_{M-1}.

    Args:
        leading: h_0..h_n, all nonzero, n >= 2
        m: Step with 2 <= m <= n

    Raises:
        ValueError: If some h_i is zero
        StepRangeError: If m is out of range
    """
    h = [to_fraction(value) for value in leading]
    n = len(h) - 1
    if n < 2 or m < 2 or m > n:
        raise StepRangeError(m, 2, max(n, 2))
    if any(value == 0 for value in h):
        raise ValueError("all leading coefficients must be nonzero")

    polys: List[RationalPolynomial] = [RationalPolynomial.zero()] * (n + 1)
    for j in range(m):
        polys[n - j] = RationalPolynomial.monomial(h[n - j], j)
    x = RationalPolynomial.monomial(1, 1)
    for i in range(n - m, -1, -1):
        polys[i] = x * polys[i + 1] * (h[i] / h[i + 1]) + polys[i + m]

    total = RationalPolynomial.zero()
    for part in polys[:m]:
        total = total + part
    return total
