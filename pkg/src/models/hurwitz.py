"""
Generalized Hurwitz matrix views and minor verdict types.

Matrices are conceptually infinite; all accessors take explicit 1-based row and
column indices, and every entry outside the band is zero.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from constants import MatrixVariant, TNMethod, TNStatus
from models.polynomial import RationalPolynomial, coefficient
from utils.errors import IndexRangeError
from utils.rationals import format_fraction


@dataclass(frozen=True)
class GeneralizedHurwitzMatrix:
    """
    Lazy view of H_M(f) or its tilde variant.

    H entry (i, j) is a_{Mj-i}; H_TILDE entry (i, j) is a_{M(j-1)-i+1}, so its first
    row reads a_0, a_M, a_{2M}, ... Coefficients outside 0..n are zero.
    """

    source: RationalPolynomial
    m: int
    variant: MatrixVariant = MatrixVariant.H

    def index_of(self, row: int, col: int) -> int:
        """Coefficient index a_k held at (row, col)"""
        if self.variant == MatrixVariant.H:
            return self.m * col - row
        return self.m * (col - 1) - row + 1

    def entry(self, row: int, col: int) -> Fraction:
        if row < 1 or col < 1:
            raise IndexRangeError(f"matrix indices are 1-based, got ({row}, {col})")
        return coefficient(self.source, self.index_of(row, col))

    def window(self, rows: Sequence[int], cols: Sequence[int]) -> List[List[Fraction]]:
        """Materialize the block rows x cols (1-based indices, in the given order)"""
        return [[self.entry(r, c) for c in cols] for r in rows]


@dataclass(frozen=True)
class MinorWitness:
    """A minor of H_M picked by row and column index sets (row indices first)"""

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    value: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "value": format_fraction(self.value),
        }


@dataclass(frozen=True)
class SpecialMinorSet:
    """
    Special minors Delta_1..Delta_n.

    Delta_p is the minor H_M(k, r) on rows k..k+r-1 and columns 1..r, where
    p = (M-1)(r-1) + (M-k) and 1 <= k <= M-1.
    """

    m: int
    values: Tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def value(self, p: int) -> Fraction:
        """Delta_p; Delta_q = 1 for q <= 0 (empty minor)"""
        if p <= 0:
            return Fraction(1)
        return self.values[p - 1]

    def index(self, p: int) -> Tuple[int, int]:
        return special_minor_index(p, self.m)

    def all_positive(self) -> bool:
        return all(v > 0 for v in self.values)

    def first_nonpositive(self) -> Optional[int]:
        return next((p for p, v in enumerate(self.values, start=1) if v <= 0), None)

    def to_list(self) -> List[Dict[str, Any]]:
        """[{p, k, r, value}] in p order"""
        rows = []
        for p, value in enumerate(self.values, start=1):
            k, r = self.index(p)
            rows.append({"p": p, "k": k, "r": r, "value": format_fraction(value)})
        return rows


def special_minor_index(p: int, m: int) -> Tuple[int, int]:
    """
    Solve p = (M-1)(r-1) + (M-k) for (k, r) with 1 <= k <= M-1.

    Raises:
        IndexRangeError: If p < 1 or M < 2
    """
    if m < 2 or p < 1:
        raise IndexRangeError(f"special minor index p={p} needs p >= 1 and M >= 2")
    r = (p - 1) // (m - 1) + 1
    k = m - 1 - (p - 1) % (m - 1)
    return k, r


@dataclass(frozen=True)
class TNVerdict:
    """Total-nonnegativity verdict for H_M(f)"""

    status: TNStatus
    method: TNMethod
    witness: Optional[MinorWitness] = None
    special_minors: Optional[SpecialMinorSet] = None
    searched_order: int = 0
    minors_checked: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "method": self.method.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "searched_order": self.searched_order,
            "minors_checked": self.minors_checked,
        }


@dataclass(frozen=True)
class PairLift:
    """
    Lift of the residue pair (i, j) to one polynomial P.

    coefficients holds the interleaved vector p_0..p_m with p_{2k} = a_{kM+i} and
    p_{2k+1} = a_{kM+j}; leading zeros are kept so the ordinary Hurwitz matrix of
    the vector matches the pair submatrix entrywise. polynomial strips them.
    """

    i: int
    j: int
    step: int
    n: int
    coefficients: Tuple[Fraction, ...]
    alpha: Fraction
    beta: Fraction
    part_i: RationalPolynomial = field(compare=False, default_factory=RationalPolynomial.zero)
    part_j: RationalPolynomial = field(compare=False, default_factory=RationalPolynomial.zero)

    @property
    def m(self) -> int:
        """Degree m of the lift: the number of interleaved slots minus one"""
        return len(self.coefficients) - 1

    @property
    def epsilon(self) -> int:
        """(1 - (-1)^m) / 2"""
        return self.m % 2

    @property
    def polynomial(self) -> RationalPolynomial:
        return RationalPolynomial.from_coeffs(self.coefficients, strip=True)

    def hurwitz_entry(self, row: int, col: int) -> Fraction:
        """Ordinary Hurwitz matrix H_2 of the coefficient vector: p_{2col-row}"""
        index = 2 * col - row
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return Fraction(0)

    def even_odd_residual(self, x: float) -> float:
        """
        Relative residual of the even/odd-part identities at a real x > 0.

        The even-slot part equals x^(eps - 2 alpha) f_i(x^(2/M)) and the odd-slot part
        equals x^(1 - eps - 2 beta) f_j(x^(2/M)).
        """
        if x <= 0:
            raise ValueError("even/odd identity is checked at x > 0")
        m = self.m
        even = sum(float(p) * x ** (m - k) for k, p in enumerate(self.coefficients) if k % 2 == 0)
        odd = sum(float(p) * x ** (m - k) for k, p in enumerate(self.coefficients) if k % 2 == 1)
        y = x ** (2.0 / self.step)
        even_expected = x ** (self.epsilon - 2 * float(self.alpha)) * self.part_i.evaluate_complex(y).real
        odd_expected = x ** (1 - self.epsilon - 2 * float(self.beta)) * self.part_j.evaluate_complex(y).real
        scale = 1.0 + abs(even) + abs(odd)
        return (abs(even - even_expected) + abs(odd - odd_expected)) / scale

    def to_dict(self) -> Dict[str, Any]:
        return {
            "i": self.i,
            "j": self.j,
            "m": self.m,
            "coefficients": [format_fraction(c) for c in self.coefficients],
            "alpha": format_fraction(self.alpha),
            "beta": format_fraction(self.beta),
            "epsilon": self.epsilon,
        }
