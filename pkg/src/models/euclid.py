"""
Result types of the generalized Euclidean algorithm with step M
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from models.polynomial import RationalPolynomial
from utils.rationals import format_fraction


@dataclass(frozen=True)
class EuclidTable:
    """
    Output of the step-M algorithm.

    polys holds f_0..f_n, quotients holds d_0..d_{n-M} (zero for copy steps) and
    leading holds h_0..h_n with h_i = 0 when f_i is zero.
    """

    m: int
    source: RationalPolynomial
    polys: Tuple[RationalPolynomial, ...]
    quotients: Tuple[RationalPolynomial, ...]
    leading: Tuple[Fraction, ...]
    nondegenerate: bool

    @property
    def n(self) -> int:
        return len(self.polys) - 1

    def group(self, residue: int) -> List[RationalPolynomial]:
        """The row f_residue, f_{residue+M}, f_{residue+2M}, ..."""
        return list(self.polys[residue::self.m])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "polys": [p.to_strings() for p in self.polys],
            "quotients": [q.to_strings() for q in self.quotients],
            "leading": [format_fraction(h) for h in self.leading],
            "nondegenerate": self.nondegenerate,
        }


@dataclass(frozen=True)
class NondegeneracyReport:
    """Diagnostics returned with the non-degeneracy verdict"""

    nondegenerate: bool
    first_zero: Optional[int] = None
    degree_mismatches: List[int] = field(default_factory=list)
    nonlinear_quotients: List[int] = field(default_factory=list)

    @property
    def degrees_match(self) -> bool:
        """deg f_k = n - k for every k"""
        return self.nondegenerate and not self.degree_mismatches

    @property
    def quotients_linear(self) -> bool:
        """Every d_i is c_i * x"""
        return self.nondegenerate and not self.nonlinear_quotients

    def __bool__(self) -> bool:
        return self.nondegenerate


@dataclass(frozen=True)
class TableLayout:
    """
    Group layout of a table: rows[j][k] = f_{j+Mk}, None past the end.

    Every row has the same number of columns.
    """

    m: int
    rows: List[List[Optional[RationalPolynomial]]]

    @property
    def columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0
