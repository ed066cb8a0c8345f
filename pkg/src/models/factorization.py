"""
Factorization of the tilde generalized Hurwitz matrix into bidiagonal factors
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from utils.rationals import format_fraction


@dataclass(frozen=True)
class FactorizationResult:
    """
    Parameters of H~_M(f) = J(c_1) ... J(c_n) H~_M(a_n).

    J(c) has c on the diagonal at positions Mk+1, 1 on every superdiagonal
    position and 0 elsewhere.
    """

    cs: Tuple[Fraction, ...]
    terminal: Fraction
    m: int

    @property
    def n(self) -> int:
        return len(self.cs)

    def zeta(self, factor: int, row: int, col: int) -> Fraction:
        """Entry (row, col) of J(c_factor), 1-based"""
        if col == row + 1:
            return Fraction(1)
        if row == col and (row - 1) % self.m == 0:
            return self.cs[factor - 1]
        return Fraction(0)

    def all_positive(self) -> bool:
        return all(c > 0 for c in self.cs) and self.terminal > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "cs": [format_fraction(c) for c in self.cs],
            "terminal": format_fraction(self.terminal),
        }
