"""
Continued fractions with alternating monomial exponents
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from models.polynomial import RationalPolynomial
from utils.rationals import format_fraction


@dataclass(frozen=True)
class ContinuedFraction:
    """
    R(z) = c_1 z^e_1 + 1/(c_2 z^e_2 + 1/(... + 1/(c_k z^e_k)))

    Exponents alternate exponent_low, exponent_high, exponent_low, ...; for a pair
    expansion exponent_low = j - i and exponent_high = M - (j - i). degrees lists the
    degrees of the remainders f_0..f_k of the pair expansion when there is one.
    """

    coefficients: Tuple[Fraction, ...]
    exponent_low: int
    exponent_high: int
    pair: Optional[Tuple[int, int]] = None
    terminated_early: bool = False
    degrees: Tuple[int, ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.coefficients)

    @property
    def step(self) -> int:
        """M = exponent_low + exponent_high"""
        return self.exponent_low + self.exponent_high

    @property
    def exponents(self) -> List[int]:
        return [self.exponent_low if ell % 2 == 1 else self.exponent_high for ell in range(1, self.length + 1)]

    @property
    def final_exponent(self) -> int:
        """mu: exponent_low when k is odd, exponent_high when k is even"""
        return self.exponent_low if self.length % 2 == 1 else self.exponent_high

    def all_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)

    def partial_quotients(self) -> List[RationalPolynomial]:
        """q_1..q_k as polynomials c_l x^e_l"""
        return [RationalPolynomial.monomial(c, e) for c, e in zip(self.coefficients, self.exponents)]

    def to_rational(self) -> Tuple[RationalPolynomial, RationalPolynomial]:
        """
        Fold the fraction into numerator and denominator polynomials.

        Returns:
            (N, D) with R = N / D
        """
        quotients = self.partial_quotients()
        if not quotients:
            return RationalPolynomial.zero(), RationalPolynomial.monomial(1, 0)
        numerator, denominator = quotients[-1], RationalPolynomial.monomial(1, 0)
        for q in reversed(quotients[:-1]):
            numerator, denominator = q * numerator + denominator, numerator
        return numerator, denominator

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": list(self.pair) if self.pair else None,
            "coefficients": [format_fraction(c) for c in self.coefficients],
            "exponents": self.exponents,
            "final_exponent": self.final_exponent if self.coefficients else None,
            "terminated_early": self.terminated_early,
            "degrees": list(self.degrees),
        }
