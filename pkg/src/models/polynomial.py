"""
Exact-rational polynomials in descending-power order.

A polynomial f(x) = a_0 x^n + a_1 x^{n-1} + ... + a_n is stored as the tuple
(a_0, ..., a_n) with a_0 != 0. The zero polynomial has no coefficients and
degree NEG_INFINITY.
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from utils.errors import PolynomialParseError, StepRangeError
from utils.rationals import RationalLike, format_fraction, parse_rational, to_fraction

logger = logging.getLogger(__name__)

NEG_INFINITY = float("-inf")

Degree = Union[int, float]


@dataclass(frozen=True)
class RationalPolynomial:
    """
    Immutable polynomial with Fraction coefficients a_0..a_n (leading first).

    Use from_coeffs() to build one from arbitrary input; the constructor expects
    an already-normalized tuple.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[0] == 0:
            raise ValueError("leading coefficient of a nonzero polynomial must be nonzero")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], strip: bool = False) -> "RationalPolynomial":
        """
        Build a polynomial from leading-first coefficients.

        Args:
            coeffs: a_0..a_n as Fractions, ints or coefficient strings
            strip: Drop leading zeros instead of rejecting them

        Raises:
            ValueError: If a leading zero is present and strip is False
        """
        values = [to_fraction(c) for c in coeffs]
        if strip:
            while values and values[0] == 0:
                values.pop(0)
        elif values and values[0] == 0 and any(values):
            raise ValueError("leading coefficient is zero")
        if values and not any(values):
            values = []
        return cls(tuple(values))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, coefficient: RationalLike, power: int) -> "RationalPolynomial":
        """c * x^power"""
        c = to_fraction(coefficient)
        if c == 0:
            return cls.zero()
        return cls((c,) + (Fraction(0),) * power)

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def degree(self) -> Degree:
        if not self.coeffs:
            return NEG_INFINITY
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        """Leading coefficient, 0 for the zero polynomial"""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of x^power (0 outside the support)"""
        if not self.coeffs or power < 0 or power > self.degree:
            return Fraction(0)
        return self.coeffs[len(self.coeffs) - 1 - power]

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """Yield (power, coefficient) for every nonzero monomial, highest power first"""
        n = len(self.coeffs) - 1
        for l, c in enumerate(self.coeffs):
            if c != 0:
                yield n - l, c

    def exponent_residue(self, m: int) -> Optional[int]:
        """
        Residue mod m shared by all exponents, or None.

        None is returned for the zero polynomial and for polynomials that are not
        arithmetic with difference m.
        """
        residues = {power % m for power, _ in self.terms()}
        if len(residues) == 1:
            return residues.pop()
        return None

    def is_arithmetic(self, m: int) -> bool:
        """True if all exponents agree mod m; the zero polynomial qualifies for every m"""
        return self.is_zero or self.exponent_residue(m) is not None

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _padded(self, length: int) -> List[Fraction]:
        return [Fraction(0)] * (length - len(self.coeffs)) + list(self.coeffs)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        length = max(len(self.coeffs), len(other.coeffs))
        summed = [a + b for a, b in zip(self._padded(length), other._padded(length))]
        return RationalPolynomial.from_coeffs(summed, strip=True)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["RationalPolynomial", RationalLike]) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            if self.is_zero or other.is_zero:
                return RationalPolynomial.zero()
            product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
            return RationalPolynomial.from_coeffs(product, strip=True)
        scalar = to_fraction(other)
        return RationalPolynomial.from_coeffs([c * scalar for c in self.coeffs], strip=True)

    __rmul__ = __mul__

    def divmod_exact(self, divisor: "RationalPolynomial") -> Tuple["RationalPolynomial", "RationalPolynomial"]:
        """
        Long division over the rationals.

        Returns:
            (quotient, remainder) with self = quotient * divisor + remainder and
            deg remainder < deg divisor

        Raises:
            ZeroDivisionError: If divisor is the zero polynomial
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or self.degree < divisor.degree:
            return RationalPolynomial.zero(), self

        remainder = list(self.coeffs)
        d = len(divisor.coeffs)
        quotient_len = len(remainder) - d + 1
        quotient = [Fraction(0)] * quotient_len
        lead = divisor.coeffs[0]
        for k in range(quotient_len):
            factor = remainder[k] / lead
            quotient[k] = factor
            if factor == 0:
                continue
            for j in range(d):
                remainder[k + j] -= factor * divisor.coeffs[j]
        rest = remainder[quotient_len:]
        return (
            RationalPolynomial.from_coeffs(quotient, strip=True),
            RationalPolynomial.from_coeffs(rest, strip=True),
        )

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def evaluate_exact(self, x: RationalLike) -> Fraction:
        """Horner evaluation at an exact rational point"""
        value = Fraction(0)
        point = to_fraction(x)
        for c in self.coeffs:
            value = value * point + c
        return value

    def to_float_array(self) -> np.ndarray:
        """Coefficients as float64, leading first (numpy.polyval order)"""
        return np.array([float(c) for c in self.coeffs], dtype=np.float64)

    def evaluate_complex(self, z: complex) -> complex:
        """Double-precision Horner evaluation"""
        if self.is_zero:
            return 0j
        return complex(np.polyval(self.to_float_array(), complex(z)))

    # ------------------------------------------------------------------
    # Formatting
    # ------------------------------------------------------------------

    def to_strings(self) -> List[str]:
        """Coefficients as "p/q" strings, leading first"""
        return [format_fraction(c) for c in self.coeffs]

    def format(self, variable: str = "x") -> str:
        """Human-readable form such as "x^5 + x^4 + (1001/1000)x^2 - x + 999/1000"."""
        if self.is_zero:
            return "0"
        pieces: List[str] = []
        for power, c in self.terms():
            negative = c < 0
            magnitude = -c if negative else c
            if power == 0:
                body = format_fraction(magnitude)
            else:
                monomial = variable if power == 1 else f"{variable}^{power}"
                if magnitude == 1:
                    body = monomial
                elif magnitude.denominator == 1:
                    body = f"{magnitude.numerator}{monomial}"
                else:
                    body = f"({format_fraction(magnitude)}){monomial}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class ArithmeticPart:
    """
    The part of f collecting the terms a_l x^{n-l} with l = residue (mod difference).

    Any polynomial, including zero, may be a part; is_valid() checks the residue rule
    against the degree n of the source polynomial.
    """

    residue: int
    difference: int
    poly: RationalPolynomial

    def is_valid(self, n: int) -> bool:
        return all((n - power) % self.difference == self.residue for power, _ in self.poly.terms())


# ----------------------------------------------------------------------
# Operations
# ----------------------------------------------------------------------


def parse_polynomial(text: str) -> RationalPolynomial:
    """
    Parse a coefficient list a_0..a_n.

    Accepts a comma-separated list ("1, 1, 1, 1.001, 1, 0.999") or a JSON array of
    strings/numbers. Leading zeros are rejected, not stripped.

    Args:
        text: Coefficient list, leading coefficient first

    Returns:
        The parsed polynomial

    Raises:
        PolynomialParseError: On malformed tokens, zero denominators, empty lists or a
            zero leading coefficient

    Example:
        >>> parse_polynomial("1,1,1,1.001,1,0.999").coefficient(2)
        Fraction(1001, 1000)
    """
    body = text.strip()
    if not body:
        raise PolynomialParseError("empty coefficient list")

    if body.startswith("["):
        try:
            # parse_float keeps the decimal text so conversion stays exact
            raw = json.loads(body, parse_float=str)
        except json.JSONDecodeError as e:
            raise PolynomialParseError(f"invalid JSON coefficient array: {e.msg}")
        if not isinstance(raw, list):
            raise PolynomialParseError("JSON input must be an array of coefficients")
        tokens = []
        for item in raw:
            if isinstance(item, bool) or not isinstance(item, (int, str)):
                raise PolynomialParseError(f"unsupported JSON coefficient {item!r}", token=str(item))
            tokens.append(str(item))
    else:
        tokens = body.split(",")

    if not tokens:
        raise PolynomialParseError("empty coefficient list")

    coeffs = [parse_rational(token) for token in tokens]
    if coeffs[0] == 0:
        raise PolynomialParseError("leading coefficient is zero", token=tokens[0].strip())

    logger.debug(f"Parsed polynomial of degree {len(coeffs) - 1}")
    return RationalPolynomial(tuple(coeffs))


def read_polynomial_lines(path: Union[str, Path]) -> List[Tuple[int, str]]:
    """
    Non-empty lines of a polynomial file as (line number, text), comments stripped.

    Raises:
        PolynomialParseError: If the file holds no polynomial lines
        FileNotFoundError: If the file does not exist
    """
    lines: List[Tuple[int, str]] = []
    with open(path, "r") as f:
        for number, line in enumerate(f, start=1):
            content = line.split("#", 1)[0].strip()
            if content:
                lines.append((number, content))
    if not lines:
        raise PolynomialParseError(f"{path}: no polynomials found")
    return lines


def split_arithmetic(f: RationalPolynomial, m: int) -> List[ArithmeticPart]:
    """
    Split f into m arithmetic parts with difference m.

    Part j collects the terms a_l x^{n-l} with l = j (mod m). Parts may be zero.

    Raises:
        StepRangeError: If m is not in [1, deg f] or f is zero
    """
    if f.is_zero:
        raise StepRangeError(m, 1, 0)
    n = int(f.degree)
    if m < 1 or m > n:
        raise StepRangeError(m, 1, n)

    parts = []
    for j in range(m):
        coeffs = [c if l % m == j else Fraction(0) for l, c in enumerate(f.coeffs)]
        parts.append(ArithmeticPart(residue=j, difference=m, poly=RationalPolynomial.from_coeffs(coeffs, strip=True)))
    return parts


def evaluate_complex(f: RationalPolynomial, z: complex) -> complex:
    """Double-precision Horner evaluation of f at z"""
    return f.evaluate_complex(z)


def coefficient(f: RationalPolynomial, index: int) -> Fraction:
    """a_index with a_k = 0 for k < 0 or k > n"""
    if f.is_zero or index < 0 or index >= len(f.coeffs):
        return Fraction(0)
    return f.coeffs[index]

