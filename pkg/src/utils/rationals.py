"""
Exact rational parsing and formatting.

Coefficient tokens are integers, fractions "p/q" or finite decimals. Decimals are
converted through fractions.Fraction's string constructor, which is exact in base 10
and never touches binary floating point.
"""
import logging
import re
from fractions import Fraction
from typing import Optional, Union

from utils.errors import PolynomialParseError

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r"^[+-]?\d+$")
_FRACTION = re.compile(r"^([+-]?\d+)\s*/\s*([+-]?\d+)$")
_DECIMAL = re.compile(r"^[+-]?(\d+\.\d*|\.\d+)([eE][+-]?\d+)?$|^[+-]?\d+[eE][+-]?\d+$")
# block written at least twice; the single-block form ("0.3...") is the fallback
_REPEATING = re.compile(r"^([+-]?)(\d*)\.(\d*?)(\d+?)\4+(\.\.\.|…)$")
_REPEATING_ONCE = re.compile(r"^([+-]?)(\d*)\.(\d*?)(\d)(\.\.\.|…)$")

RationalLike = Union[Fraction, int, str]


def suggest_repeating(token: str) -> Optional[str]:
    """
    Guess the fraction meant by a repeating decimal such as "0.111..." or "0.1666...".

    The shortest block that repeats at the end of the written digits is taken as the
    period, so "0.1666..." reads as 0.1(6) = 1/6.

    Returns:
        The fraction as "p/q", or None when no repeating block is visible
    """
    text = token.strip()
    match = _REPEATING.match(text) or _REPEATING_ONCE.match(text)
    if not match:
        return None
    sign_text, whole, head, block, _ = match.groups()
    if not block:
        return None
    head_len = len(head)
    period = len(block)
    # 0.head(block) = (head.block - head) / (10^head_len * (10^period - 1))
    numerator = int(head + block) - int(head or "0")
    denominator = 10 ** head_len * (10 ** period - 1)
    value = Fraction(int(whole or "0")) + Fraction(numerator, denominator)
    if sign_text == "-":
        value = -value
    return format_fraction(value)


def parse_rational(token: str) -> Fraction:
    """
    Parse one coefficient token into an exact rational.

    Args:
        token: Integer ("3"), fraction ("-7/2") or finite decimal ("1.001", "2e-3")

    Returns:
        Fraction in lowest terms with positive denominator

    Raises:
        PolynomialParseError: On malformed tokens, zero denominators and repeating decimals

    Example:
        >>> parse_rational("1.001")
        Fraction(1001, 1000)
    """
    text = token.strip()
    if not text:
        raise PolynomialParseError("empty coefficient", token=token)

    if text.endswith("...") or text.endswith("…"):
        raise PolynomialParseError(
            f"repeating decimals are not supported: {text!r}",
            token=token,
            suggestion=suggest_repeating(text),
        )

    if _INTEGER.match(text):
        return Fraction(int(text))

    match = _FRACTION.match(text)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise PolynomialParseError(f"zero denominator in {text!r}", token=token)
        return Fraction(numerator, denominator)

    if _DECIMAL.match(text):
        return Fraction(text)

    raise PolynomialParseError(f"malformed coefficient {text!r}", token=token)


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or token string to Fraction (floats are rejected)"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def format_fraction(value: Fraction) -> str:
    """Render as "p" when integral, else "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
