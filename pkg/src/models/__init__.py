"""
Immutable result types shared by the services.
"""
from models.polynomial import NEG_INFINITY, ArithmeticPart, RationalPolynomial

__all__ = ["NEG_INFINITY", "ArithmeticPart", "RationalPolynomial"]
