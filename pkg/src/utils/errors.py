"""
Exception hierarchy for the sector certification library.

Every error raised on purpose by the library derives from SectorError, so callers
(and the CLI exit-code mapping) can catch one base class. Input-shaped errors also
derive from ValueError.
"""
from typing import Optional


class SectorError(Exception):
    """Base class for all library errors"""


class PolynomialParseError(SectorError, ValueError):
    """A coefficient token or coefficient list could not be parsed"""

    def __init__(self, message: str, token: Optional[str] = None, suggestion: Optional[str] = None):
        self.token = token
        self.suggestion = suggestion
        if suggestion:
            message = f"{message}; use \"{suggestion}\""
        super().__init__(message)


class StepRangeError(SectorError, ValueError):
    """The step M is outside the range an operation accepts"""

    def __init__(self, m: int, low: int, high: int, what: str = "step M"):
        self.m = m
        self.low = low
        self.high = high
        super().__init__(f"{what} = {m} is out of range [{low}, {high}]")


class IndexRangeError(SectorError, ValueError):
    """A matrix row/column index or a residue index is invalid"""


class MinorShapeError(SectorError, ValueError):
    """Row and column index sets of a minor do not have the same size"""


class DegeneratePairError(SectorError):
    """A pair continued fraction hit a remainder of non-generic degree"""

    def __init__(self, step: int, detail: str = ""):
        self.step = step
        message = f"degenerate pair expansion at step {step}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class FactorizationInapplicableError(SectorError):
    """Some leading coefficient h_i vanishes, so the factorization does not exist"""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"factorization needs nonzero leading coefficients, but h_{index} = 0")


class WindowTooSmallError(SectorError, ValueError):
    """The verification window is smaller than the factorization needs"""


class EvaluationError(SectorError, ArithmeticError):
    """Floating-point evaluation divided by a value too close to zero"""


class HypothesisNotMetError(SectorError):
    """An operation was called without the hypothesis it relies on"""


class MethodNotApplicableError(SectorError):
    """A certification method cannot be run on this (f, M)"""


class LeadingCoefficientError(SectorError, ValueError):
    """Certification needs a positive leading coefficient a_0"""
