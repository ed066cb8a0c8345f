"""
Sector certificates and argument-sum reports
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from constants import CertificateMethod, CertificateStatus, SectorClaim
from utils.rationals import format_fraction


def format_evidence(value: Any) -> Any:
    """Recursively turn exact evidence into JSON-ready values (fractions as "p/q")"""
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, dict):
        return {key: format_evidence(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [format_evidence(item) for item in value]
    return value


@dataclass(frozen=True)
class MethodFailure:
    """Why one method did not certify"""

    method: CertificateMethod
    reason: str
    applicable: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {"method": self.method.value, "reason": self.reason, "applicable": self.applicable}


@dataclass(frozen=True)
class SectorCertificate:
    """
    Verdict on the sector |arg z| < pi/M.

    evidence holds the exact quantities the method checked (Fractions); claim is the
    region the method licenses and never more.
    """

    m: int
    status: CertificateStatus
    method: Optional[CertificateMethod] = None
    claim: SectorClaim = SectorClaim.NONE
    evidence: Dict[str, Any] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()
    failures: Tuple[MethodFailure, ...] = ()

    @property
    def sector_radians(self) -> float:
        return math.pi / self.m

    @property
    def sector_degrees(self) -> float:
        return 180.0 / self.m

    @property
    def certified(self) -> bool:
        return self.status == CertificateStatus.CERTIFIED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "status": self.status.value,
            "method": self.method.value if self.method else None,
            "claim": self.claim.value,
            "sector_degrees": self.sector_degrees,
            "evidence": format_evidence(self.evidence),
            "notes": list(self.notes),
            "failures": [failure.to_dict() for failure in self.failures],
        }


@dataclass(frozen=True)
class WindowSums:
    """Argument sums over one window S(t) = {t-(M-2), ..., t}"""

    t: int
    positive: float
    negative: float

    @property
    def largest(self) -> float:
        return max(abs(self.positive), abs(self.negative))


@dataclass(frozen=True)
class ArgumentSumReport:
    """
    Partial argument sums of the ratios z_i = f_{n-i}(z) / f_{n-i+1}(z).

    largest is the value for the top window S(n); worst is the maximum over every
    window S(t), M <= t <= n. Both must stay below bound = pi(M-1)/M.
    """

    m: int
    z: complex
    bound: float
    windows: Tuple[WindowSums, ...]
    tol: float = 1e-9

    @property
    def largest(self) -> float:
        return self.windows[-1].largest

    @property
    def worst(self) -> float:
        return max(window.largest for window in self.windows)

    @property
    def violated(self) -> bool:
        return self.worst > self.bound + self.tol

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "z": {"re": self.z.real, "im": self.z.imag},
            "bound": self.bound,
            "largest": self.largest,
            "worst": self.worst,
            "violated": self.violated,
        }

    def window_list(self) -> List[Dict[str, float]]:
        return [{"t": w.t, "positive": w.positive, "negative": w.negative} for w in self.windows]
