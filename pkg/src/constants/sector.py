"""
Identifier enums for matrices, verdicts and certification methods.

These are the single source of truth for names that appear in JSON output and on
the command line.
"""
from enum import Enum
from typing import List, Optional


class MatrixVariant(str, Enum):
    """Which generalized Hurwitz layout a matrix view uses"""

    H = "H"
    H_TILDE = "H_TILDE"


class TNStatus(str, Enum):
    TN_CERTIFIED = "TN_CERTIFIED"
    NOT_TN = "NOT_TN"
    INCONCLUSIVE = "INCONCLUSIVE"


class TNMethod(str, Enum):
    """How a total-nonnegativity verdict was reached"""

    SPECIAL_MINORS_POSITIVE = "SPECIAL_MINORS_POSITIVE"
    EXHAUSTIVE_CAP = "EXHAUSTIVE_CAP"
    WITNESS_FOUND = "WITNESS_FOUND"


class CertificateStatus(str, Enum):
    CERTIFIED = "CERTIFIED"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    REFUTED_BY_ORACLE = "REFUTED_BY_ORACLE"
    UNKNOWN = "UNKNOWN"


class CertificateMethod(str, Enum):
    """
    Sector certification methods.

    Usage:
        method = CertificateMethod.from_cli_name("h")
        if method == CertificateMethod.ALL_H_POSITIVE:
            ...
    """

    ALL_H_POSITIVE = "ALL_H_POSITIVE"
    TN_SPECIAL_MINORS = "TN_SPECIAL_MINORS"
    PAIRWISE_HURWITZ = "PAIRWISE_HURWITZ"
    COWLING_THRON = "COWLING_THRON"
    ROUTH_HURWITZ = "ROUTH_HURWITZ"

    @classmethod
    def cli_names(cls) -> dict:
        """Short command-line names; "auto" maps to None"""
        return {
            "auto": None,
            "h": cls.ALL_H_POSITIVE,
            "tn": cls.TN_SPECIAL_MINORS,
            "pairwise": cls.PAIRWISE_HURWITZ,
            "ct": cls.COWLING_THRON,
            "rh": cls.ROUTH_HURWITZ,
        }

    @classmethod
    def from_cli_name(cls, name: str) -> Optional["CertificateMethod"]:
        """
        Resolve a --method value.

        Raises:
            ValueError: If the name is not recognized
        """
        names = cls.cli_names()
        key = name.strip().lower()
        if key in names:
            return names[key]
        try:
            return cls(name.strip().upper())
        except ValueError:
            supported = ", ".join(names)
            raise ValueError(f"Unsupported method: {name}. Supported methods: {supported}")

    @classmethod
    def auto_order(cls, m: int) -> List["CertificateMethod"]:
        """Cheapest-first order tried by AUTO; the M=2 endpoint goes first when it applies"""
        order = [cls.ALL_H_POSITIVE, cls.TN_SPECIAL_MINORS, cls.PAIRWISE_HURWITZ, cls.COWLING_THRON]
        if m == 2:
            order.insert(0, cls.ROUTH_HURWITZ)
        return order


class SectorClaim(str, Enum):
    """The region a certificate licenses as zero-free"""

    STRICT_EXTERIOR = "STRICT_EXTERIOR"  # every zero has |arg z| > pi/M
    OPEN_SECTOR = "OPEN_SECTOR"  # no zero with |arg z| < pi/M, the origin allowed
    CLOSED_SECTOR_EXCLUDED = "CLOSED_SECTOR_EXCLUDED"  # no zero with |arg z| <= pi/M
    NONE = "NONE"

    @classmethod
    def for_method(cls, method: "CertificateMethod") -> "SectorClaim":
        claims = {
            CertificateMethod.ALL_H_POSITIVE: cls.STRICT_EXTERIOR,
            CertificateMethod.COWLING_THRON: cls.STRICT_EXTERIOR,
            CertificateMethod.ROUTH_HURWITZ: cls.STRICT_EXTERIOR,
            CertificateMethod.TN_SPECIAL_MINORS: cls.OPEN_SECTOR,
            CertificateMethod.PAIRWISE_HURWITZ: cls.CLOSED_SECTOR_EXCLUDED,
        }
        return claims.get(method, cls.NONE)


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class Command(str, Enum):
    CERTIFY = "certify"
    TABLE = "table"
    MINORS = "minors"
    CFRAC = "cfrac"
    FACTOR = "factor"
    ROOTS = "roots"
    REPORT = "report"

    @classmethod
    def names(cls) -> List[str]:
        return [c.value for c in cls]
