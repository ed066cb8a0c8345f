"""
Constants and enums used across the application
"""
from constants.sector import (
    CertificateMethod,
    CertificateStatus,
    Command,
    MatrixVariant,
    OutputFormat,
    SectorClaim,
    TNMethod,
    TNStatus,
)

__all__ = [
    "CertificateMethod",
    "CertificateStatus",
    "Command",
    "MatrixVariant",
    "OutputFormat",
    "SectorClaim",
    "TNMethod",
    "TNStatus",
]
