# methods/base_method.py
"""
Base interface for sector certification methods.
Each method (all-h-positive, special minors, ...) implements this interface.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict

from constants import CertificateMethod, SectorClaim
from models.euclid import EuclidTable
from models.polynomial import RationalPolynomial
from services.euclid_service import run_generalized_euclid
from services.hurwitz_service import DEFAULT_MINOR_ORDER_CAP


@dataclass
class MethodContext:
    """
    Shared state for one certify call.

    Euclid tables are cached per step so AUTO runs the algorithm once.
    """

    cap: int = DEFAULT_MINOR_ORDER_CAP
    _tables: Dict[int, EuclidTable] = field(default_factory=dict, repr=False)

    def euclid(self, f: RationalPolynomial, m: int) -> EuclidTable:
        if m not in self._tables:
            self._tables[m] = run_generalized_euclid(f, m)
        return self._tables[m]


class SectorMethod(ABC):
    """
    Abstract base class for certification methods.

    run() returns the exact evidence on success and raises MethodNotApplicableError
    with the failure point otherwise.
    """

    method: CertificateMethod

    @abstractmethod
    def applicability(self, f: RationalPolynomial, m: int) -> str:
        """Empty string when the method's range covers (f, M), else the reason it does not"""
        pass

    @abstractmethod
    def run(self, f: RationalPolynomial, m: int, context: MethodContext) -> Dict[str, Any]:
        """
        Check the method's hypothesis exactly.

        Returns:
            Evidence dict of exact values

        Raises:
            MethodNotApplicableError: If the hypothesis fails
        """
        pass

    def applies(self, f: RationalPolynomial, m: int) -> bool:
        return not self.applicability(f, m)

    @property
    def claim(self) -> SectorClaim:
        return SectorClaim.for_method(self.method)

    def get_method_name(self) -> str:
        return self.method.value
