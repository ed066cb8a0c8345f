"""
Method Factory - creates the certification method for each CertificateMethod
"""
import logging
from typing import List, Union

from constants import CertificateMethod
from methods.all_h_positive import AllHPositiveMethod
from methods.base_method import SectorMethod
from methods.cowling_thron import CowlingThronMethod
from methods.pairwise_hurwitz import PairwiseHurwitzMethod
from methods.routh_hurwitz import RouthHurwitzMethod
from methods.tn_special_minors import TNSpecialMinorsMethod

logger = logging.getLogger(__name__)


class MethodFactory:
    """
    Factory for certification methods.

    Usage:
        method = MethodFactory.create_method("TN_SPECIAL_MINORS")
        evidence = method.run(f, 3, MethodContext())
    """

    _METHOD_MAP = {
        CertificateMethod.ALL_H_POSITIVE: AllHPositiveMethod,
        CertificateMethod.TN_SPECIAL_MINORS: TNSpecialMinorsMethod,
        CertificateMethod.PAIRWISE_HURWITZ: PairwiseHurwitzMethod,
        CertificateMethod.COWLING_THRON: CowlingThronMethod,
        CertificateMethod.ROUTH_HURWITZ: RouthHurwitzMethod,
    }

    @classmethod
    def create_method(cls, method: Union[str, CertificateMethod]) -> SectorMethod:
        """
        Create a method instance.

        Args:
            method: CertificateMethod or its name (e.g. 'ALL_H_POSITIVE')

        Returns:
            SectorMethod instance

        Raises:
            ValueError: If the method is not supported
        """
        key = method.value if isinstance(method, CertificateMethod) else str(method).upper()
        method_class = next((klass for name, klass in cls._METHOD_MAP.items() if name.value == key), None)
        if not method_class:
            supported = ", ".join(m.value for m in cls._METHOD_MAP)
            raise ValueError(f"Unsupported method: {method}. Supported methods: {supported}")
        logger.debug(f"Creating {method_class.__name__}")
        return method_class()

    @classmethod
    def get_supported_methods(cls) -> List[str]:
        """Get list of all supported method names"""
        return [m.value for m in cls._METHOD_MAP]

    @classmethod
    def is_supported(cls, method: str) -> bool:
        return str(method).upper() in cls.get_supported_methods()
