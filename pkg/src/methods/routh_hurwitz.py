"""
M = 2: leading principal minors of the Hurwitz matrix H_2(f) of orders 1..n all
positive, so f is stable and every zero has |arg z| > pi/2.
"""
import logging
from typing import Any, Dict

from constants import CertificateMethod
from methods.base_method import MethodContext, SectorMethod
from models.polynomial import RationalPolynomial
from services.hurwitz_service import hurwitz_matrix, minor_exact
from utils.errors import MethodNotApplicableError

logger = logging.getLogger(__name__)


class RouthHurwitzMethod(SectorMethod):
    method = CertificateMethod.ROUTH_HURWITZ

    def applicability(self, f: RationalPolynomial, m: int) -> str:
        n = int(f.degree)
        if m != 2 or n < 2:
            return "needs M = 2 <= n"
        return ""

    def run(self, f: RationalPolynomial, m: int, context: MethodContext) -> Dict[str, Any]:
        n = int(f.degree)
        matrix = hurwitz_matrix(f, 2)
        minors = []
        for order in range(1, n + 1):
            value = minor_exact(matrix, range(1, order + 1), range(1, order + 1))
            if value <= 0:
                raise MethodNotApplicableError(f"Hurwitz minor of order {order} = {value} is not positive")
            minors.append(value)
        logger.debug(f"Hurwitz minors: {[str(v) for v in minors]}")
        return {"hurwitz_minors": minors}
