"""
h_0, ..., h_n > 0 for the step-M algorithm: every zero has |arg z| > pi/M.
"""
import logging
from typing import Any, Dict

from constants import CertificateMethod
from methods.base_method import MethodContext, SectorMethod
from models.polynomial import RationalPolynomial
from utils.errors import MethodNotApplicableError

logger = logging.getLogger(__name__)


class AllHPositiveMethod(SectorMethod):
    method = CertificateMethod.ALL_H_POSITIVE

    def applicability(self, f: RationalPolynomial, m: int) -> str:
        n = int(f.degree)
        if not 2 <= m <= n:
            return f"needs 2 <= M <= n = {n}"
        return ""

    def run(self, f: RationalPolynomial, m: int, context: MethodContext) -> Dict[str, Any]:
        table = context.euclid(f, m)
        for index, h in enumerate(table.leading):
            if h <= 0:
                raise MethodNotApplicableError(f"h_{index} = {h} is not positive")
        logger.debug(f"All {len(table.leading)} leading coefficients positive at M={m}")
        return {"h": list(table.leading)}
