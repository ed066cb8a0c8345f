"""
M = n with all coefficients positive: every zero has |arg z| > pi/n.
"""
from typing import Any, Dict

from constants import CertificateMethod
from methods.base_method import MethodContext, SectorMethod
from models.polynomial import RationalPolynomial
from utils.errors import MethodNotApplicableError


class CowlingThronMethod(SectorMethod):
    method = CertificateMethod.COWLING_THRON

    def applicability(self, f: RationalPolynomial, m: int) -> str:
        n = int(f.degree)
        if m != n or n < 2:
            return f"needs M = n = {n}"
        return ""

    def run(self, f: RationalPolynomial, m: int, context: MethodContext) -> Dict[str, Any]:
        for index, a in enumerate(f.coeffs):
            if a <= 0:
                raise MethodNotApplicableError(f"a_{index} = {a} is not positive")
        return {"coefficients": list(f.coeffs)}
