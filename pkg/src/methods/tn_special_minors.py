"""
All special minors of H_M(f) positive: H_M(f) is totally nonnegative, so f has no
zeros in the open sector |arg z| < pi/M (a zero at the origin is not excluded).
"""
import logging
from typing import Any, Dict

from constants import CertificateMethod, TNStatus
from methods.base_method import MethodContext, SectorMethod
from models.polynomial import RationalPolynomial
from services.hurwitz_service import special_minors, tn_verdict
from utils.errors import MethodNotApplicableError

logger = logging.getLogger(__name__)


class TNSpecialMinorsMethod(SectorMethod):
    method = CertificateMethod.TN_SPECIAL_MINORS

    def applicability(self, f: RationalPolynomial, m: int) -> str:
        n = int(f.degree)
        if not 2 <= m <= n:
            return f"needs 2 <= M <= n = {n}"
        return ""

    def run(self, f: RationalPolynomial, m: int, context: MethodContext) -> Dict[str, Any]:
        minors = special_minors(f, m)
        if minors.all_positive():
            return {"special_minors": list(minors.values)}

        p = minors.first_nonpositive()
        reason = f"Delta_{p} = {minors.value(p)} is not positive"
        verdict = tn_verdict(f, m, cap=context.cap)
        if verdict.status == TNStatus.NOT_TN and verdict.witness is not None:
            witness = verdict.witness
            reason = (
                f"{reason}; H_{m} is not totally nonnegative: "
                f"rows {list(witness.rows)} cols {list(witness.cols)} = {witness.value}"
            )
        raise MethodNotApplicableError(reason)
