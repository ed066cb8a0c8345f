"""
Pairwise test: for every residue pair i < j the leading principal minors of the pair
submatrix H_M^(ij), up to the lift degree, are positive. Valid for
2 <= M <= floor(n/2) + 1; excludes the closed sector |arg z| <= pi/M.
"""
import logging
from itertools import combinations
from typing import Any, Dict

from constants import CertificateMethod
from methods.base_method import MethodContext, SectorMethod
from models.polynomial import RationalPolynomial
from services.hurwitz_service import pair_leading_principal_minors
from utils.errors import IndexRangeError, MethodNotApplicableError

logger = logging.getLogger(__name__)


class PairwiseHurwitzMethod(SectorMethod):
    method = CertificateMethod.PAIRWISE_HURWITZ

    def applicability(self, f: RationalPolynomial, m: int) -> str:
        n = int(f.degree)
        high = min(n // 2 + 1, n)
        if not 2 <= m <= high:
            return f"needs 2 <= M <= floor(n/2) + 1 = {high}"
        return ""

    def run(self, f: RationalPolynomial, m: int, context: MethodContext) -> Dict[str, Any]:
        pairs = []
        for i, j in combinations(range(m), 2):
            try:
                minors = pair_leading_principal_minors(f, m, i, j)
            except IndexRangeError as e:
                raise MethodNotApplicableError(f"pair ({i},{j}): {e}")
            bad = next((order for order, value in enumerate(minors, start=1) if value <= 0), None)
            if bad is not None:
                raise MethodNotApplicableError(
                    f"pair ({i},{j}) leading principal minor of order {bad} = {minors[bad - 1]} is not positive"
                )
            logger.debug(f"pair ({i},{j}): {len(minors)} leading principal minors positive")
            pairs.append({"pair": [i, j], "minors": minors})
        return {"pairs": pairs}
