"""
Sector certification: run the exact methods, attach the claim each one licenses, and
cross-check certificates against the root oracle.
"""
import cmath
import dataclasses
import logging
import math
from typing import List, Optional

from constants import CertificateMethod, CertificateStatus
from methods.base_method import MethodContext
from models.certificate import ArgumentSumReport, MethodFailure, SectorCertificate, WindowSums
from models.euclid import EuclidTable
from models.oracle import RootReport
from models.polynomial import RationalPolynomial
from services.contfrac_service import EVALUATION_FLOOR
from services.euclid_service import run_generalized_euclid
from services.hurwitz_service import DEFAULT_MINOR_ORDER_CAP
from services.method_factory import MethodFactory
from services.root_oracle import DEFAULT_CLUSTER_SLACK, DEFAULT_SECTOR_SLACK, sector_clearance
from utils.errors import (
    EvaluationError,
    HypothesisNotMetError,
    LeadingCoefficientError,
    MethodNotApplicableError,
    StepRangeError,
)

logger = logging.getLogger(__name__)

AESW_NOTE = (
    "M = 1: total nonnegativity of the Toeplitz matrix is equivalent to all zeros "
    "being real and nonpositive; no finite exact test is run, see the oracle check"
)
CLOSED_SECTOR_NOTE = (
    "n = 5, M = 3 with a_0, a_1, a_2, h_3, h_4, h_5 > 0 and a_3/a_0 > a_4/a_1 > a_5/a_2: "
    "f does not vanish in the closed sector |arg z| <= pi/3"
)


def _validate(f: RationalPolynomial, m: int) -> int:
    n = -1 if f.is_zero else int(f.degree)
    if n < 1:
        raise StepRangeError(m, 1, max(n, 1), what="step M for a constant polynomial")
    if f.coeffs[0] <= 0:
        raise LeadingCoefficientError(f"certification needs a_0 > 0, got {f.coeffs[0]}")
    if m < 1 or m > n:
        raise StepRangeError(m, 1, n)
    return n


def closed_sector_applies(f: RationalPolynomial, table: EuclidTable) -> bool:
    """Exact hypotheses of the degree-five, step-three closed-sector statement"""
    if table.n != 5 or table.m != 3:
        return False
    a = f.coeffs
    h = table.leading
    if not all(value > 0 for value in (a[0], a[1], a[2], h[3], h[4], h[5])):
        return False
    return a[3] / a[0] > a[4] / a[1] > a[5] / a[2]


def certify(
    f: RationalPolynomial,
    m: int,
    method: Optional[CertificateMethod] = None,
    cap: int = DEFAULT_MINOR_ORDER_CAP,
) -> SectorCertificate:
    """
    Certify that f has no zeros in the sector |arg z| < pi/M.

    With method=None (AUTO) the methods run cheapest first and the first success
    wins; otherwise only the named method runs.

    Args:
        f: Polynomial with a_0 > 0
        m: Step with 1 <= m <= n
        method: One CertificateMethod, or None for AUTO
        cap: Minor order cap used when a failing TN check looks for a witness

    Returns:
        SectorCertificate; UNKNOWN lists the failure point of every method tried

    Raises:
        LeadingCoefficientError: If a_0 <= 0
        StepRangeError: If M is out of range

    Example:
        >>> cert = certify(parse_polynomial("1,1,1,1.001,1,0.999"), 3)
        >>> cert.status, cert.method
        (<CertificateStatus.CERTIFIED: 'CERTIFIED'>, <CertificateMethod.ALL_H_POSITIVE: 'ALL_H_POSITIVE'>)
    """
    n = _validate(f, m)
    if m == 1:
        logger.info("M = 1 has no exact certificate; returning NOT_APPLICABLE")
        return SectorCertificate(m=m, status=CertificateStatus.NOT_APPLICABLE, notes=(AESW_NOTE,))

    context = MethodContext(cap=cap)
    candidates = [method] if method is not None else CertificateMethod.auto_order(m)
    failures: List[MethodFailure] = []

    for candidate in candidates:
        runner = MethodFactory.create_method(candidate)
        reason = runner.applicability(f, m)
        if reason:
            failures.append(MethodFailure(method=candidate, reason=reason, applicable=False))
            continue
        try:
            evidence = runner.run(f, m, context)
        except MethodNotApplicableError as e:
            logger.debug(f"{candidate.value} failed at M={m}: {e}")
            failures.append(MethodFailure(method=candidate, reason=str(e)))
            continue

        notes = []
        if n == 5 and m == 3 and closed_sector_applies(f, context.euclid(f, m)):
            notes.append(CLOSED_SECTOR_NOTE)
        logger.info(f"Certified M={m} via {candidate.value}")
        return SectorCertificate(
            m=m,
            status=CertificateStatus.CERTIFIED,
            method=candidate,
            claim=runner.claim,
            evidence=evidence,
            notes=tuple(notes),
            failures=tuple(failures),
        )

    # an explicitly requested method outside its range is not applicable, not unknown
    if method is not None and failures and not failures[0].applicable:
        status = CertificateStatus.NOT_APPLICABLE
    else:
        status = CertificateStatus.UNKNOWN
    logger.info(f"No certificate at M={m}: {status.value}")
    return SectorCertificate(m=m, status=status, failures=tuple(failures))


def cross_check(
    certificate: SectorCertificate,
    report: RootReport,
    slack: float = DEFAULT_SECTOR_SLACK,
    cluster_slack: float = DEFAULT_CLUSTER_SLACK,
) -> SectorCertificate:
    """
    Compare a certificate with the oracle's roots.

    Returns the certificate unchanged unless it is CERTIFIED and some root lies inside
    the sector beyond the slack; then a copy with status REFUTED_BY_ORACLE.
    """
    if certificate.status != CertificateStatus.CERTIFIED:
        return certificate
    clearance = sector_clearance(report, certificate.m, slack=slack, cluster_slack=cluster_slack)
    if clearance.clear:
        return certificate
    logger.error(f"Oracle found roots inside the certified sector at M={certificate.m}: {list(clearance.roots_in_sector)}")
    note = f"oracle roots inside the sector: {[str(z) for z in clearance.roots_in_sector]}"
    return dataclasses.replace(
        certificate,
        status=CertificateStatus.REFUTED_BY_ORACLE,
        notes=certificate.notes + (note,),
    )


def argument_sum_bound_check(
    f: RationalPolynomial,
    m: int,
    z: complex,
    tol: float = 1e-9,
    table: Optional[EuclidTable] = None,
) -> ArgumentSumReport:
    """
    Partial argument sums of z_i = f_{n-i}(z) / f_{n-i+1}(z) over windows S(t).

    For every window S(t) = {t-(M-2), ..., t}, M <= t <= n, the ratios are split by
    the sign of their argument and the larger absolute partial sum is recorded.
    With all h positive and 0 <= arg z <= pi/M, each stays below pi(M-1)/M.

    Raises:
        HypothesisNotMetError: If some h_i is not positive or z is outside the cone
        EvaluationError: If some f_{n-i+1}(z) is too close to zero
    """
    if table is None:
        table = run_generalized_euclid(f, m)
    if any(h <= 0 for h in table.leading):
        raise HypothesisNotMetError("argument-sum bound needs every h_i > 0")
    if z == 0 or not -1e-12 <= cmath.phase(z) <= math.pi / m + 1e-12:
        raise HypothesisNotMetError(f"z = {z} is not in the cone 0 <= arg z <= pi/{m}")

    n = table.n
    values = [p.evaluate_complex(z) for p in table.polys]
    angles = {}
    for i in range(2, n + 1):
        denominator = values[n - i + 1]
        if abs(denominator) < EVALUATION_FLOOR:
            raise EvaluationError(f"f_{n - i + 1}(z) is too close to zero")
        angles[i] = cmath.phase(values[n - i] / denominator)

    windows = []
    for t in range(m, n + 1):
        members = [angles[i] for i in range(t - (m - 2), t + 1)]
        positive = sum(a for a in members if a >= 0)
        negative = sum(a for a in members if a < 0)
        windows.append(WindowSums(t=t, positive=positive, negative=negative))

    report = ArgumentSumReport(m=m, z=complex(z), bound=math.pi * (m - 1) / m, windows=tuple(windows), tol=tol)
    if report.violated:
        logger.warning(f"Argument sum {report.worst:.6f} exceeds pi(M-1)/M at z = {z}")
    return report
