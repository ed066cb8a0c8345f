"""
Independent floating-point checks: simultaneous root iteration, sector clearance,
the real-nonpositive-roots test and a cofactor-expansion determinant.

Nothing here is a proof; it cross-checks the exact certificates.
"""
import cmath
import itertools
import logging
import math
from fractions import Fraction
from typing import Sequence

import numpy as np
from tenacity import Retrying, before_sleep_log, retry_if_result, stop_after_attempt

from models.oracle import ClearanceRecord, RootReport
from models.polynomial import RationalPolynomial
from utils.errors import EvaluationError
from utils.linalg import det_cofactor

logger = logging.getLogger(__name__)

DEFAULT_ROOT_TOL = 1e-13
DEFAULT_MAX_ITERATIONS = 500
DEFAULT_ATTEMPTS = 3
DEFAULT_CLUSTER_DISTANCE = 1e-4
DEFAULT_SECTOR_SLACK = 1e-6
DEFAULT_CLUSTER_SLACK = 1e-2


def _initial_guesses(coeffs: np.ndarray, rng: np.random.Generator, attempt: int) -> np.ndarray:
    n = coeffs.shape[0] - 1
    # Cauchy bound for roots
    radius = 1.0 + np.max(np.abs(coeffs[1:] / coeffs[0]))
    # perturbed circle, rotated on every attempt
    offset = rng.uniform(0.0, 2 * math.pi / n) + attempt * 0.5
    angles = offset + 2 * math.pi * np.arange(n) / n
    radii = radius * rng.uniform(0.5, 1.0, size=n)
    return radii * np.exp(1j * angles)


def _aberth(coeffs: np.ndarray, seed: int, attempt: int, tol: float, max_iter: int) -> RootReport:
    """One Aberth-Ehrlich run from a seeded starting circle"""
    n = coeffs.shape[0] - 1
    deriv = np.polyder(coeffs)
    rng = np.random.default_rng(seed + attempt)
    x = _initial_guesses(coeffs, rng, attempt)

    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        largest = 0.0
        for i in range(n):
            xi = x[i]
            pv = np.polyval(coeffs, xi)
            dpv = np.polyval(deriv, xi)
            others = np.delete(x, i)
            sum_term = np.sum(1.0 / (xi - others))
            denom = dpv - pv * sum_term
            if denom == 0:
                continue
            delta = pv / denom
            largest = max(largest, abs(delta) / max(1.0, abs(xi)))
            x[i] = xi - delta
        if largest < tol:
            converged = True
            break

    roots = tuple(complex(z) for z in x)
    scale = float(np.max(np.abs(coeffs)))
    residual = max(abs(np.polyval(coeffs, z)) / (scale * (1 + abs(z)) ** n) for z in roots)
    logger.debug(f"Aberth attempt {attempt}: converged={converged} after {iterations} sweeps, residual {residual:.3e}")
    return RootReport(
        roots=roots,
        residual=float(residual),
        converged=converged,
        iterations=iterations,
        attempts=attempt + 1,
        seed=seed,
    )


def find_roots(
    f: RationalPolynomial,
    tol: float = DEFAULT_ROOT_TOL,
    seed: int = 0,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    attempts: int = DEFAULT_ATTEMPTS,
    cluster_distance: float = DEFAULT_CLUSTER_DISTANCE,
) -> RootReport:
    """
    All roots of f by Aberth-Ehrlich iteration in double precision.

    Restarts from a rotated circle while a run does not converge, up to `attempts`
    runs; the last run's iterate is returned (converged=False) when none converges.

    Args:
        f: Polynomial of degree >= 1
        tol: Relative update size that counts as converged
        seed: Seed for the starting circle (same seed, same output)
        max_iterations: Sweeps per run
        attempts: Runs before giving up
        cluster_distance: Roots closer than this mark the report as clustered

    Returns:
        RootReport

    Raises:
        EvaluationError: If f is constant
    """
    if f.is_zero or f.degree < 1:
        raise EvaluationError("root finding needs degree >= 1")

    coeffs = f.to_float_array()
    counter = itertools.count()
    retryer = Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_result(lambda report: not report.converged),
        retry_error_callback=lambda state: state.outcome.result(),
        before_sleep=before_sleep_log(logger, logging.DEBUG),
    )
    report = retryer(lambda: _aberth(coeffs, seed, next(counter), tol, max_iterations))

    clustered = any(
        abs(a - b) < cluster_distance for a, b in itertools.combinations(report.roots, 2)
    )
    if not report.converged:
        logger.warning(f"Root iteration did not converge after {report.attempts} attempts (residual {report.residual:.3e})")
    if clustered:
        logger.warning("Root cluster detected; clearance comparisons use the widened slack")

    return RootReport(
        roots=report.roots,
        residual=report.residual,
        converged=report.converged,
        iterations=report.iterations,
        attempts=report.attempts,
        clustered=clustered,
        seed=seed,
    )


def sector_clearance(
    report: RootReport,
    m: int,
    slack: float = DEFAULT_SECTOR_SLACK,
    cluster_slack: float = DEFAULT_CLUSTER_SLACK,
) -> ClearanceRecord:
    """
    How far the roots stay from the sector |arg z| < pi/M.

    Args:
        report: Output of find_roots
        m: Step M >= 1
        slack: Tolerance for calling a root inside the sector
        cluster_slack: Tolerance used instead when the report is clustered

    Returns:
        ClearanceRecord
    """
    boundary = math.pi / m
    used_slack = cluster_slack if report.clustered else slack
    candidates = report.nonzero_roots()

    if not candidates:
        return ClearanceRecord(
            m=m, boundary_angle=boundary, clearance=None, closest_root=None,
            root_slope=None, boundary_slope=None, slack=used_slack,
        )

    closest = min(candidates, key=lambda z: abs(cmath.phase(z)))
    clearance = abs(cmath.phase(closest)) - boundary
    boundary_slope = math.tan(boundary) if m > 2 else None
    root_slope = abs(closest.imag) / closest.real if closest.real > 0 else None
    inside = tuple(z for z in candidates if abs(cmath.phase(z)) < boundary - used_slack)

    return ClearanceRecord(
        m=m,
        boundary_angle=boundary,
        clearance=clearance,
        closest_root=closest,
        root_slope=root_slope,
        boundary_slope=boundary_slope,
        slack=used_slack,
        roots_in_sector=inside,
    )


def aesw_check(report: RootReport, tol: float = 1e-8, cluster_tol: float = DEFAULT_CLUSTER_SLACK) -> bool:
    """
    True if every root is real and nonpositive.

    A root counts as real when |Im z| <= tol (1+|z|) and as nonpositive when
    Re z <= tol (1+|z|), so zero roots pass; cluster_tol replaces tol for
    clustered reports, whose iterates split multiple roots off the axis.
    """
    used = cluster_tol if report.clustered else tol
    return all(max(abs(z.imag), z.real) <= used * (1 + abs(z)) for z in report.roots)


def minor_bruteforce(entries: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Determinant by cofactor expansion, used to cross-check the elimination kernel.

    Raises:
        MinorShapeError: If the grid is not square or its order exceeds 6
    """
    return det_cofactor(entries)
