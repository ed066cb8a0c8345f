"""
Unit tests for sector certification, oracle cross-checks and argument sums.
"""
import cmath
import math
import random
from fractions import Fraction

import pytest

from constants import CertificateMethod, CertificateStatus, SectorClaim
from models.certificate import SectorCertificate
from models.oracle import RootReport
from models.polynomial import RationalPolynomial
from services.euclid_service import synthesize_from_leading
from services.root_oracle import find_roots, sector_clearance
from services.sector_service import (
    AESW_NOTE,
    CLOSED_SECTOR_NOTE,
    argument_sum_bound_check,
    certify,
    cross_check,
)
from tests.fixtures.polynomials import positive_fraction, random_leading
from utils.errors import HypothesisNotMetError, LeadingCoefficientError, StepRangeError

F = Fraction
P = RationalPolynomial.from_coeffs


class TestCertify:
    """Test cases for certify"""

    # =========================================================================
    # reference polynomials
    # =========================================================================

    @pytest.mark.unit
    def test_near_boundary_quintic(self, near_boundary_quintic):
        """All h positive certifies the pi/3 sector, with the closed-sector note."""
        cert = certify(near_boundary_quintic, 3)
        assert cert.status == CertificateStatus.CERTIFIED
        assert cert.method == CertificateMethod.ALL_H_POSITIVE
        assert cert.claim == SectorClaim.STRICT_EXTERIOR
        assert cert.evidence["h"] == [F(1), F(1), F(1), F(1, 1000), F(1, 1000), F(999, 1000)]
        assert CLOSED_SECTOR_NOTE in cert.notes
        assert cert.sector_degrees == pytest.approx(60.0)

    @pytest.mark.unit
    def test_stable_quintic_step_two(self, stable_quintic):
        """At M = 2 the Hurwitz minors certify stability first."""
        cert = certify(stable_quintic, 2)
        assert cert.method == CertificateMethod.ROUTH_HURWITZ
        assert cert.evidence["hurwitz_minors"] == [F(1), F(3), F(5, 2), F(17, 4), F(17, 8)]

    @pytest.mark.unit
    def test_stable_quintic_step_three_unknown(self, stable_quintic):
        """No method certifies the stable quintic at M = 3; every failure is recorded."""
        cert = certify(stable_quintic, 3)
        assert cert.status == CertificateStatus.UNKNOWN
        assert cert.method is None
        assert cert.claim == SectorClaim.NONE
        failures = {failure.method: failure for failure in cert.failures}
        assert list(failures) == [
            CertificateMethod.ALL_H_POSITIVE,
            CertificateMethod.TN_SPECIAL_MINORS,
            CertificateMethod.PAIRWISE_HURWITZ,
            CertificateMethod.COWLING_THRON,
        ]
        assert "h_3 = -2" in failures[CertificateMethod.ALL_H_POSITIVE].reason
        assert "rows [2, 3] cols [1, 2] = -2" in failures[CertificateMethod.TN_SPECIAL_MINORS].reason
        assert "pair (0,1)" in failures[CertificateMethod.PAIRWISE_HURWITZ].reason
        assert not failures[CertificateMethod.COWLING_THRON].applicable

    @pytest.mark.unit
    def test_pairwise_sextic(self, pairwise_sextic):
        """The sextic is certified by the pairwise test after h and TN fail."""
        cert = certify(pairwise_sextic, 3)
        assert cert.status == CertificateStatus.CERTIFIED
        assert cert.method == CertificateMethod.PAIRWISE_HURWITZ
        assert cert.claim == SectorClaim.CLOSED_SECTOR_EXCLUDED
        assert [f.method for f in cert.failures] == [
            CertificateMethod.ALL_H_POSITIVE,
            CertificateMethod.TN_SPECIAL_MINORS,
        ]
        assert cert.evidence["pairs"][0] == {"pair": [0, 1], "minors": [F(3), F(5, 2), F(4), F(4, 9)]}

    @pytest.mark.unit
    def test_cowling_thron_explicit(self, binomial_seven):
        """With M = n and positive coefficients the Cowling-Thron test applies."""
        cert = certify(binomial_seven, 7, CertificateMethod.COWLING_THRON)
        assert cert.certified
        assert cert.claim == SectorClaim.STRICT_EXTERIOR

    # =========================================================================
    # explicit methods and edge cases
    # =========================================================================

    @pytest.mark.unit
    def test_explicit_out_of_range(self, near_boundary_quintic):
        """A requested method outside its range gives NOT_APPLICABLE."""
        cert = certify(near_boundary_quintic, 3, CertificateMethod.COWLING_THRON)
        assert cert.status == CertificateStatus.NOT_APPLICABLE
        assert not cert.failures[0].applicable

    @pytest.mark.unit
    def test_explicit_failure(self, stable_quintic):
        """A requested method that runs and fails gives UNKNOWN."""
        cert = certify(stable_quintic, 3, CertificateMethod.TN_SPECIAL_MINORS)
        assert cert.status == CertificateStatus.UNKNOWN
        assert len(cert.failures) == 1

    @pytest.mark.unit
    def test_step_one(self, binomial_seven):
        """M = 1 is informational only."""
        cert = certify(binomial_seven, 1)
        assert cert.status == CertificateStatus.NOT_APPLICABLE
        assert cert.notes == (AESW_NOTE,)

    @pytest.mark.unit
    def test_negative_leading_coefficient(self):
        """a_0 <= 0 is rejected."""
        with pytest.raises(LeadingCoefficientError):
            certify(P([-1, 2, 3]), 2)

    @pytest.mark.unit
    @pytest.mark.parametrize("m", [0, 6])
    def test_step_range(self, stable_quintic, m):
        """M outside [1, n] is rejected."""
        with pytest.raises(StepRangeError):
            certify(stable_quintic, m)

    @pytest.mark.unit
    def test_to_dict_formats_evidence(self, near_boundary_quintic):
        """Evidence fractions serialize as "p/q" strings."""
        data = certify(near_boundary_quintic, 3).to_dict()
        assert data["evidence"]["h"][3] == "1/1000"
        assert data["status"] == "CERTIFIED"

    # =========================================================================
    # hierarchy and soundness
    # =========================================================================

    @pytest.mark.property
    def test_all_h_positive_implies_tn(self):
        """Whenever all h are positive the special-minor test certifies too."""
        rng = random.Random(31)
        for _ in range(100):
            n = rng.randint(2, 8)
            m = rng.randint(2, n)
            f = synthesize_from_leading(random_leading(rng, n), m)
            assert certify(f, m, CertificateMethod.ALL_H_POSITIVE).certified
            assert certify(f, m, CertificateMethod.TN_SPECIAL_MINORS).certified

    @pytest.mark.property
    @pytest.mark.slow
    def test_certificates_agree_with_oracle(self):
        """No certified sector contains an oracle root, over 500 certified polynomials."""
        rng = random.Random(47)
        certified = 0
        sample = 0
        while certified < 500:
            sample += 1
            assert sample <= 2000, f"only {certified} certificates in 2000 draws"
            n = rng.randint(2, 7)
            m = rng.randint(2, n)
            if sample % 2:
                f = synthesize_from_leading(random_leading(rng, n), m)
            else:
                f = P([positive_fraction(rng) for _ in range(n + 1)])
            cert = certify(f, m, cap=2)
            if not cert.certified:
                continue
            certified += 1
            report = find_roots(f, seed=sample)
            assert cross_check(cert, report).status == CertificateStatus.CERTIFIED


class TestCrossCheck:
    """Test cases for cross_check"""

    @pytest.mark.unit
    def test_refutes_with_inside_root(self):
        """A certified sector containing a root is reported as refuted."""
        cert = SectorCertificate(m=3, status=CertificateStatus.CERTIFIED, method=CertificateMethod.ALL_H_POSITIVE)
        report = RootReport(roots=(1 + 0.1j, -2 + 0j), residual=0.0, converged=True)
        checked = cross_check(cert, report)
        assert checked.status == CertificateStatus.REFUTED_BY_ORACLE
        assert checked.method == CertificateMethod.ALL_H_POSITIVE
        assert "oracle roots inside the sector" in checked.notes[-1]

    @pytest.mark.unit
    def test_leaves_other_statuses(self):
        """Only CERTIFIED certificates are cross-checked."""
        cert = SectorCertificate(m=3, status=CertificateStatus.UNKNOWN)
        report = RootReport(roots=(1 + 0j,), residual=0.0, converged=True)
        assert cross_check(cert, report) is cert

    @pytest.mark.unit
    def test_agrees_on_quintic(self, near_boundary_quintic):
        """The near-boundary quintic's certificate survives the oracle."""
        cert = certify(near_boundary_quintic, 3)
        report = find_roots(near_boundary_quintic)
        assert cross_check(cert, report) is cert
        assert sector_clearance(report, 3).clearance > 0


class TestArgumentSumBound:
    """Test cases for argument_sum_bound_check"""

    @pytest.mark.unit
    @pytest.mark.parametrize("fixture_name", ["near_boundary_quintic", "binomial_seven"])
    def test_bound_holds_in_cone(self, request, fixture_name):
        """Partial argument sums stay below pi(M-1)/M across the cone."""
        f = request.getfixturevalue(fixture_name)
        rng = random.Random(13)
        for _ in range(50):
            z = cmath.rect(rng.uniform(0.2, 5.0), rng.uniform(0.0, math.pi / 3))
            report = argument_sum_bound_check(f, 3, z)
            assert not report.violated
            assert report.worst <= report.bound + 1e-9
            assert report.bound == pytest.approx(2 * math.pi / 3)

    @pytest.mark.unit
    def test_positive_real_point(self, binomial_seven):
        """On the positive axis every ratio is positive, so every sum is zero."""
        report = argument_sum_bound_check(binomial_seven, 3, 1.5)
        assert report.worst == pytest.approx(0.0, abs=1e-15)
        assert [w.t for w in report.windows] == [3, 4, 5, 6, 7]
        assert len(report.window_list()) == 5

    @pytest.mark.unit
    def test_requires_positive_h(self, stable_quintic):
        """A negative h_i voids the hypothesis."""
        with pytest.raises(HypothesisNotMetError):
            argument_sum_bound_check(stable_quintic, 3, 1 + 0.5j)

    @pytest.mark.unit
    def test_requires_cone(self, binomial_seven):
        """Points outside 0 <= arg z <= pi/M are refused."""
        with pytest.raises(HypothesisNotMetError):
            argument_sum_bound_check(binomial_seven, 3, -1 + 0j)
        with pytest.raises(HypothesisNotMetError):
            argument_sum_bound_check(binomial_seven, 3, 1 - 1j)
