"""
Unit tests for the certification method registry and the method classes.
"""
from fractions import Fraction

import pytest

from constants import CertificateMethod, SectorClaim
from methods.all_h_positive import AllHPositiveMethod
from methods.base_method import MethodContext, SectorMethod
from methods.cowling_thron import CowlingThronMethod
from methods.pairwise_hurwitz import PairwiseHurwitzMethod
from methods.routh_hurwitz import RouthHurwitzMethod
from methods.tn_special_minors import TNSpecialMinorsMethod
from models.polynomial import parse_polynomial
from services.method_factory import MethodFactory
from utils.errors import MethodNotApplicableError


class TestMethodFactory:
    """Test cases for MethodFactory"""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "method,expected_class",
        [
            (CertificateMethod.ALL_H_POSITIVE, AllHPositiveMethod),
            (CertificateMethod.TN_SPECIAL_MINORS, TNSpecialMinorsMethod),
            (CertificateMethod.PAIRWISE_HURWITZ, PairwiseHurwitzMethod),
            (CertificateMethod.COWLING_THRON, CowlingThronMethod),
            (CertificateMethod.ROUTH_HURWITZ, RouthHurwitzMethod),
        ],
    )
    def test_create_method(self, method, expected_class):
        """Each enum member maps to its method class."""
        instance = MethodFactory.create_method(method)
        assert isinstance(instance, expected_class)
        assert isinstance(instance, SectorMethod)
        assert instance.get_method_name() == method.value

    @pytest.mark.unit
    def test_create_by_name(self):
        """Names are accepted case-insensitively."""
        assert isinstance(MethodFactory.create_method("tn_special_minors"), TNSpecialMinorsMethod)

    @pytest.mark.unit
    def test_unsupported(self):
        """Unknown names raise ValueError listing the supported methods."""
        with pytest.raises(ValueError, match="Unsupported method: sturm. Supported methods: ALL_H_POSITIVE"):
            MethodFactory.create_method("sturm")

    @pytest.mark.unit
    def test_supported_methods(self):
        """Every enum member is registered."""
        assert sorted(MethodFactory.get_supported_methods()) == sorted(m.value for m in CertificateMethod)
        assert MethodFactory.is_supported("routh_hurwitz")
        assert not MethodFactory.is_supported("auto")


class TestCliNames:
    """Test cases for CertificateMethod name resolution"""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "name,expected",
        [
            ("auto", None),
            ("h", CertificateMethod.ALL_H_POSITIVE),
            ("TN", CertificateMethod.TN_SPECIAL_MINORS),
            ("pairwise", CertificateMethod.PAIRWISE_HURWITZ),
            ("ct", CertificateMethod.COWLING_THRON),
            ("rh", CertificateMethod.ROUTH_HURWITZ),
            ("routh_hurwitz", CertificateMethod.ROUTH_HURWITZ),
        ],
    )
    def test_from_cli_name(self, name, expected):
        """Short names, enum names and auto all resolve."""
        assert CertificateMethod.from_cli_name(name) == expected

    @pytest.mark.unit
    def test_unknown_name(self):
        """Unknown names raise ValueError."""
        with pytest.raises(ValueError, match="Unsupported method"):
            CertificateMethod.from_cli_name("bogus")

    @pytest.mark.unit
    def test_auto_order(self):
        """The Hurwitz test goes first only at M = 2."""
        assert CertificateMethod.auto_order(2)[0] == CertificateMethod.ROUTH_HURWITZ
        assert CertificateMethod.ROUTH_HURWITZ not in CertificateMethod.auto_order(3)


class TestMethods:
    """Test cases for applicability, claims and evidence"""

    @pytest.mark.unit
    def test_claims(self):
        """Each method licenses exactly its own region."""
        assert AllHPositiveMethod().claim == SectorClaim.STRICT_EXTERIOR
        assert TNSpecialMinorsMethod().claim == SectorClaim.OPEN_SECTOR
        assert PairwiseHurwitzMethod().claim == SectorClaim.CLOSED_SECTOR_EXCLUDED
        assert CowlingThronMethod().claim == SectorClaim.STRICT_EXTERIOR
        assert RouthHurwitzMethod().claim == SectorClaim.STRICT_EXTERIOR

    @pytest.mark.unit
    def test_applicability_ranges(self, pairwise_sextic):
        """Ranges: pairwise up to floor(n/2)+1, Cowling-Thron at M = n, Hurwitz at M = 2."""
        assert PairwiseHurwitzMethod().applies(pairwise_sextic, 4)
        assert "= 4" in PairwiseHurwitzMethod().applicability(pairwise_sextic, 5)
        assert CowlingThronMethod().applies(pairwise_sextic, 6)
        assert not CowlingThronMethod().applies(pairwise_sextic, 5)
        assert RouthHurwitzMethod().applies(pairwise_sextic, 2)
        assert not RouthHurwitzMethod().applies(pairwise_sextic, 3)
        assert not AllHPositiveMethod().applies(pairwise_sextic, 1)

    @pytest.mark.unit
    def test_tn_evidence(self, near_boundary_quintic):
        """The special-minor method returns the exact minors."""
        evidence = TNSpecialMinorsMethod().run(near_boundary_quintic, 3, MethodContext())
        assert len(evidence["special_minors"]) == 5
        assert all(value > 0 for value in evidence["special_minors"])

    @pytest.mark.unit
    def test_cowling_thron_failure(self):
        """A zero coefficient fails the Cowling-Thron test."""
        with pytest.raises(MethodNotApplicableError, match="a_2 = 0"):
            CowlingThronMethod().run(parse_polynomial("1,2,0,1"), 3, MethodContext())

    @pytest.mark.unit
    def test_context_caches_tables(self, binomial_seven):
        """MethodContext runs the algorithm once per step."""
        context = MethodContext(cap=2)
        assert context.euclid(binomial_seven, 3) is context.euclid(binomial_seven, 3)
        assert context.euclid(binomial_seven, 3).leading[3] == Fraction(30)
