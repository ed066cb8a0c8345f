"""
Unit tests for the JSON documents and their text rendering.
"""
import json

import pytest

from cli.renderers import render_certificate, render_cfrac, render_table
from cli.schemas import ABSENT, CertificateOut, CfracOut, MinorsOut, PolynomialOut, TableOut
from services.contfrac_service import expand_pair_cfrac
from services.euclid_service import render_table as layout_table
from services.euclid_service import run_generalized_euclid
from services.hurwitz_service import special_minors, tn_verdict
from services.sector_service import certify


class TestSchemas:
    """Test cases for the output schemas"""

    @pytest.mark.unit
    def test_fractions_serialize_as_strings(self, near_boundary_quintic):
        """Exact coefficients leave as "p/q" strings, never floats."""
        data = json.loads(PolynomialOut.from_polynomial(near_boundary_quintic).model_dump_json())
        assert data["coefficients"] == ["1", "1", "1", "1001/1000", "1", "999/1000"]
        assert data["degree"] == 5

    @pytest.mark.unit
    def test_table_layout_marks_absent_cells(self, binomial_seven):
        """Layout cells past f_n are the string "absent"."""
        table = run_generalized_euclid(binomial_seven, 3)
        data = json.loads(TableOut.from_table(table, layout_table(table), []).model_dump_json())
        assert data["layout"][2][2] == ABSENT
        assert data["leading"][5] == "81/5"
        assert data["violations"] == []

    @pytest.mark.unit
    def test_minors_with_verdict(self, stable_quintic):
        """The witness carries its row and column sets."""
        document = MinorsOut.from_minors(special_minors(stable_quintic, 3), tn_verdict(stable_quintic, 3))
        data = json.loads(document.model_dump_json())
        assert data["tn"]["status"] == "NOT_TN"
        assert data["tn"]["witness"] == {"rows": [2, 3], "cols": [1, 2], "value": "-2"}
        assert data["special_minors"][0] == {"p": 1, "k": 2, "r": 1, "value": "1"}

    @pytest.mark.unit
    def test_certificate(self, pairwise_sextic):
        """Certificates list their claim, evidence and earlier failures."""
        data = json.loads(CertificateOut.from_certificate(certify(pairwise_sextic, 3)).model_dump_json())
        assert data["status"] == "CERTIFIED"
        assert data["claim"] == "CLOSED_SECTOR_EXCLUDED"
        assert data["evidence"]["pairs"][0]["minors"] == ["3", "5/2", "4", "4/9"]
        assert [f["method"] for f in data["failures"]] == ["ALL_H_POSITIVE", "TN_SPECIAL_MINORS"]
        assert data["oracle"] is None


class TestRenderers:
    """Test cases for the text renderers"""

    @pytest.mark.unit
    def test_render_table(self, binomial_seven):
        """The text table lists every f_i with its h_i."""
        table = run_generalized_euclid(binomial_seven, 3)
        text = render_table(TableOut.from_table(table, layout_table(table), []))
        assert "h_3 = 30" in text
        assert "non-degenerate: yes" in text

    @pytest.mark.unit
    def test_render_certificate(self, near_boundary_quintic):
        """The text certificate names status, method and notes."""
        text = render_certificate(CertificateOut.from_certificate(certify(near_boundary_quintic, 3)))
        assert text.startswith("Sector |arg z| < pi/3 (60.0000 degrees): CERTIFIED")
        assert "method: ALL_H_POSITIVE" in text
        assert "note: n = 5, M = 3" in text

    @pytest.mark.unit
    def test_render_cfrac(self, near_boundary_quintic):
        """The fraction is printed with its exponents."""
        text = render_cfrac(CfracOut.from_cfrac(expand_pair_cfrac(near_boundary_quintic, 3, 0, 1)))
        assert "(1) z^1 + 1/((1000) z^2 + 1/((1/1000) z^1))" in text
