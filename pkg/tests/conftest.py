"""
Pytest configuration and shared fixtures.

This file is automatically loaded by pytest and makes fixtures available
to all test files without explicit imports.
"""
import os
import sys
from pathlib import Path

# Keep the oracle seed under test control
os.environ.pop("HMSECTOR_SEED", None)

import pytest

# Ensure project modules are importable
root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))
sys.path.insert(0, str(root_dir / "src"))

from models.polynomial import RationalPolynomial, parse_polynomial  # noqa: E402


# =============================================================================
# Reference Polynomials
# =============================================================================

@pytest.fixture
def near_boundary_quintic() -> RationalPolynomial:
    """x^5 + x^4 + x^3 + (1001/1000)x^2 + x + 999/1000: all h positive at M = 3"""
    return parse_polynomial("1,1,1,1.001,1,0.999")


@pytest.fixture
def stable_quintic() -> RationalPolynomial:
    """x^5 + x^4 + 5x^3 + 2x^2 + 4x + 1/2: stable, but H_3 is not totally nonnegative"""
    return parse_polynomial("1,1,5,2,4,1/2")


@pytest.fixture
def pairwise_sextic() -> RationalPolynomial:
    """x^6 + 3x^5 + 9x^4 + (3/2)x^3 + 2x^2 + x + 1/9: pairwise minors positive, H_3 not TN"""
    return parse_polynomial("1,3,9,3/2,2,1,1/9")


@pytest.fixture
def binomial_seven() -> RationalPolynomial:
    """(x+1)^7"""
    return parse_polynomial("1,7,21,35,35,21,7,1")


@pytest.fixture
def unit_circle_quadratic() -> RationalPolynomial:
    """x^2 + 1"""
    return parse_polynomial("1,0,1")


@pytest.fixture
def poly_file(tmp_path):
    """Write polynomials (one per line) to a temporary file and return its path"""
    def _write(*lines: str) -> Path:
        path = tmp_path / "polys.txt"
        path.write_text("\n".join(lines) + "\n")
        return path
    return _write
