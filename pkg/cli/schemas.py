"""
Pydantic schemas for the JSON documents printed by the command line
"""
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, PlainSerializer

from models.certificate import SectorCertificate
from models.contfrac import ContinuedFraction
from models.euclid import EuclidTable, TableLayout
from models.factorization import FactorizationResult
from models.hurwitz import SpecialMinorSet, TNVerdict
from models.oracle import ClearanceRecord, RootReport
from models.polynomial import RationalPolynomial
from utils.rationals import format_fraction

# Exact rationals always leave the program as "p/q" strings
ExactFraction = Annotated[Fraction, PlainSerializer(format_fraction, return_type=str)]

ABSENT = "absent"


class SchemaBase(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)


# ============================================================================
# Polynomial / Euclid Schemas
# ============================================================================

class PolynomialOut(SchemaBase):
    degree: int
    coefficients: List[ExactFraction]
    text: str

    @classmethod
    def from_polynomial(cls, f: RationalPolynomial) -> "PolynomialOut":
        return cls(degree=int(f.degree), coefficients=list(f.coeffs), text=f.format())


class TableOut(SchemaBase):
    m: int
    polynomial: PolynomialOut
    polys: List[List[ExactFraction]]
    quotients: List[List[ExactFraction]]
    leading: List[ExactFraction]
    nondegenerate: bool
    layout: List[List[Union[str, List[ExactFraction]]]]
    violations: List[str] = []

    @classmethod
    def from_table(cls, table: EuclidTable, layout: TableLayout, violations: List[str]) -> "TableOut":
        return cls(
            m=table.m,
            polynomial=PolynomialOut.from_polynomial(table.source),
            polys=[list(p.coeffs) for p in table.polys],
            quotients=[list(q.coeffs) for q in table.quotients],
            leading=list(table.leading),
            nondegenerate=table.nondegenerate,
            layout=[[list(cell.coeffs) if cell is not None else ABSENT for cell in row] for row in layout.rows],
            violations=violations,
        )


# ============================================================================
# Minor Schemas
# ============================================================================

class SpecialMinorOut(SchemaBase):
    p: int
    k: int
    r: int
    value: ExactFraction


class WitnessOut(SchemaBase):
    rows: List[int]
    cols: List[int]
    value: ExactFraction


class TNVerdictOut(SchemaBase):
    status: str
    method: str
    witness: Optional[WitnessOut] = None
    searched_order: int
    minors_checked: int

    @classmethod
    def from_verdict(cls, verdict: TNVerdict) -> "TNVerdictOut":
        witness = None
        if verdict.witness is not None:
            witness = WitnessOut(
                rows=list(verdict.witness.rows),
                cols=list(verdict.witness.cols),
                value=verdict.witness.value,
            )
        return cls(
            status=verdict.status.value,
            method=verdict.method.value,
            witness=witness,
            searched_order=verdict.searched_order,
            minors_checked=verdict.minors_checked,
        )


class MinorsOut(SchemaBase):
    m: int
    special_minors: List[SpecialMinorOut]
    all_positive: bool
    tn: Optional[TNVerdictOut] = None

    @classmethod
    def from_minors(cls, minors: SpecialMinorSet, verdict: Optional[TNVerdict] = None) -> "MinorsOut":
        entries = []
        for p, value in enumerate(minors.values, start=1):
            k, r = minors.index(p)
            entries.append(SpecialMinorOut(p=p, k=k, r=r, value=value))
        return cls(
            m=minors.m,
            special_minors=entries,
            all_positive=minors.all_positive(),
            tn=TNVerdictOut.from_verdict(verdict) if verdict is not None else None,
        )


# ============================================================================
# Continued Fraction / Factorization Schemas
# ============================================================================

class CfracOut(SchemaBase):
    m: int
    pair: Tuple[int, int]
    coefficients: List[ExactFraction]
    exponents: List[int]
    final_exponent: Optional[int] = None
    terminated_early: bool
    degrees: List[int]

    @classmethod
    def from_cfrac(cls, cf: ContinuedFraction) -> "CfracOut":
        return cls(
            m=cf.step,
            pair=cf.pair,
            coefficients=list(cf.coefficients),
            exponents=cf.exponents,
            final_exponent=cf.final_exponent if cf.coefficients else None,
            terminated_early=cf.terminated_early,
            degrees=list(cf.degrees),
        )


class FactorOut(SchemaBase):
    m: int
    cs: List[ExactFraction]
    terminal: ExactFraction
    all_positive: bool
    window: int
    verified: bool

    @classmethod
    def from_result(cls, result: FactorizationResult, window: int, verified: bool) -> "FactorOut":
        return cls(
            m=result.m,
            cs=list(result.cs),
            terminal=result.terminal,
            all_positive=result.all_positive(),
            window=window,
            verified=verified,
        )


# ============================================================================
# Oracle Schemas (the only place floats appear)
# ============================================================================

class ComplexOut(SchemaBase):
    re: float
    im: float

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexOut":
        return cls(re=z.real, im=z.imag)


class ClearanceOut(SchemaBase):
    m: int
    boundary_angle: float
    clearance: Optional[float] = None
    closest_root: Optional[ComplexOut] = None
    root_slope: Optional[float] = None
    boundary_slope: Optional[float] = None
    slack: float
    roots_in_sector: List[ComplexOut] = []

    @classmethod
    def from_record(cls, record: ClearanceRecord) -> "ClearanceOut":
        return cls(
            m=record.m,
            boundary_angle=record.boundary_angle,
            clearance=record.clearance,
            closest_root=ComplexOut.from_complex(record.closest_root) if record.closest_root is not None else None,
            root_slope=record.root_slope,
            boundary_slope=record.boundary_slope,
            slack=record.slack,
            roots_in_sector=[ComplexOut.from_complex(z) for z in record.roots_in_sector],
        )


class OracleOut(SchemaBase):
    roots: List[ComplexOut]
    residual: float
    converged: bool
    iterations: int
    attempts: int
    clustered: bool
    seed: int
    min_arg: Optional[float] = None
    min_clearance_radians: Optional[float] = None
    clearance: Optional[ClearanceOut] = None
    all_real_nonpositive: Optional[bool] = None

    @classmethod
    def from_report(
        cls,
        report: RootReport,
        clearance: Optional[ClearanceRecord] = None,
        all_real_nonpositive: Optional[bool] = None,
    ) -> "OracleOut":
        return cls(
            roots=[ComplexOut.from_complex(z) for z in report.roots],
            residual=report.residual,
            converged=report.converged,
            iterations=report.iterations,
            attempts=report.attempts,
            clustered=report.clustered,
            seed=report.seed,
            min_arg=report.min_arg,
            min_clearance_radians=clearance.clearance if clearance is not None else None,
            clearance=ClearanceOut.from_record(clearance) if clearance is not None else None,
            all_real_nonpositive=all_real_nonpositive,
        )


class RootsOut(SchemaBase):
    polynomial: PolynomialOut
    oracle: OracleOut


# ============================================================================
# Certificate / Report Schemas
# ============================================================================

class FailureOut(SchemaBase):
    method: str
    reason: str
    applicable: bool


class CertificateOut(SchemaBase):
    m: int
    status: str
    method: Optional[str] = None
    claim: str
    sector_degrees: float
    evidence: Dict[str, Any] = {}
    notes: List[str] = []
    failures: List[FailureOut] = []
    oracle: Optional[OracleOut] = None

    @classmethod
    def from_certificate(cls, certificate: SectorCertificate, oracle: Optional[OracleOut] = None) -> "CertificateOut":
        data = certificate.to_dict()
        return cls(
            m=data["m"],
            status=data["status"],
            method=data["method"],
            claim=data["claim"],
            sector_degrees=data["sector_degrees"],
            evidence=data["evidence"],
            notes=data["notes"],
            failures=[FailureOut(**failure) for failure in data["failures"]],
            oracle=oracle,
        )


class ReportOut(SchemaBase):
    polynomial: PolynomialOut
    m: int
    table: Optional[TableOut] = None
    minors: Optional[MinorsOut] = None
    certificate: CertificateOut
    roots: RootsOut


# ============================================================================
# Error Schemas
# ============================================================================

class ErrorOut(SchemaBase):
    """A batch line that did not produce a document"""

    line: Optional[int] = None
    input: str
    error: str
    error_code: str
    exit_code: int
