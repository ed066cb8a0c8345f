"""
Plain-text rendering of the command documents
"""
import math
from typing import List

from cli.schemas import (
    ABSENT,
    CertificateOut,
    CfracOut,
    ErrorOut,
    FactorOut,
    MinorsOut,
    OracleOut,
    ReportOut,
    RootsOut,
    TableOut,
)
from models.polynomial import RationalPolynomial
from utils.rationals import format_fraction


def _poly_text(coeffs) -> str:
    return RationalPolynomial.from_coeffs(coeffs).format()


def _complex_text(re: float, im: float) -> str:
    sign = "-" if im < 0 else "+"
    return f"{re:.6f} {sign} {abs(im):.6f}i"


def render_table(doc: TableOut) -> str:
    lines = [f"f = {doc.polynomial.text}", f"Generalized Euclidean algorithm, step M = {doc.m}", ""]
    for index, coeffs in enumerate(doc.polys):
        h = format_fraction(doc.leading[index])
        lines.append(f"  f_{index:<3} = {_poly_text(coeffs):<40} h_{index} = {h}")
    lines.append("")
    for index, coeffs in enumerate(doc.quotients):
        lines.append(f"  d_{index:<3} = {_poly_text(coeffs)}")
    lines.append("")
    lines.append("Layout (row j: f_j, f_{j+M}, ...):")
    for j, row in enumerate(doc.layout):
        cells = ["" if cell == ABSENT else _poly_text(cell) for cell in row]
        lines.append(f"  {j}: " + " | ".join(cells))
    lines.append("")
    lines.append(f"non-degenerate: {'yes' if doc.nondegenerate else 'no'}")
    for violation in doc.violations:
        lines.append(f"  structure violation: {violation}")
    return "\n".join(lines)


def render_minors(doc: MinorsOut) -> str:
    lines = [f"Special minors of H_{doc.m}:"]
    for entry in doc.special_minors:
        lines.append(f"  Delta_{entry.p:<3} = H({entry.k}, {entry.r}) = {format_fraction(entry.value)}")
    lines.append(f"all positive: {'yes' if doc.all_positive else 'no'}")
    if doc.tn is not None:
        lines.append(f"total nonnegativity: {doc.tn.status} ({doc.tn.method})")
        if doc.tn.witness is not None:
            w = doc.tn.witness
            lines.append(f"  witness: rows {w.rows} cols {w.cols} = {format_fraction(w.value)}")
        lines.append(f"  searched up to order {doc.tn.searched_order}, {doc.tn.minors_checked} minors evaluated")
    return "\n".join(lines)


def render_cfrac(doc: CfracOut) -> str:
    i, j = doc.pair
    terms = [f"({format_fraction(c)}) z^{e}" for c, e in zip(doc.coefficients, doc.exponents)]
    lines = [f"f_{i} / f_{j} at M = {doc.m}:"]
    lines.append("  " + " + 1/(".join(terms) + ")" * (len(terms) - 1))
    lines.append(f"  remainder degrees: {doc.degrees}")
    if doc.terminated_early:
        lines.append("  expansion terminated early")
    return "\n".join(lines)


def render_factor(doc: FactorOut) -> str:
    lines = [f"H~_{doc.m}(f) = J(c_1) ... J(c_{len(doc.cs)}) H~_{doc.m}({format_fraction(doc.terminal)})"]
    for index, c in enumerate(doc.cs, start=1):
        lines.append(f"  c_{index:<3} = {format_fraction(c)}")
    lines.append(f"all positive: {'yes' if doc.all_positive else 'no'}")
    lines.append(f"verified on the leading {doc.window} x {doc.window} block: {'yes' if doc.verified else 'NO'}")
    return "\n".join(lines)


def render_oracle(doc: OracleOut) -> str:
    lines = [f"Roots (seed {doc.seed}, {'converged' if doc.converged else 'NOT converged'}, residual {doc.residual:.3e}):"]
    for root in doc.roots:
        lines.append(f"  {_complex_text(root.re, root.im)}")
    if doc.clustered:
        lines.append("  root cluster detected")
    if doc.clearance is not None:
        c = doc.clearance
        lines.append(f"Sector |arg z| < pi/{c.m} ({math.degrees(c.boundary_angle):.4f} degrees):")
        if c.clearance is not None:
            lines.append(f"  clearance {c.clearance:.6e} rad")
        if c.root_slope is not None and c.boundary_slope is not None:
            lines.append(f"  root slope +-{c.root_slope:.5f} vs boundary slope +-{c.boundary_slope:.5f}")
        for z in c.roots_in_sector:
            lines.append(f"  inside the sector: {_complex_text(z.re, z.im)}")
    if doc.all_real_nonpositive is not None:
        lines.append(f"all roots real and nonpositive: {'yes' if doc.all_real_nonpositive else 'no'}")
    return "\n".join(lines)


def render_roots(doc: RootsOut) -> str:
    return f"f = {doc.polynomial.text}\n{render_oracle(doc.oracle)}"


def render_certificate(doc: CertificateOut) -> str:
    lines = [f"Sector |arg z| < pi/{doc.m} ({doc.sector_degrees:.4f} degrees): {doc.status}"]
    if doc.method:
        lines.append(f"  method: {doc.method}")
        lines.append(f"  claim: {doc.claim}")
    for key, value in doc.evidence.items():
        lines.append(f"  {key}: {value}")
    for failure in doc.failures:
        tag = "" if failure.applicable else " (not applicable)"
        lines.append(f"  {failure.method}{tag}: {failure.reason}")
    for note in doc.notes:
        lines.append(f"  note: {note}")
    if doc.oracle is not None:
        lines.append(render_oracle(doc.oracle))
    return "\n".join(lines)


def render_report(doc: ReportOut) -> str:
    sections: List[str] = []
    if doc.table is not None:
        sections.append(render_table(doc.table))
    if doc.minors is not None:
        sections.append(render_minors(doc.minors))
    sections.append(render_certificate(doc.certificate))
    sections.append(render_roots(doc.roots))
    return "\n\n".join(sections)


def render_error(doc: ErrorOut) -> str:
    where = f"line {doc.line}: " if doc.line is not None else ""
    return f"{where}{doc.input}\n  {doc.error_code}: {doc.error} (exit {doc.exit_code})"
