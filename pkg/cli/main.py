"""
hmsector command line

    python -m cli.main certify --poly "1,1,1,1.001,1,0.999" --m 3 --json

Exit codes: 0 success or CERTIFIED, 1 informational outcome (UNKNOWN, NOT_TN, ...),
2 usage error, 3 internal or numeric error.
"""
import argparse
import dataclasses
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pydantic import BaseModel, SerializeAsAny, TypeAdapter, ValidationError

from cli.config import ENV_PREFIX, Settings, get_settings, resolve_seed
from cli.logging_config import get_logger, setup_logging
from cli.renderers import (
    render_certificate,
    render_cfrac,
    render_error,
    render_factor,
    render_minors,
    render_report,
    render_roots,
    render_table,
)
from cli.schemas import (
    CertificateOut,
    CfracOut,
    ErrorOut,
    FactorOut,
    MinorsOut,
    OracleOut,
    PolynomialOut,
    ReportOut,
    RootsOut,
    TableOut,
)
from constants import CertificateMethod, CertificateStatus, Command, TNStatus
from models.oracle import RootReport
from models.polynomial import RationalPolynomial, parse_polynomial, read_polynomial_lines
from services.contfrac_service import expand_pair_cfrac
from services.euclid_service import render_table as layout_table
from services.euclid_service import run_generalized_euclid, verify_structure
from services.factorization_service import factor_hm, verify_factorization
from services.hurwitz_service import special_minors, tn_verdict
from services.root_oracle import aesw_check, find_roots, sector_clearance
from services.sector_service import certify, cross_check
from utils.errors import (
    DegeneratePairError,
    FactorizationInapplicableError,
    IndexRangeError,
    LeadingCoefficientError,
    MinorShapeError,
    PolynomialParseError,
    SectorError,
    StepRangeError,
    WindowTooSmallError,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INFORMATIONAL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

DEFAULT_STEP = 2

USAGE_ERRORS = (
    PolynomialParseError,
    StepRangeError,
    IndexRangeError,
    MinorShapeError,
    WindowTooSmallError,
    LeadingCoefficientError,
    FileNotFoundError,
    ValidationError,
)
# the requested construction does not exist for this input
INFORMATIONAL_ERRORS = (FactorizationInapplicableError, DegeneratePairError)


def exit_code_for(error: Exception) -> int:
    """Exit code of a failed command, by error class"""
    if isinstance(error, USAGE_ERRORS):
        return EXIT_USAGE
    if isinstance(error, INFORMATIONAL_ERRORS):
        return EXIT_INFORMATIONAL
    return EXIT_INTERNAL


@dataclass(frozen=True)
class BatchLine:
    """One polynomial of the input, with its file line when it came from --poly-file"""

    line: Optional[int]
    text: str


@dataclass
class RunConfig:
    """One resolved invocation"""

    command: Command
    m: Optional[int]
    method: Optional[CertificateMethod]
    json: bool
    seed: int
    cap: int
    window: Optional[int]
    pair: Tuple[int, int]
    witness: bool
    settings: Settings

    @property
    def step(self) -> int:
        return self.m if self.m is not None else DEFAULT_STEP


# ============================================================================
# Argument parsing
# ============================================================================

def _pair(text: str) -> Tuple[int, int]:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--pair expects two integers 'i,j', got {text!r}")
    return i, j


def _method(text: str) -> Optional[CertificateMethod]:
    try:
        return CertificateMethod.from_cli_name(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    source = shared.add_mutually_exclusive_group(required=True)
    source.add_argument("--poly", help="Coefficients a_0..a_n, leading first: '1,1,5,2,4,1/2' or a JSON array")
    source.add_argument("--poly-file", dest="poly_file", help="File with one polynomial per line ('#' comments)")
    shared.add_argument("--m", type=int, default=None, help=f"Step M (default {DEFAULT_STEP}; roots: no sector)")
    shared.add_argument("--json", action="store_true", help="Print JSON instead of text")
    shared.add_argument("--seed", type=int, default=None, help="Root oracle seed (HMSECTOR_SEED wins)")
    shared.add_argument("--cap", type=int, default=None, help="Largest minor order searched for witnesses")
    shared.add_argument("--log-level", dest="log_level", default=None, help="DEBUG, INFO, WARNING, ERROR")

    parser = argparse.ArgumentParser(
        prog="hmsector",
        description="Exact sector certificates for real polynomials via generalized Hurwitz matrices.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    certify_parser = commands.add_parser(Command.CERTIFY.value, parents=[shared], help="Certify a zero-free sector")
    certify_parser.add_argument(
        "--method", type=_method, default=None,
        help=f"One of {', '.join(CertificateMethod.cli_names())} (default auto)",
    )
    commands.add_parser(Command.TABLE.value, parents=[shared], help="Generalized Euclidean algorithm table")
    minors_parser = commands.add_parser(Command.MINORS.value, parents=[shared], help="Special minors of H_M")
    minors_parser.add_argument("--witness", action="store_true", help="Also decide total nonnegativity")
    cfrac_parser = commands.add_parser(Command.CFRAC.value, parents=[shared], help="Pair continued fraction")
    cfrac_parser.add_argument("--pair", type=_pair, default=(0, 1), help="Residue pair 'i,j' (default 0,1)")
    factor_parser = commands.add_parser(Command.FACTOR.value, parents=[shared], help="Bidiagonal factorization")
    factor_parser.add_argument("--window", type=int, default=None, help="Verification block size (default n+M+2)")
    commands.add_parser(Command.ROOTS.value, parents=[shared], help="Floating-point root oracle")
    report_parser = commands.add_parser(Command.REPORT.value, parents=[shared], help="Table, minors, certificate and roots")
    report_parser.add_argument("--method", type=_method, default=None, help="Certification method (default auto)")
    return parser


def _config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    return RunConfig(
        command=Command(args.command),
        m=args.m,
        method=getattr(args, "method", None),
        json=args.json,
        seed=resolve_seed(args.seed, settings),
        cap=args.cap if args.cap is not None else settings.MINOR_ORDER_CAP,
        window=getattr(args, "window", None),
        pair=getattr(args, "pair", (0, 1)),
        witness=getattr(args, "witness", False),
        settings=settings,
    )


def _load(args: argparse.Namespace) -> Tuple[List[BatchLine], bool]:
    """Input lines to process and whether the input is a batch"""
    if args.poly is not None:
        return [BatchLine(line=None, text=args.poly)], False
    lines = [BatchLine(line=number, text=text) for number, text in read_polynomial_lines(args.poly_file)]
    return lines, len(lines) > 1


# ============================================================================
# Commands
# ============================================================================

def _roots(f: RationalPolynomial, config: RunConfig) -> RootReport:
    s = config.settings
    return find_roots(
        f,
        tol=s.ROOT_TOL,
        seed=config.seed,
        max_iterations=s.MAX_ITERATIONS,
        attempts=s.ROOT_ATTEMPTS,
        cluster_distance=s.CLUSTER_DISTANCE,
    )


def _oracle(report: RootReport, config: RunConfig, m: Optional[int]) -> OracleOut:
    """Oracle document; clearance only when a step is given, the real-root check only for M = 1"""
    s = config.settings
    clearance = None
    if m is not None:
        clearance = sector_clearance(report, m, slack=s.SECTOR_SLACK, cluster_slack=s.CLUSTER_SLACK)
    aesw = aesw_check(report, tol=s.RESIDUAL_TOL, cluster_tol=s.CLUSTER_SLACK) if m == 1 else None
    return OracleOut.from_report(report, clearance, aesw)


def run_table(f: RationalPolynomial, config: RunConfig) -> Tuple[TableOut, int]:
    table = run_generalized_euclid(f, config.step)
    violations = verify_structure(table)
    code = EXIT_INTERNAL if violations else EXIT_OK
    return TableOut.from_table(table, layout_table(table), violations), code


def run_minors(f: RationalPolynomial, config: RunConfig) -> Tuple[MinorsOut, int]:
    minors = special_minors(f, config.step)
    verdict = tn_verdict(f, config.step, cap=config.cap) if config.witness else None
    code = EXIT_OK
    if verdict is not None and verdict.status != TNStatus.TN_CERTIFIED:
        code = EXIT_INFORMATIONAL
    return MinorsOut.from_minors(minors, verdict), code


def run_cfrac(f: RationalPolynomial, config: RunConfig) -> Tuple[CfracOut, int]:
    i, j = config.pair
    cf = expand_pair_cfrac(f, config.step, i, j)
    return CfracOut.from_cfrac(cf), EXIT_INFORMATIONAL if cf.terminated_early else EXIT_OK


def run_factor(f: RationalPolynomial, config: RunConfig) -> Tuple[FactorOut, int]:
    result = factor_hm(f, config.step)
    window = config.window
    if window is None:
        window = int(f.degree) + config.step + config.settings.VERIFICATION_WINDOW_EXTRA
    verified = verify_factorization(f, config.step, result, window)
    return FactorOut.from_result(result, window, verified), EXIT_OK if verified else EXIT_INTERNAL


def run_roots(f: RationalPolynomial, config: RunConfig) -> Tuple[RootsOut, int]:
    report = _roots(f, config)
    acceptable = report.converged or report.residual <= config.settings.RESIDUAL_TOL
    document = RootsOut(polynomial=PolynomialOut.from_polynomial(f), oracle=_oracle(report, config, config.m))
    return document, EXIT_OK if acceptable else EXIT_INTERNAL


_CERTIFICATE_EXIT = {
    CertificateStatus.CERTIFIED: EXIT_OK,
    CertificateStatus.NOT_APPLICABLE: EXIT_INFORMATIONAL,
    CertificateStatus.UNKNOWN: EXIT_INFORMATIONAL,
    CertificateStatus.REFUTED_BY_ORACLE: EXIT_INTERNAL,
}


def run_certify(f: RationalPolynomial, config: RunConfig) -> Tuple[CertificateOut, int]:
    s = config.settings
    certificate = certify(f, config.step, method=config.method, cap=config.cap)
    report = _roots(f, config)
    certificate = cross_check(certificate, report, slack=s.SECTOR_SLACK, cluster_slack=s.CLUSTER_SLACK)
    oracle = _oracle(report, config, config.step)
    return CertificateOut.from_certificate(certificate, oracle), _CERTIFICATE_EXIT[CertificateStatus(certificate.status)]


def run_report(f: RationalPolynomial, config: RunConfig) -> Tuple[ReportOut, int]:
    """Every section equals the standalone command's document (minors as with --witness)"""
    m = config.step
    n = int(f.degree)
    table = minors = None
    codes = []
    if 2 <= m <= n:
        table, code = run_table(f, config)
        codes.append(code)
        minors, _ = run_minors(f, dataclasses.replace(config, witness=True))
    certificate, code = run_certify(f, config)
    codes.append(code)
    roots, code = run_roots(f, dataclasses.replace(config, m=m))
    codes.append(code)
    document = ReportOut(
        polynomial=PolynomialOut.from_polynomial(f),
        m=m,
        table=table,
        minors=minors,
        certificate=certificate,
        roots=roots,
    )
    return document, max(codes)


_HANDLERS: Dict[Command, Callable[[RationalPolynomial, RunConfig], Tuple[BaseModel, int]]] = {
    Command.CERTIFY: run_certify,
    Command.TABLE: run_table,
    Command.MINORS: run_minors,
    Command.CFRAC: run_cfrac,
    Command.FACTOR: run_factor,
    Command.ROOTS: run_roots,
    Command.REPORT: run_report,
}

_RENDERERS: Dict[Command, Callable] = {
    Command.CERTIFY: render_certificate,
    Command.TABLE: render_table,
    Command.MINORS: render_minors,
    Command.CFRAC: render_cfrac,
    Command.FACTOR: render_factor,
    Command.ROOTS: render_roots,
    Command.REPORT: render_report,
}

_BATCH = TypeAdapter(List[SerializeAsAny[BaseModel]])


def _run_line(item: BatchLine, config: RunConfig) -> Tuple[BaseModel, int]:
    """Document and exit code of one batch line; a failure becomes an ErrorOut"""
    try:
        return _HANDLERS[config.command](parse_polynomial(item.text), config)
    except Exception as e:
        code = exit_code_for(e)
        if code == EXIT_INTERNAL:
            logger.error(f"{config.command.value} failed on line {item.line}: {e}", exc_info=True)
        else:
            logger.warning(f"{config.command.value} on line {item.line}: {e}")
        error = ErrorOut(line=item.line, input=item.text, error=str(e), error_code=type(e).__name__, exit_code=code)
        return error, code


def run(config: RunConfig, lines: Sequence[BatchLine], batch: bool) -> int:
    """
    Run one command over the input lines and print the output.

    Lines of a batch run in file order and each yields a document or an error entry;
    the exit code is the largest per line. A single input raises its error instead.
    """
    documents: List[BaseModel] = []
    codes: List[int] = []
    for item in lines:
        if batch:
            document, code = _run_line(item, config)
        else:
            document, code = _HANDLERS[config.command](parse_polynomial(item.text), config)
        documents.append(document)
        codes.append(code)

    if config.json:
        if batch:
            print(_BATCH.dump_json(documents, indent=2).decode())
        else:
            print(documents[0].model_dump_json(indent=2))
    else:
        render = _RENDERERS[config.command]
        print("\n\n".join(
            render_error(document) if isinstance(document, ErrorOut) else render(document)
            for document in documents
        ))
    return max(codes)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid {ENV_PREFIX}* setting: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(log_level=args.log_level or settings.LOG_LEVEL, log_file=settings.LOG_FILE)

    try:
        config = _config(args, settings)
        lines, batch = _load(args)
        return run(config, lines, batch)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except INFORMATIONAL_ERRORS as e:
        print(f"{args.command}: {e}", file=sys.stderr)
        return EXIT_INFORMATIONAL
    except SectorError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        return EXIT_INTERNAL
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
