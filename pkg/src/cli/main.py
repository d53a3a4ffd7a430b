"""
Command-line front end.

Every command takes --genus (required), --gonality, --format, --nodes and
--out. Documents go to stdout (or --out); logging goes to stderr.
Passing --gonality or --nodes to a command that cannot use them is a
usage error.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error.
"""
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import typer

try:
    # typer >= 0.2x vendors click; its usage errors must come from that copy
    from typer._click import exceptions as click
except ImportError:
    import click

from src.models.context import JacobianContext, build_context
from src.models.elements import KTuple
from src.services.fourier_bridge import fourier_backward, fourier_forward
from src.services.gonality_lab import (
    dimension_table,
    generator_bound,
    hyperelliptic_report,
    trigonal_report,
)
from src.services.identity_suites import run_suite
from src.services.newton_algebra import newton_class
from src.services.pontryagin_basis import curve_class, expand_ktuple
from src.services.theta_calculus import ThetaCalculus
from src.utils.config import get_settings
from src.utils.exceptions import DomainError, ElementParseError
from src.utils.exact_kernel import format_rational
from src.utils.formatters import ElementFormatter

logger = logging.getLogger(__name__)

EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class FourierDirection(str, Enum):
    FORWARD = "fwd"
    BACKWARD = "bwd"


class Suite(str, Enum):
    FOURIER = "fourier"
    CONVOLUTION = "convolution"
    DUAL = "dual"
    POINCARE = "poincare"
    SCALING = "scaling"
    NODES = "nodes"
    ALL = "all"


app = typer.Typer(
    name="tautring",
    help="Exact calculator for the tautological ring of a Jacobian.",
    add_completion=False,
    no_args_is_help=True,
)

GenusOption = typer.Option(..., "--genus", help="Genus g >= 2")
GonalityOption = typer.Option(None, "--gonality", help="Gonality d, 2 <= d <= g+1")
FormatOption = typer.Option(None, "--format", help="json, csv or text")
NodesOption = typer.Option(None, "--nodes", help='Vandermonde node override, e.g. "2,3,4"')
OutOption = typer.Option(None, "--out", help="Write the document to FILE instead of stdout")


@app.callback()
def main() -> None:
    settings = get_settings()
    logging.basicConfig(level=settings.LOG_LEVEL, format=settings.LOG_FORMAT, stream=sys.stderr)


# --- plumbing -------------------------------------------------------------


def _context(genus: int, gonality: Optional[int]) -> JacobianContext:
    settings = get_settings()
    if genus > settings.MAX_GENUS:
        raise DomainError(f"genus {genus} exceeds MAX_GENUS={settings.MAX_GENUS}")
    return build_context(genus, gonality)


def _int_list(text: Optional[str], what: str) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ElementParseError(f"Malformed {what} {text!r}: expected comma-separated integers") from e


def _format(fmt: Optional[OutputFormat]) -> OutputFormat:
    return fmt or OutputFormat(get_settings().DEFAULT_OUTPUT_FORMAT)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(text, nl=not text.endswith("\n"))
    else:
        out.write_text(text)
        logger.info(f"[cli] wrote {out}")


def _run(action: Callable[[], Optional[int]]) -> None:
    try:
        code = action()
    except ElementParseError as e:
        logger.error(f"[cli] parse error: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_PARSE_ERROR)
    except DomainError as e:
        logger.error(f"[cli] domain error: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_DOMAIN_ERROR)
    if code:
        raise typer.Exit(code)


def _reject_unused(command: str, **options) -> None:
    """Options every command accepts but `command` has no use for must be left unset."""
    for name, value in options.items():
        if value is not None:
            raise click.BadOptionUsage(f"--{name}", f"--{name} has no effect on {command}")


def _element_output(x, fmt: OutputFormat) -> str:
    document = ElementFormatter.serialize_element(x)
    if fmt == OutputFormat.CSV:
        return ElementFormatter.element_csv(document)
    if fmt == OutputFormat.TEXT:
        return ElementFormatter.element_text(document)
    return ElementFormatter.to_json(document)


# --- commands -------------------------------------------------------------


@app.command()
def dims(
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Dimension table of surviving Pontryagin monomials per (p, s)."""
    _reject_unused("dims", nodes=nodes)

    def action():
        table = dimension_table(_context(genus, gonality))
        chosen = _format(fmt)
        if chosen == OutputFormat.CSV:
            _emit(ElementFormatter.dimension_csv(table), out)
        elif chosen == OutputFormat.TEXT:
            _emit(ElementFormatter.dimension_text(table), out)
        else:
            _emit(ElementFormatter.to_json(table), out)
    _run(action)


@app.command("theta-power")
def theta_power(
    power: int = typer.Option(..., "--power", help="Exponent j >= 0"),
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """theta^J on the convolution side."""
    def action():
        calculus = ThetaCalculus(_context(genus, gonality), _int_list(nodes, "node set"))
        _emit(_element_output(calculus.theta_power(power), _format(fmt)), out)
    _run(action)


@app.command()
def fourier(
    direction: FourierDirection = typer.Option(..., "--direction", help="fwd (newton -> pontryagin) or bwd"),
    source: Optional[Path] = typer.Option(None, "--in", help="ElementDocument JSON; default C (bwd) or N^1 (fwd)"),
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Fourier transform of an element."""
    _reject_unused("fourier", nodes=nodes)

    def action():
        context = _context(genus, gonality)
        if source is None:
            x = curve_class(context) if direction == FourierDirection.BACKWARD else newton_class(context, 1)
        else:
            try:
                raw = source.read_text()
            except OSError as e:
                raise ElementParseError(f"Cannot read {source}: {e}") from e
            x = ElementFormatter.parse_element(raw, context)

        expected = "pontryagin" if direction == FourierDirection.BACKWARD else "newton"
        actual = ElementFormatter.serialize_element(x).side
        if actual != expected:
            raise DomainError(f"--direction {direction.value} needs a {expected} element, got {actual}")
        y = fourier_backward(x) if direction == FourierDirection.BACKWARD else fourier_forward(x)
        _emit(_element_output(y, _format(fmt)), out)
    _run(action)


@app.command()
def expand(
    ktuple: str = typer.Option(..., "--ktuple", help='Multipliers, e.g. "1,2"'),
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """(k1_* C) * ... * (kr_* C) in the Pontryagin basis."""
    _reject_unused("expand", nodes=nodes)

    def action():
        context = _context(genus, gonality)
        _emit(_element_output(expand_ktuple(context, KTuple(_int_list(ktuple, "ktuple"))), _format(fmt)), out)
    _run(action)


@app.command()
def intersect(
    theta_exponent: int = typer.Option(..., "--theta-exponent", help="m, the power of theta"),
    ktuple: str = typer.Option(..., "--ktuple", help='Multipliers, e.g. "1,2"'),
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Degree of theta^m . (k1_* C) * ... * (kr_* C)."""
    def action():
        context = _context(genus, gonality)
        kt = KTuple(_int_list(ktuple, "ktuple"))
        if theta_exponent < len(kt):
            raise DomainError(
                f"theta^{theta_exponent} against {len(kt)} curve factors is not a 0-cycle; need m >= r"
            )
        calculus = ThetaCalculus(context, _int_list(nodes, "node set"))
        x = expand_ktuple(context, kt)
        for _ in range(theta_exponent):
            x = calculus.theta_mul(x)
        degree = calculus.intersection_number(x)
        _emit(format_rational(degree) + "\n", out)
    _run(action)


@app.command()
def verify(
    suite: Suite = typer.Option(Suite.ALL, "--suite", help="Identity suite to run"),
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Run identity checks; exit 1 if any fails."""
    def action():
        report = run_suite(_context(genus, gonality), suite.value, _int_list(nodes, "node set"))
        chosen = _format(fmt)
        if chosen == OutputFormat.CSV:
            _emit(ElementFormatter.suite_csv(report), out)
        elif chosen == OutputFormat.TEXT:
            _emit(ElementFormatter.suite_text(report), out)
        else:
            _emit(ElementFormatter.to_json(report), out)
        if not report.passed:
            for check in report.failures():
                typer.echo(f"FAILED {check.identity}: {check.detail}", err=True)
            return EXIT_VERIFY_FAILED
        return 0
    _run(action)


def _report_command(build: Callable[[int], object], genus: int, fmt: Optional[OutputFormat], out: Optional[Path]):
    def action():
        _context(genus, None)
        report = build(genus)
        if _format(fmt) == OutputFormat.TEXT:
            _emit(ElementFormatter.report_text(report), out)
        else:
            _emit(ElementFormatter.to_json(report), out)
    _run(action)


@app.command()
def hyperelliptic(
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Presentation report for the gonality-2 model."""
    _reject_unused("hyperelliptic", gonality=None if gonality == 2 else gonality, nodes=nodes)
    _report_command(hyperelliptic_report, genus, fmt, out)


@app.command()
def trigonal(
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Presentation report for the gonality-3 model."""
    _reject_unused("trigonal", gonality=None if gonality == 3 else gonality, nodes=nodes)
    _report_command(trigonal_report, genus, fmt, out)


@app.command()
def bound(
    genus: int = GenusOption,
    gonality: Optional[int] = GonalityOption,
    fmt: Optional[OutputFormat] = FormatOption,
    nodes: Optional[str] = NodesOption,
    out: Optional[Path] = OutOption,
):
    """Number of w-classes that generate the ring."""
    _reject_unused("bound", gonality=gonality, nodes=nodes)

    def action():
        _emit(f"{generator_bound(genus)}\n", out)
    _run(action)


def run(argv: Optional[List[str]] = None) -> int:
    """Invoke the CLI and return its exit code instead of exiting."""
    try:
        app(args=argv, prog_name="tautring")
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0
