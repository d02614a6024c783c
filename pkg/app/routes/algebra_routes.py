from pathlib import Path
from typing import Optional

import typer

from ..models import Expectation
from ..services.commands import BuildMu0Command, BuildMu0Handler, BuildTPCommand, BuildTPHandler
from ..services.queries import VerifyAlgebraQuery, VerifyAlgebraQueryHandler
from ..shared.responses import fail, handle_errors, respond
from ..utils.errors import ErrorHandler
from ..utils.rationals import parse_rational_list
from ..utils.serialization import parse_algebra


# =================================================================================================================
#                                            ALGEBRA ROUTES
# =================================================================================================================
algebra_router = typer.Typer()


# ==========================
# BUILD MU0
# ==========================
@algebra_router.command("mu0")
@handle_errors
def build_mu0(
    dim: int = typer.Option(..., "--dim", help="Dimension n of mu_0^n"),
):
    """Emit the null-filiform algebra mu_0^n (zero bracket)."""
    handler = BuildMu0Handler()
    respond(handler.handle(BuildMu0Command(dim=dim)))


# ==========================
# BUILD TP
# ==========================
@algebra_router.command("tp")
@handle_errors
def build_tp(
    dim: int = typer.Option(..., "--dim", help="Dimension n"),
    alpha: str = typer.Option(..., "--alpha", help="alpha_2,...,alpha_n as a comma list of rationals"),
):
    """Emit mu_0^n together with the bracket TP(alpha)."""
    command = BuildTPCommand(dim=dim, alpha=tuple(parse_rational_list(alpha, "--alpha")))
    handler = BuildTPHandler()
    respond(handler.handle(command))


# ==========================
# VERIFY
# ==========================
def _read_input(path: Path) -> str:
    try:
        if str(path) == "-":
            return typer.get_text_stream("stdin").read()
        return path.read_text(encoding="utf-8")
    except OSError as error:
        raise ErrorHandler.validation_error(f"Cannot read input file: {error.strerror}.", location="--input")
    except UnicodeDecodeError as error:
        raise ErrorHandler.validation_error(
            f"Input is not valid UTF-8 (byte {error.start}: {error.reason}).", location="--input"
        )


@algebra_router.command("verify")
@handle_errors
def verify(
    input: Path = typer.Option(..., "--input", help="AlgebraDocument JSON file, or - for stdin"),
    expect: Optional[Expectation] = typer.Option(None, "--expect", help="Structure that must hold"),
):
    """Check every identity on a (product, bracket) pair."""
    document = parse_algebra(_read_input(input))
    handler = VerifyAlgebraQueryHandler()
    report = handler.handle(VerifyAlgebraQuery(document=document, expect=expect))
    respond(report)
    if report.passed is False:
        flags = report.checks.model_dump(exclude={"witnesses"})
        fail(ErrorHandler.check_failed(expect.value, [name for name, value in flags.items() if value is False]))
