import typer

from ..services.queries import (
    ClassificationTableQuery, ClassificationTableQueryHandler,
    ClassifyQuery, ClassifyQueryHandler,
    IsomorphicQuery, IsomorphicQueryHandler,
)
from ..shared.responses import handle_errors, respond
from ..utils.rationals import parse_rational_list


# =================================================================================================================
#                                            CLASSIFICATION ROUTES
# =================================================================================================================
classify_router = typer.Typer()


# ==========================
# CLASSIFY
# ==========================
@classify_router.command("classify")
@handle_errors
def classify(
    dim: int = typer.Option(..., "--dim"),
    alpha: str = typer.Option(..., "--alpha", help="alpha_2,...,alpha_n"),
):
    """Canonical form, reduction transcript and structure of TP(alpha)."""
    query = ClassifyQuery(dim=dim, alpha=tuple(parse_rational_list(alpha, "--alpha")))
    handler = ClassifyQueryHandler()
    respond(handler.handle(query))


# ==========================
# ISOMORPHIC
# ==========================
@classify_router.command("isomorphic")
@handle_errors
def isomorphic(
    dim: int = typer.Option(..., "--dim"),
    alpha_a: str = typer.Option(..., "--alpha-a"),
    alpha_b: str = typer.Option(..., "--alpha-b"),
):
    """Decide whether TP(alpha_a) and TP(alpha_b) are isomorphic."""
    query = IsomorphicQuery(
        dim=dim,
        alpha_a=tuple(parse_rational_list(alpha_a, "--alpha-a")),
        alpha_b=tuple(parse_rational_list(alpha_b, "--alpha-b")),
    )
    handler = IsomorphicQueryHandler()
    respond(handler.handle(query))


# ==========================
# TABLE
# ==========================
@classify_router.command("table")
@handle_errors
def table(
    dim: int = typer.Option(..., "--dim"),
):
    """List the isomorphism families of TP structures on mu_0^n."""
    handler = ClassificationTableQueryHandler()
    respond(handler.handle(ClassificationTableQuery(dim=dim)))
