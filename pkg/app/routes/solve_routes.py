import typer

from ..models import SolveMode
from ..services.commands import SolveBracketSpaceCommand, SolveBracketSpaceHandler
from ..shared.responses import handle_errors, respond


# =================================================================================================================
#                                            SOLVER ROUTES
# =================================================================================================================
solve_router = typer.Typer()


@solve_router.command("solve")
@handle_errors
def solve(
    dim: int = typer.Option(..., "--dim", help="Dimension n of mu_0^n"),
    mode: SolveMode = typer.Option(..., "--mode", help="Identity linking the bracket to the product"),
):
    """Solve for every bracket compatible with mu_0^n; Jacobi is reported as polynomial constraints."""
    handler = SolveBracketSpaceHandler()
    respond(handler.handle(SolveBracketSpaceCommand(dim=dim, mode=mode)))
