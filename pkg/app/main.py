from pathlib import Path
from typing import Optional

import typer

from .routes import algebra_router, classify_router, solve_router
from .shared.config import settings
from .shared.logger import configure_logging
from .shared.responses import OutputState


# Initialize the CLI app
app = typer.Typer(
    name="tpalg",
    help="Exact construction, verification and classification of transposed Poisson structures on mu_0^n.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)


@app.callback()
def root(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug diagnostics on stderr"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON document to FILE"),
):
    """All results are JSON on stdout; diagnostics and errors go to stderr."""
    configure_logging("DEBUG" if verbose else settings.log_level)
    OutputState.output = output


# Include routers
app.add_typer(algebra_router)
app.add_typer(solve_router)
app.add_typer(classify_router)


def run():
    """Console entry point."""
    app()


# Automatically run when executed directly
if __name__ == "__main__":
    run()
