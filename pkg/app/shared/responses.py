import functools
import json
import logging
from pathlib import Path
from typing import Callable, Optional

import typer
from pydantic import BaseModel

from ..utils.errors import AlgebraError, ErrorHandler
from ..utils.serialization import emit

logger = logging.getLogger(__name__)


class OutputState:
    """Process-wide CLI options set by the root callback."""
    output: Optional[Path] = None


def respond(doc: BaseModel) -> str:
    """Write the JSON document to --output when given, otherwise to stdout."""
    text = emit(doc)
    if OutputState.output is not None:
        try:
            OutputState.output.write_text(text + "\n", encoding="utf-8")
        except OSError as error:
            raise ErrorHandler.validation_error(f"Cannot write output file: {error.strerror}.", location="--output")
        logger.info("wrote %s", OutputState.output)
    else:
        typer.echo(text)
    return text


def fail(error: AlgebraError) -> None:
    typer.echo(json.dumps(error.to_payload(), sort_keys=True), err=True)
    raise typer.Exit(code=error.exit_code)


def handle_errors(command: Callable) -> Callable:
    """Turn AlgebraError into the stderr payload and its exit code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except AlgebraError as error:
            logger.debug("%s at %s: %s", error.code, error.location, error.message)
            fail(error)

    return wrapper
