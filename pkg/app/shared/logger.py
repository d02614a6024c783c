import logging
from typing import Optional
from rich.console import Console
from rich.logging import RichHandler
from .config import settings

# Diagnostics go to stderr; stdout carries JSON only
stderr_console = Console(stderr=True)

_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """Attach a single RichHandler to the package logger."""
    global _configured
    root = logging.getLogger("app")
    root.setLevel((level or settings.log_level).upper())
    if _configured:
        return
    handler = RichHandler(console=stderr_console, show_path=False, rich_tracebacks=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.propagate = False
    _configured = True
