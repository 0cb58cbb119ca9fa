"""Route the standard logging tree through Rich."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def configure_logging(verbose: int = 0, console: Console | None = None) -> None:
    """
    Install a RichHandler on the root logger.

    verbose 0 shows warnings, 1 adds progress (INFO), 2 or more adds DEBUG.
    Calling it again only changes the level.
    """
    level = _LEVELS.get(verbose, logging.DEBUG)
    root = logging.getLogger()
    root.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        handler = RichHandler(
            console=console or Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s", datefmt="[%X]"))
        root.addHandler(handler)
