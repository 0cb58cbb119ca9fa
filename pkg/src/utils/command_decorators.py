"""
Command decorators for standardized error handling.

Usage:
    @inject
    @handle_service_errors
    def _simulate_impl(...):
        ...
"""

import logging
import sys
from functools import wraps
from typing import Callable, Any

import typer
from rich.console import Console

from src.errors import NoMinimum

console = Console()
logger = logging.getLogger(__name__)


def _is_interactive_mode() -> bool:
    """
    Check if running in interactive REPL mode.

    Returns:
        True if in REPL mode, False otherwise
    """
    return 'click_repl' in sys.modules


def _fail(message: str) -> None:
    console.print(f"[bold red]Error:[/bold red] {message}")
    if not _is_interactive_mode():
        raise typer.Exit(1)


def handle_service_errors(func: Callable) -> Callable:
    """
    Handle errors from the service layer (physics, config, I/O).

    Format validation errors are caught by Typer callbacks at parameter level.
    This decorator catches:
    - NoMinimum: reported as a warning, not a failure
    - ValueError: config and simulation errors (SimulationError derives from it)
    - OSError: config or output files that cannot be read or written

    In interactive REPL mode, errors are displayed but don't exit the session.
    In CLI mode, errors cause the program to exit with code 1.

    Args:
        func: The command implementation function to wrap

    Returns:
        Wrapped function with error handling
    """
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except NoMinimum as e:
            console.print(f"[yellow]{e}[/yellow]")
            return None
        except ValueError as e:
            logger.debug("command failed", exc_info=True)
            _fail(str(e))
            return None
        except OSError as e:
            logger.debug("command failed", exc_info=True)
            _fail(f"{e.strerror or e}: {e.filename}" if e.filename else str(e))
            return None
    return wrapper
