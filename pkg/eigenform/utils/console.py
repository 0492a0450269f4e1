# eigenform/utils/console.py
import logging

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from .config import get_log_level

# Reports go to stdout; everything meant for a human goes here.
console = Console(stderr=True)

_LEVELS = {
    "quiet": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


def configure_logging(explicit: str | None = None) -> str:
    """
    Routes the package loggers through a RichHandler on stderr.

    The level comes from `explicit`, else EIGENFORM_LOG (see get_log_level).
    Returns the resolved level name.
    """
    level = get_log_level(explicit)
    logger = logging.getLogger("eigenform")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = RichHandler(console=console, show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(_LEVELS[level])
    logger.propagate = False
    return level


def print_error(message) -> None:
    console.print(f"\n[bold red]Error:[/bold red] {escape(str(message))}")


def print_cancelled() -> None:
    console.print("\n[bold yellow]Operation cancelled by user.[/bold yellow]")
