import logging
import sys
from logging import Formatter, StreamHandler

import colorama
from colorama import Fore, Style

from su3spectra.core.config import settings

# Context fields that commands attach through ``extra=``
CONTEXT_FIELDS = ("command", "error", "detail", "exit_code")


class ColorFormatter(Formatter):
    """Aligned log lines with a coloured level column and trailing command context."""

    LEVEL_COLORS = {
        "DEBUG": Style.DIM,
        "INFO": Fore.BLUE,
        "WARNING": Fore.YELLOW,
        "ERROR": Fore.RED,
        "CRITICAL": Fore.RED + Style.BRIGHT,
    }

    FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

    def __init__(self, use_color: bool = True):
        super().__init__(self.FORMAT, self.DATE_FORMAT)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        record = logging.makeLogRecord(record.__dict__)
        level = record.levelname.ljust(7)
        if self.use_color:
            level = f"{self.LEVEL_COLORS.get(record.levelname, '')}{level}{Style.RESET_ALL}"
        record.levelname = level

        message = super().format(record)
        context = [
            f"{name}={getattr(record, name)}" for name in CONTEXT_FIELDS if hasattr(record, name)
        ]
        return f"{message} [{' '.join(context)}]" if context else message


def setup_logging(level: str = None):
    """Configure colorized logging for the CLI process.

    Log lines go to stderr so that JSON or CSV written to stdout stays clean.
    """
    colorama.init(autoreset=True)
    handler = StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter(use_color=sys.stderr.isatty()))

    resolved = "DEBUG" if settings.DEBUG else (level or settings.LOG_LEVEL).upper()

    root_logger = logging.getLogger()
    root_logger.handlers = [handler]
    root_logger.setLevel(resolved)

    app_logger = logging.getLogger("su3spectra")
    app_logger.propagate = False
    app_logger.handlers = [handler]
    app_logger.setLevel(resolved)

    # Set higher levels for noisy libraries
    for name in ["matplotlib", "sympy", "numba", "asyncio"]:
        logging.getLogger(name).setLevel(logging.WARNING)
