# su3spectra/middleware/error_handling.py
import functools
import logging

import typer

from su3spectra.core.exceptions import SpectraError

logger = logging.getLogger("su3spectra.middleware")


def handle_errors(command):
    """Turn a SpectraError into its exit code; anything unexpected exits 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except typer.Exit:
            raise
        except SpectraError as exc:
            logger.warning(
                "Command rejected",
                extra={
                    "error": type(exc).__name__,
                    "detail": exc.message,
                    "exit_code": exc.exit_code,
                    "command": command.__name__,
                },
            )
            typer.echo(f"Error: {exc.message}", err=True)
            raise typer.Exit(code=exc.exit_code)
        except Exception:
            logger.exception("Unhandled exception", extra={"command": command.__name__})
            typer.echo("Error: an unexpected error occurred", err=True)
            raise typer.Exit(code=1)

    return wrapper
