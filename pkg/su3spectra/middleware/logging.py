# su3spectra/middleware/logging.py
import functools
import logging
import time

import typer

logger = logging.getLogger("su3spectra.middleware.logging")


def log_command(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        name = command.__name__.replace("_", "-")
        start = time.time()
        exit_code = 0
        logger.info(f"→ {name} started")
        try:
            return command(*args, **kwargs)
        except typer.Exit as exc:
            exit_code = exc.exit_code
            raise
        except Exception:
            exit_code = 1
            raise
        finally:
            elapsed = (time.time() - start) * 1000
            logger.info(f"← {name} completed in {elapsed:.2f}ms exit_code={exit_code}")

    return wrapper
