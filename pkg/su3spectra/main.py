import logging
from typing import Annotated, Optional

import typer

from su3spectra.cli.dims import router as dims
from su3spectra.cli.discoid import router as discoid
from su3spectra.cli.listing import router as listing
from su3spectra.cli.measure import router as measure
from su3spectra.cli.verify import router as verify
from su3spectra.core.config import settings
from su3spectra.core.logging import setup_logging

logger = logging.getLogger("su3spectra.main")

app = typer.Typer(
    name="su3spectra",
    help=f"{settings.APP_NAME}: nimrep graphs, SU(3) subgroups and their spectral measures.",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)


@app.callback()
def main(
    log_level: Annotated[
        Optional[str], typer.Option("--log-level", help="Override LOG_LEVEL for this run")
    ] = None,
):
    # Configure logging first
    setup_logging(log_level)
    logger.debug("%s %s", settings.APP_NAME, settings.APP_VERSION)


# Commands
app.command("list")(listing.list_subjects)
app.command("measure")(measure.measure)
app.add_typer(verify.router, name="verify")
app.command("dims")(dims.dims)
app.command("sample-discoid")(discoid.sample_discoid)


if __name__ == "__main__":
    app()
