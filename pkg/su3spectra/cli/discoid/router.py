import logging
from pathlib import Path
from typing import Annotated, Optional

import typer

from su3spectra.middleware.error_handling import handle_errors
from su3spectra.middleware.logging import log_command
from su3spectra.utils.serialization import write_output
from .services import render_csv, sample_discoid as sample_grid

logger = logging.getLogger(__name__)


@log_command
@handle_errors
def sample_discoid(
    grid: Annotated[int, typer.Option("--grid", help="Points per angle, N >= 2")] = 64,
    out: Annotated[Optional[Path], typer.Option(help="CSV file; stdout when omitted")] = None,
):
    """Sample z = Phi(theta) and |J| on an N x N grid of angles, for plotting the discoid."""
    samples = sample_grid(grid)
    logger.info("Sampled %d grid points", len(samples))
    write_output(render_csv(samples), out)
