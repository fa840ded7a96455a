import logging
from pathlib import Path
from typing import Annotated, Optional

import typer

from su3spectra.core.exceptions import InvalidParameterError
from su3spectra.dependencies import get_subject_router
from su3spectra.middleware.error_handling import handle_errors
from su3spectra.middleware.logging import log_command
from su3spectra.utils.serialization import write_output
from .services import build_export, parse_export, render, resolve_measure

logger = logging.getLogger(__name__)


@log_command
@handle_errors
def measure(
    graph: Annotated[Optional[str], typer.Option(help="Graph id, e.g. E8, Dstar(7), A(5)")] = None,
    group: Annotated[Optional[str], typer.Option(help="Group id, e.g. H, C(4), A(2,3)")] = None,
    family: Annotated[Optional[str], typer.Option(help="Measure family: product, d, dd, dnk")] = None,
    n: Annotated[Optional[str], typer.Option(help="Level n, rational for dd and dnk")] = None,
    k: Annotated[Optional[str], typer.Option(help="Shift k of dnk, as p/q")] = None,
    p: Annotated[Optional[str], typer.Option(help="First root order of product")] = None,
    q: Annotated[Optional[str], typer.Option(help="Second root order of product")] = None,
    theorem: Annotated[
        bool, typer.Option("--theorem", help="Export the theorem measure instead of the reference")
    ] = False,
    form: Annotated[str, typer.Option(help="Theorem form: printed or corrected")] = "printed",
    fmt: Annotated[str, typer.Option("--format", help="json or csv")] = "json",
    out: Annotated[Optional[Path], typer.Option(help="Output file; stdout when omitted")] = None,
    parse: Annotated[
        Optional[Path], typer.Option(help="Re-emit a measure from an earlier JSON export")
    ] = None,
):
    """Export the atoms of a measure with their angles, weights and discoid images."""
    if parse is not None:
        if graph or group or family:
            raise InvalidParameterError("--parse cannot be combined with a subject")
        subject, mu = parse_export(parse)
    else:
        subject, mu = resolve_measure(
            get_subject_router(),
            graph=graph,
            group=group,
            family=family,
            params={"n": n, "k": k, "p": p, "q": q},
            theorem=theorem,
            form=form,
        )

    logger.info("%s: %d atoms, total mass %.12g", subject, len(mu), mu.total_mass)
    write_output(render(build_export(subject, mu), fmt), out)
