import logging
from typing import Annotated

import typer
from rich.console import Console
from rich.table import Table

from su3spectra.dependencies import get_subject_router
from su3spectra.middleware.error_handling import handle_errors
from su3spectra.middleware.logging import log_command
from su3spectra.utils.serialization import dump_json
from .services import list_subjects as collect_subjects

logger = logging.getLogger(__name__)
console = Console()


@log_command
@handle_errors
def list_subjects(
    kind: Annotated[str, typer.Argument(help="graphs, groups or measures")],
    as_json: Annotated[bool, typer.Option("--json", help="Print JSON instead of a table")] = False,
):
    """List the registered graphs, groups or measure families."""
    listing = collect_subjects(kind, get_subject_router())

    if as_json:
        typer.echo(dump_json([entry.model_dump() for entry in listing]).decode())
        return

    table = Table(title=f"Registered {kind}")
    table.add_column("name", style="bold")
    table.add_column("params")
    table.add_column("description")
    for entry in listing:
        table.add_row(entry.name, ", ".join(entry.params) or "-", entry.description)
    console.print(table)
