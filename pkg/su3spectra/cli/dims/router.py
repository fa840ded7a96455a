from typing import Annotated

import typer
from rich.console import Console
from rich.table import Table

from su3spectra.core.config import settings
from su3spectra.middleware.error_handling import handle_errors
from su3spectra.middleware.logging import log_command
from su3spectra.utils.serialization import dump_json
from .services import dims_rows

console = Console()


def _cell(value) -> str:
    return "-" if value is None else str(value)


@log_command
@handle_errors
def dims(
    max_k: Annotated[int, typer.Option("--max-k", help="Largest tensor power k")] = settings.MAX_DIM_K,
    oracle: Annotated[bool, typer.Option("--oracle", help="Add the brute-force walk counts")] = False,
    as_json: Annotated[bool, typer.Option("--json", help="Print JSON instead of a table")] = False,
):
    """Dimensions of the T^2- and SU(3)-invariants of the k-th power of M_3."""
    rows = dims_rows(max_k, oracle)

    if as_json:
        typer.echo(dump_json([row.model_dump() for row in rows]).decode())
    else:
        table = Table(title="Invariant dimensions")
        for column in ("k", "dim T^2", "dim SU(3)", "walk oracle", "fusion oracle", "kuperberg"):
            table.add_column(column, justify="right")
        for row in rows:
            table.add_row(
                str(row.k),
                str(row.dim_torus),
                str(row.dim_su3),
                _cell(row.torus_oracle),
                _cell(row.fusion_oracle),
                _cell(row.kuperberg),
                style=None if row.consistent else "red",
            )
        console.print(table)

    if not all(row.consistent for row in rows):
        raise typer.Exit(code=1)
