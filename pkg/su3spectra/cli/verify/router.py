import logging
from pathlib import Path
from typing import Annotated, List, Optional

import typer
from rich.console import Console
from rich.table import Table

from su3spectra.core.spectral.schemas import VerificationReport
from su3spectra.middleware.error_handling import handle_errors
from su3spectra.middleware.logging import log_command
from .services import VerifyTask, all_tasks, persist_reports, run_task, run_tasks, summarize

router = typer.Typer(help="Verify theorems by comparing measure moments.", no_args_is_help=True)
logger = logging.getLogger(__name__)
console = Console()

MaxMoment = Annotated[
    Optional[int], typer.Option("--max-moment", min=0, help="Compare moments with m, n up to M")
]
Tol = Annotated[Optional[float], typer.Option("--tol", min=0.0, help="Pass threshold on |delta|")]
Normalize = Annotated[
    bool, typer.Option("--normalize", help="Rescale theorem measures to unit mass first")
]
NoPersist = Annotated[bool, typer.Option("--no-persist", help="Do not write JSON reports")]
OutDir = Annotated[
    Optional[Path], typer.Option("--out-dir", help="Report directory (default OUTPUT_DIR)")
]


def _finish(reports: List[VerificationReport], no_persist: bool, out_dir: Optional[Path]):
    table = Table(title="Verification")
    table.add_column("kind")
    table.add_column("subject", style="bold")
    table.add_column("form")
    table.add_column("scale", justify="right")
    table.add_column("max delta", justify="right")
    table.add_column("result")
    for r in reports:
        table.add_row(
            r.kind,
            r.subject,
            r.form or "-",
            f"{r.scale:.6g}",
            f"{r.max_delta:.3e}",
            "[green]pass[/green]" if r.passed else "[red]FAIL[/red]",
        )
    console.print(table)

    run_dir = None if no_persist else persist_reports(reports, out_dir)
    summary = summarize(reports, run_dir)
    console.print(f"{summary.passed}/{summary.total} passed")
    for subject in summary.corrected:
        console.print(f"[yellow]corrected form used[/yellow] {subject}")
    if run_dir is not None:
        console.print(f"reports written to {run_dir}")
    if not summary.all_passed:
        raise typer.Exit(code=1)


@router.command("graph")
@log_command
@handle_errors
def verify_graph(
    graph_id: Annotated[str, typer.Argument(help="E8, E1_12, ..., Dstar(n) or A(n)")],
    max_moment: MaxMoment = None,
    tol: Tol = None,
    normalize: Normalize = False,
    no_persist: NoPersist = False,
    out_dir: OutDir = None,
):
    """Verify the spectral measure theorem of one graph."""
    _finish(
        run_task(VerifyTask("graph", graph_id, max_moment, tol, normalize)), no_persist, out_dir
    )


@router.command("group")
@log_command
@handle_errors
def verify_group(
    group_id: Annotated[str, typer.Argument(help="A(p,q), C(n), D(n) or one of E..L")],
    max_moment: MaxMoment = None,
    tol: Tol = None,
    normalize: Normalize = False,
    no_persist: NoPersist = False,
    out_dir: OutDir = None,
):
    """Verify the spectral measure theorem of one subgroup."""
    _finish(
        run_task(VerifyTask("group", group_id, max_moment, tol, normalize)), no_persist, out_dir
    )


@router.command("oracle")
@log_command
@handle_errors
def verify_oracle(
    n: Annotated[int, typer.Argument(min=4, help="Level of A(n)")],
    max_moment: Annotated[
        Optional[int], typer.Option("--max-moment", min=0, help="Moments with m + n up to M")
    ] = None,
    tol: Tol = None,
    no_persist: NoPersist = False,
    out_dir: OutDir = None,
):
    """Compare A(n) adjacency moments with the J^2 d(n) measure."""
    _finish(run_task(VerifyTask("oracle", f"A({n})", max_moment, tol)), no_persist, out_dir)


@router.command("relations")
@log_command
@handle_errors
def verify_relations(tol: Tol = None, no_persist: NoPersist = False, out_dir: OutDir = None):
    """Check the four identities between the measure families atom by atom."""
    _finish(run_task(VerifyTask("relations", "relations", tol=tol)), no_persist, out_dir)


@router.command("all")
@log_command
@handle_errors
def verify_all(
    max_moment: MaxMoment = None,
    tol: Tol = None,
    normalize: Normalize = False,
    workers: Annotated[
        Optional[int], typer.Option("--workers", min=1, help="Worker processes (default WORKERS)")
    ] = None,
    no_persist: NoPersist = False,
    out_dir: OutDir = None,
):
    """Run the full sweep: relations, graphs, A(n) oracles and subgroups."""
    tasks = all_tasks(max_moment, tol, normalize)
    logger.info("Queued %d verification tasks", len(tasks))
    _finish(run_tasks(tasks, workers), no_persist, out_dir)
