import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import List, Optional, Sequence

from su3spectra.core.config import settings
from su3spectra.core.exceptions import InvalidParameterError, SpectraError
from su3spectra.core.spectral import nimrep, subgroups
from su3spectra.core.spectral.schemas import VerificationReport
from su3spectra.core.spectral.theorems import CORRECTED
from su3spectra.core.spectral.verification import verify_relations
from su3spectra.utils.serialization import dump_json
from .schemas import RunSummary

logger = logging.getLogger(__name__)

# Constants
TASK_KINDS = ("relations", "graph", "oracle", "group")
ORACLE_MAX_TOTAL = 8
RUN_DIR_FORMAT = "%Y%m%dT%H%M%S_%f"


@dataclass(frozen=True)
class VerifyTask:
    kind: str
    subject: str
    max_moment: Optional[int] = None
    tol: Optional[float] = None
    normalize: bool = False


def run_task(task: VerifyTask) -> List[VerificationReport]:
    """Verify one subject. Runs inside pool workers, so it only touches pure core modules."""
    if task.kind == "relations":
        return verify_relations(task.tol)
    if task.kind == "graph":
        return [nimrep.verify_graph(task.subject, task.max_moment, task.tol, task.normalize)]
    if task.kind == "oracle":
        family, n = nimrep.parse_graph_id(task.subject)
        if family != "A":
            raise InvalidParameterError(f"The adjacency oracle covers A(n) only, got {task.subject}")
        max_total = ORACLE_MAX_TOTAL if task.max_moment is None else task.max_moment
        return [nimrep.verify_a_oracle(n, max_total=max_total, tol=task.tol)]
    if task.kind == "group":
        family, params = subgroups.parse_group_id(task.subject)
        return [
            subgroups.verify_group(family, params, task.max_moment, task.tol, task.normalize)
        ]
    raise InvalidParameterError(f"Unknown verification kind '{task.kind}'")


def run_task_safely(task: VerifyTask) -> List[VerificationReport]:
    """Like run_task, but an error becomes a failed report instead of aborting the sweep."""
    try:
        return run_task(task)
    except SpectraError as e:
        logger.error("%s %s could not be verified: %s", task.kind, task.subject, e.message)
        return [
            VerificationReport(
                subject=task.subject,
                kind=task.kind,
                max_moment=task.max_moment or 0,
                tol=task.tol or settings.DEFAULT_TOL,
                passed=False,
                notes=[f"{type(e).__name__}: {e.message}"],
            )
        ]


def all_tasks(
    max_moment: Optional[int] = None, tol: Optional[float] = None, normalize: bool = False
) -> List[VerifyTask]:
    """Relations, every default graph, the A(n) oracles and every default group."""
    tasks = [VerifyTask("relations", "relations", tol=tol)]
    tasks += [VerifyTask("graph", g, max_moment, tol, normalize) for g in nimrep.default_graph_ids()]
    tasks += [VerifyTask("oracle", f"A({n})", tol=tol) for n in settings.a_graph_levels]
    tasks += [
        VerifyTask("group", g, max_moment, tol, normalize) for g in subgroups.default_group_ids()
    ]
    return tasks


def run_tasks(tasks: Sequence[VerifyTask], workers: Optional[int] = None) -> List[VerificationReport]:
    workers = settings.WORKERS if workers is None else workers
    if workers <= 1 or len(tasks) <= 1:
        batches = [run_task_safely(task) for task in tasks]
    else:
        logger.info("Verifying %d subjects on %d workers", len(tasks), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(run_task_safely, tasks))
    return [report for batch in batches for report in batch]


def summarize(reports: Sequence[VerificationReport], run_dir: Optional[Path] = None) -> RunSummary:
    return RunSummary(
        total=len(reports),
        passed=sum(r.passed for r in reports),
        failed=[f"{r.kind}:{r.subject}" for r in reports if not r.passed],
        corrected=[f"{r.kind}:{r.subject}" for r in reports if r.passed and r.form == CORRECTED],
        run_dir=str(run_dir) if run_dir else None,
    )


def report_filename(report: VerificationReport) -> str:
    slug = re.sub(r"[^A-Za-z0-9_]+", "_", report.subject).strip("_")
    return f"{report.kind}_{slug}.json"


def persist_reports(
    reports: Sequence[VerificationReport], output_dir: Optional[Path] = None
) -> Path:
    """Write one JSON file per report plus summary.json under a timestamped run directory."""
    output_dir = Path(settings.OUTPUT_DIR if output_dir is None else output_dir)
    run_dir = output_dir / datetime.now().strftime(RUN_DIR_FORMAT)
    try:
        run_dir.mkdir(parents=True, exist_ok=True)
        for report in reports:
            (run_dir / report_filename(report)).write_bytes(
                dump_json(report.model_dump(by_alias=True))
            )
        summary = summarize(reports, run_dir)
        (run_dir / "summary.json").write_bytes(dump_json(summary.model_dump()))
    except OSError as e:
        raise InvalidParameterError(f"Cannot write reports to {run_dir}: {e}") from e
    logger.info("Persisted %d reports to %s", len(reports), run_dir)
    return run_dir
