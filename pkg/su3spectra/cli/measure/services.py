import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from pydantic import ValidationError

from su3spectra.core.exceptions import InvalidParameterError
from su3spectra.core.spectral import nimrep, subgroups
from su3spectra.core.spectral.measures import AtomicMeasure, from_records, to_records
from su3spectra.core.spectral.registry import SubjectRouter
from su3spectra.core.spectral.theorems import CORRECTED, PRINTED
from su3spectra.utils.serialization import dump_csv, dump_json, load_json
from .schemas import CSV_HEADER, AtomRecord, MeasureExport

logger = logging.getLogger(__name__)

FORMS = (PRINTED, CORRECTED)


def _family_subject(family: str, params: Dict[str, str]) -> str:
    values = [v for v in params.values() if v is not None]
    return f"{family}({','.join(values)})" if values else family


def resolve_measure(
    subject_router: SubjectRouter,
    graph: Optional[str] = None,
    group: Optional[str] = None,
    family: Optional[str] = None,
    params: Optional[Dict[str, str]] = None,
    theorem: bool = False,
    form: str = PRINTED,
) -> Tuple[str, AtomicMeasure]:
    """The measure one of --graph, --group or --family points at, with its subject id."""
    chosen = [name for name, value in (("graph", graph), ("group", group), ("family", family)) if value]
    if len(chosen) != 1:
        raise InvalidParameterError("Give exactly one of --graph, --group, --family or --parse")
    if theorem and form not in FORMS:
        raise InvalidParameterError(f"--form must be one of {', '.join(FORMS)}, got {form}")
    params = params or {}

    if graph:
        subject = nimrep.canonical_graph_id(graph)
        if theorem:
            return f"{subject}:{form}", nimrep.theorem_measure(subject, form)
        return subject, nimrep.eigen_measure(nimrep.graph_spectrum(subject))

    if group:
        letter, group_params = subgroups.parse_group_id(group)
        subject = subgroups.group_id(letter, group_params)
        if theorem:
            return f"{subject}:{form}", subgroups.theorem_group_measure(letter, form, **group_params)
        return subject, subgroups.char_measure(subgroups.group_classes(letter, **group_params))

    if theorem:
        raise InvalidParameterError("--theorem applies to --graph and --group only")
    return _family_subject(family, params), subject_router.build_measure(family, **params)


def build_export(subject: str, measure: AtomicMeasure) -> MeasureExport:
    return MeasureExport(
        subject=subject,
        support_size=len(measure),
        total_mass=measure.total_mass,
        atoms=[AtomRecord(**record) for record in to_records(measure)],
    )


def render(export: MeasureExport, fmt: str) -> bytes | str:
    if fmt == "json":
        return dump_json(export.model_dump())
    if fmt == "csv":
        rows = ((a.theta1, a.theta2, a.weight, a.z[0], a.z[1]) for a in export.atoms)
        return dump_csv(CSV_HEADER, rows)
    raise InvalidParameterError(f"--format must be json or csv, got {fmt}")


def parse_export(path: Path) -> Tuple[str, AtomicMeasure]:
    """Rebuild the measure held in a JSON file written by the measure command."""
    try:
        export = MeasureExport.model_validate(load_json(path))
    except ValidationError as e:
        raise InvalidParameterError(f"{path} is not a measure export: {e.error_count()} errors") from e
    measure = from_records([atom.model_dump() for atom in export.atoms])
    if len(measure) != export.support_size:
        raise InvalidParameterError(
            f"{path} declares {export.support_size} atoms but holds {len(measure)}"
        )
    logger.info("Parsed %s with %d atoms from %s", export.subject, len(measure), path)
    return export.subject, measure
