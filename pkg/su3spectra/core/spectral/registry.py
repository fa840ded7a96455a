import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from su3spectra.core.exceptions import InvalidParameterError, UnknownSubjectError
from su3spectra.core.spectral.loader import TableLoader
from su3spectra.core.spectral.torus import as_fraction
from su3spectra.core.spectral.measures import (
    AtomicMeasure,
    d_measure,
    dd_measure,
    dnk_measure,
    uniform_roots_product,
)

logger = logging.getLogger(__name__)

KINDS = ("graphs", "groups", "measures")


@dataclass(frozen=True)
class Subject:
    name: str
    kind: str
    params: Tuple[str, ...] = ()
    description: str = ""
    builder: Optional[Callable[..., AtomicMeasure]] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "params": list(self.params),
            "description": self.description,
        }


class SubjectRouter:
    """Registry of every graph, group and measure family the CLI can address."""

    def __init__(self, loader: TableLoader):
        self.loader = loader
        self._subjects: Dict[str, Dict[str, Subject]] = {kind: {} for kind in KINDS}
        self._initialize_core_subjects()
        logger.debug(
            "Subject router initialized with %d subjects",
            sum(len(s) for s in self._subjects.values()),
        )

    def _initialize_core_subjects(self):
        """Register the parametric families and the shipped tables"""
        self.register(Subject("Dstar(n)", "graphs", ("n",), "D(n)* for n >= 5"))
        self.register(Subject("A(n)", "graphs", ("n",), "A(n) for n >= 4, with adjacency oracle"))
        for name, spectrum in self.loader.load_graphs().items():
            self.register(Subject(name, "graphs", (), spectrum.description))

        self.register(Subject("A(p,q)", "groups", ("p", "q"), "Z_p x Z_q, diagonal abelian"))
        self.register(Subject("C(n)", "groups", ("n",), "Delta(3n^2) for n >= 2"))
        self.register(Subject("D(n)", "groups", ("n",), "Delta(6n^2) for n >= 2"))
        for name, group in self.loader.load_groups().items():
            self.register(Subject(name, "groups", (), group_description(name, group.order)))

        self.register(
            Subject(
                "product",
                "measures",
                ("p", "q"),
                "uniform on (p-th roots) x (q-th roots)",
                lambda p, q: uniform_roots_product(_integer(p, "p"), _integer(q, "q")),
            )
        )
        self.register(
            Subject(
                "d", "measures", ("n",), "uniform on the lattice D_n", lambda n: d_measure(_integer(n, "n"))
            )
        )
        self.register(
            Subject("dd", "measures", ("n",), "orbits of (t, t), t = 1/n", dd_measure)
        )
        self.register(
            Subject("dnk", "measures", ("n", "k"), "orbits of the six seeds shifted by k", dnk_measure)
        )

    def register(self, subject: Subject):
        """Add or replace a subject of its kind"""
        self._kind(subject.kind)[subject.name] = subject
        logger.debug("Registered %s '%s'", subject.kind, subject.name)

    def _kind(self, kind: str) -> Dict[str, Subject]:
        if kind not in self._subjects:
            raise UnknownSubjectError("kind", kind, list(KINDS))
        return self._subjects[kind]

    def get_subject(self, kind: str, name: str) -> Optional[Subject]:
        subject = self._kind(kind).get(name)
        if not subject:
            logger.warning("No %s registered under '%s'", kind, name)
        return subject

    def available(self, kind: str) -> List[str]:
        return list(self._kind(kind).keys())

    def listing(self, kind: str) -> List[dict]:
        return [s.to_dict() for s in self._kind(kind).values()]

    def build_measure(self, family: str, **params) -> AtomicMeasure:
        subject = self.get_subject("measures", family)
        if subject is None:
            raise UnknownSubjectError("measure family", family, self.available("measures"))
        missing = [p for p in subject.params if params.get(p) is None]
        if missing:
            raise InvalidParameterError(
                f"Measure family {family} needs {', '.join('--' + p for p in missing)}"
            )
        return subject.builder(**{p: params[p] for p in subject.params})


def _integer(value, name: str) -> int:
    value = as_fraction(value)
    if value.denominator != 1:
        raise InvalidParameterError(f"{name} must be an integer, got {value}")
    return int(value)


def group_description(name: str, order: int) -> str:
    return f"exceptional group {name} of order {order}"
