import logging
from pathlib import Path
from typing import Dict, Optional

import sympy
import yaml
from pydantic import ValidationError

from su3spectra.core.exceptions import DataFileError, InvalidParameterError
from su3spectra.core.spectral.models import ConjClass, Exponent, GraphSpectrum, GroupSpec
from su3spectra.core.spectral.schemas import GraphFile, GroupFile
from su3spectra.core.spectral.torus import TorusPoint, as_fraction

logger = logging.getLogger(__name__)

WEIGHT_SUM_TOL = 1e-9


class TableLoader:
    """Reads and validates the exponent and character tables shipped as YAML."""

    def __init__(self, config_path: Path):
        self.config_path = config_path
        self._graphs: Optional[Dict[str, GraphSpectrum]] = None
        self._groups: Optional[Dict[str, GroupSpec]] = None

    def _read(self, file_name: str) -> dict:
        file_path = self.config_path / file_name
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                return yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise DataFileError(f"Failed to load {file_path}: {e}", path=str(file_path)) from e

    def load_graphs(self) -> Dict[str, GraphSpectrum]:
        if self._graphs is None:
            try:
                data = GraphFile.model_validate(self._read("graphs.yaml"))
            except ValidationError as e:
                raise DataFileError(f"graphs.yaml is malformed: {e}") from e
            self._graphs = {name: self._graph(name, table) for name, table in data.graphs.items()}
            logger.info("Loaded %d graph tables", len(self._graphs))
        return self._graphs

    def load_groups(self) -> Dict[str, GroupSpec]:
        if self._groups is None:
            try:
                data = GroupFile.model_validate(self._read("groups.yaml"))
            except ValidationError as e:
                raise DataFileError(f"groups.yaml is malformed: {e}") from e
            self._groups = {name: self._group(name, table) for name, table in data.groups.items()}
            logger.info("Loaded %d group tables", len(self._groups))
        return self._groups

    @staticmethod
    def _graph(name: str, table) -> GraphSpectrum:
        exponents = []
        exact_total = sympy.Integer(0)
        for row in table.exponents:
            try:
                expr = sympy.sympify(row.weight, rational=True)
                weight = float(expr)
            except (sympy.SympifyError, TypeError) as e:
                raise DataFileError(
                    f"Weight {row.weight!r} of {name} is not a closed form", graph=name
                ) from e
            exact_total += expr
            exponents.append(Exponent(row.lam[0], row.lam[1], weight, row.weight))

        if abs(float(exact_total) - 1.0) > WEIGHT_SUM_TOL:
            raise DataFileError(
                f"Weights of {name} sum to {sympy.nsimplify(exact_total)}, expected 1",
                graph=name,
            )
        spectrum = GraphSpectrum(
            name=name,
            n=table.n,
            exponents=tuple(exponents),
            description=table.description,
            notes=tuple(table.notes),
        )
        return spectrum.validate(WEIGHT_SUM_TOL)

    @staticmethod
    def _group(name: str, table) -> GroupSpec:
        classes = []
        for row in table.classes:
            try:
                rep = TorusPoint(as_fraction(row.rep[0]), as_fraction(row.rep[1]))
            except InvalidParameterError as e:
                raise DataFileError(f"Class {row.label} of {name}: {e.message}", group=name) from e
            for i in range(row.count):
                label = row.label if row.count == 1 else f"{row.label}_{i + 1}"
                classes.append(ConjClass(row.size, rep, label))

        labels = [c.label for c in classes]
        duplicated = sorted({l for l in labels if labels.count(l) > 1})
        if duplicated:
            raise DataFileError(
                f"Duplicated class labels in {name}: {', '.join(duplicated)}", group=name
            )
        spec = GroupSpec(
            name=name,
            order=table.order,
            classes=tuple(classes),
            family=name,
            notes=tuple(table.notes),
        )
        return spec.check_class_equation().check_character_norm()

    def get_graph(self, name: str) -> Optional[GraphSpectrum]:
        return self.load_graphs().get(name)

    def get_group(self, name: str) -> Optional[GroupSpec]:
        return self.load_groups().get(name)
