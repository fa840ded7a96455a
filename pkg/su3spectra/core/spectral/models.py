"""Plain data carried between the loaders, the graph and group modules and the CLI."""
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Tuple

from su3spectra.core.exceptions import DataFileError
from su3spectra.core.spectral.torus import TorusPoint, in_discoid, phi


@dataclass(frozen=True)
class Exponent:
    """An exponent λ = (λ1, λ2) with its vacuum weight |ψ^λ_*|^2."""

    lambda1: int
    lambda2: int
    weight: float
    weight_expr: str = ""

    @property
    def lam(self) -> Tuple[int, int]:
        return self.lambda1, self.lambda2


@dataclass(frozen=True)
class GraphSpectrum:
    name: str
    n: int
    exponents: Tuple[Exponent, ...]
    normalization: float = 1.0
    description: str = ""
    notes: Tuple[str, ...] = ()

    @property
    def total_weight(self) -> float:
        return math.fsum(e.weight for e in self.exponents)

    def normalized(self) -> "GraphSpectrum":
        """Rescale the weights to sum to 1, recording the factor removed."""
        total = self.total_weight
        if total <= 0:
            raise DataFileError(f"Graph {self.name} has no positive weight", graph=self.name)
        if math.isclose(total, 1.0, rel_tol=0.0, abs_tol=1e-12):
            return self
        exponents = tuple(replace(e, weight=e.weight / total) for e in self.exponents)
        return replace(self, exponents=exponents, normalization=self.normalization * total)

    def validate(self, tol: float = 1e-9) -> "GraphSpectrum":
        for e in self.exponents:
            if e.lambda1 < 0 or e.lambda2 < 0 or e.lambda1 + e.lambda2 > self.n - 3:
                raise DataFileError(
                    f"Exponent {e.lam} of {self.name} lies outside the triangle "
                    f"lambda1 + lambda2 <= {self.n - 3}",
                    graph=self.name,
                )
            if e.weight <= 0:
                raise DataFileError(
                    f"Exponent {e.lam} of {self.name} has non-positive weight {e.weight}",
                    graph=self.name,
                )
        if abs(self.total_weight - 1.0) > tol:
            raise DataFileError(
                f"Weights of {self.name} sum to {self.total_weight!r}, expected 1",
                graph=self.name,
            )
        return self


@dataclass(frozen=True)
class ConjClass:
    size: int
    rep: TorusPoint
    label: str = ""


@dataclass(frozen=True)
class GroupSpec:
    """Conjugacy classes of a finite subgroup, each with a torus preimage of its character."""

    name: str
    order: int
    classes: Tuple[ConjClass, ...]
    family: str = ""
    params: Dict[str, int] = field(default_factory=dict, compare=False)
    notes: Tuple[str, ...] = ()

    @property
    def class_total(self) -> int:
        return sum(c.size for c in self.classes)

    def check_class_equation(self) -> "GroupSpec":
        if self.class_total != self.order:
            raise DataFileError(
                f"Class sizes of {self.name} sum to {self.class_total}, order is {self.order}",
                group=self.name,
            )
        identity = [c for c in self.classes if c.size == 1 and abs(phi(c.rep) - 3) < 1e-12]
        if len(identity) != 1:
            raise DataFileError(
                f"{self.name} needs exactly one identity class, found {len(identity)}",
                group=self.name,
            )
        for c in self.classes:
            if c.size < 1 or not in_discoid(phi(c.rep)):
                raise DataFileError(f"Class {c.label} of {self.name} is malformed", group=self.name)
        return self

    def character_norm(self) -> float:
        """<chi, chi> of the fundamental character: sum_j |G_j| |chi_j|^2 / |G|."""
        return sum(c.size * abs(phi(c.rep)) ** 2 for c in self.classes) / self.order

    def check_character_norm(self, tol: float = 1e-9) -> "GroupSpec":
        norm = self.character_norm()
        if round(norm) < 1 or abs(norm - round(norm)) > tol:
            raise DataFileError(
                f"Character norm of {self.name} is {norm:.6g}, not a positive integer",
                group=self.name,
            )
        return self
