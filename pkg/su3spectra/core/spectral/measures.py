"""Signed atomic measures on T^2 and their moments.

Every measure used by the package (the orbit families, lattice measures,
Dirac combs, spectral measures of graphs and groups) is an AtomicMeasure:
a canonical list of (TorusPoint, weight) atoms sorted by angle.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from su3spectra.core.config import settings
from su3spectra.core.exceptions import DomainError, InvalidParameterError
from su3spectra.core.spectral.torus import (
    WEYL_GROUP,
    Rational,
    TorusPoint,
    as_fraction,
    jacobian_theta,
    phi_values,
    weyl_orbit,
)

logger = logging.getLogger(__name__)

PI_FOURTH = math.pi**4


@dataclass(frozen=True)
class Atom:
    point: TorusPoint
    weight: float


class AtomicMeasure:
    """Finite signed measure; atoms are merged per point and kept sorted."""

    __slots__ = ("_atoms",)

    def __init__(self, atoms: Iterable[Atom] = ()):
        merged: Dict[TorusPoint, float] = {}
        for atom in atoms:
            merged[atom.point] = merged.get(atom.point, 0.0) + float(atom.weight)

        canonical = []
        for point in sorted(merged):
            weight = merged[point]
            if not math.isfinite(weight) or abs(weight) >= settings.MAX_ATOM_WEIGHT:
                raise DomainError(
                    f"Atom weight {weight!r} at {point} is out of range",
                    point=point.as_strings(),
                )
            if abs(weight) >= settings.ZERO_WEIGHT_TOL:
                canonical.append(Atom(point, weight))
        self._atoms: Tuple[Atom, ...] = tuple(canonical)

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return self._atoms

    @property
    def points(self) -> List[TorusPoint]:
        return [a.point for a in self._atoms]

    @property
    def weights(self) -> np.ndarray:
        return np.array([a.weight for a in self._atoms], dtype=float)

    @property
    def total_mass(self) -> float:
        return math.fsum(a.weight for a in self._atoms)

    def weight_of(self, point: TorusPoint) -> float:
        for atom in self._atoms:
            if atom.point == point:
                return atom.weight
        return 0.0

    def scaled(self, factor: float) -> "AtomicMeasure":
        return AtomicMeasure(Atom(a.point, factor * a.weight) for a in self._atoms)

    def __add__(self, other: "AtomicMeasure") -> "AtomicMeasure":
        return AtomicMeasure(self._atoms + other._atoms)

    def __sub__(self, other: "AtomicMeasure") -> "AtomicMeasure":
        return self + other.scaled(-1.0)

    def __mul__(self, factor: float) -> "AtomicMeasure":
        return self.scaled(float(factor))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self._atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self._atoms)

    def __repr__(self) -> str:
        return f"AtomicMeasure(atoms={len(self._atoms)}, mass={self.total_mass:.12g})"


# ----------------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------------


def uniform(points: Iterable[TorusPoint]) -> AtomicMeasure:
    """Uniform probability measure on the distinct points given."""
    distinct = set(points)
    if not distinct:
        return AtomicMeasure()
    weight = 1.0 / len(distinct)
    return AtomicMeasure(Atom(p, weight) for p in distinct)


def _orbit_union(seeds: Iterable[TorusPoint]) -> AtomicMeasure:
    support = set()
    for seed in seeds:
        support |= weyl_orbit(seed)
    return uniform(support)


def uniform_roots_product(P: int, Q: int) -> AtomicMeasure:
    """Uniform measure on (P-th roots of unity) x (Q-th roots of unity)."""
    if P < 1 or Q < 1:
        raise InvalidParameterError(f"Root counts must be positive, got ({P}, {Q})")
    return uniform(
        TorusPoint(Fraction(a, P), Fraction(b, Q)) for a in range(P) for b in range(Q)
    )


def d_lattice(n: int) -> List[TorusPoint]:
    """The 3n^2 points (q1/3n, q2/3n) with q1 + q2 divisible by 3."""
    if n < 1:
        raise InvalidParameterError(f"Lattice level must be positive, got {n}")
    return [
        TorusPoint(Fraction(q1, 3 * n), Fraction(q2, 3 * n))
        for q1 in range(3 * n)
        for q2 in range(3 * n)
        if (q1 + q2) % 3 == 0
    ]


def d_measure(n: int) -> AtomicMeasure:
    return uniform(d_lattice(n))


def dd_measure(n: Rational) -> AtomicMeasure:
    """Uniform measure on the orbits of (t,t), (2/3-t, 1/3), (1/3, 2/3-t), t = 1/n."""
    n = as_fraction(n)
    if n < 2:
        raise InvalidParameterError(f"dd measure needs n >= 2, got {n}")
    t = 1 / n
    third = Fraction(1, 3)
    return _orbit_union(
        [
            TorusPoint(t, t),
            TorusPoint(2 * third - t, third),
            TorusPoint(third, 2 * third - t),
        ]
    )


def dnk_measure(n: Rational, k: Rational) -> AtomicMeasure:
    """Uniform measure on the orbits of the six seeds shifted by k, t = 1/n."""
    n, k = as_fraction(n), as_fraction(k)
    if n <= 2:
        raise InvalidParameterError(f"dnk measure needs n > 2, got {n}")
    t = 1 / n
    if not 0 <= k <= t:
        raise InvalidParameterError(f"dnk measure needs 0 <= k <= 1/n, got k={k}, n={n}")
    third = Fraction(1, 3)
    return _orbit_union(
        [
            TorusPoint(t + k, t),
            TorusPoint(t, t + k),
            TorusPoint(2 * third - t, third + k),
            TorusPoint(third + k, 2 * third - t),
            TorusPoint(2 * third - t - k, third - k),
            TorusPoint(third - k, 2 * third - t - k),
        ]
    )


def dirac(p: TorusPoint) -> AtomicMeasure:
    return AtomicMeasure([Atom(p, 1.0)])


def dirac_comb(points: Iterable[TorusPoint]) -> AtomicMeasure:
    """Unit mass at every listed point, repeated points accumulating."""
    return AtomicMeasure(Atom(p, 1.0) for p in points)


def combine(terms: Iterable[Tuple[float, AtomicMeasure]]) -> AtomicMeasure:
    atoms: List[Atom] = []
    for coefficient, measure in terms:
        c = float(coefficient)
        atoms.extend(Atom(a.point, c * a.weight) for a in measure)
    return AtomicMeasure(atoms)


def j2_weight(p: TorusPoint) -> float:
    """J(p)^2 / pi^4."""
    return jacobian_theta(p) ** 2 / PI_FOURTH


def j2_reweight(mu: AtomicMeasure) -> AtomicMeasure:
    """Multiply every weight by J^2/pi^4; deltoid atoms vanish."""
    return AtomicMeasure(Atom(a.point, a.weight * j2_weight(a.point)) for a in mu)


def symmetrize(mu: AtomicMeasure) -> AtomicMeasure:
    share = 1.0 / len(WEYL_GROUP)
    return AtomicMeasure(
        Atom(g.apply(a.point), share * a.weight) for a in mu for g in WEYL_GROUP
    )


def orbit_measure(p: TorusPoint) -> AtomicMeasure:
    return symmetrize(dirac(p))


# ----------------------------------------------------------------------------
# Moments and summaries
# ----------------------------------------------------------------------------


def moment(mu: AtomicMeasure, m: int, n: int) -> complex:
    """Integral of Phi^m conj(Phi)^n against mu."""
    if m < 0 or n < 0:
        raise InvalidParameterError(f"Moment orders must be nonnegative, got ({m}, {n})")
    if not len(mu):
        return 0j
    z = phi_values(mu.points)
    return complex(np.sum(mu.weights * z**m * np.conj(z) ** n))


def moment_matrix(mu: AtomicMeasure, max_moment: int) -> np.ndarray:
    """All moments 0 <= m, n <= max_moment as a complex matrix indexed [m, n]."""
    size = max_moment + 1
    if not len(mu):
        return np.zeros((size, size), dtype=complex)
    z = phi_values(mu.points)
    powers = np.vander(z, size, increasing=True).T
    return np.einsum("a,ma,na->mn", mu.weights, powers, np.conj(powers))


def total_mass(mu: AtomicMeasure) -> float:
    return mu.total_mass


def is_positive(mu: AtomicMeasure, tol: float = None) -> bool:
    tol = settings.POSITIVITY_TOL if tol is None else tol
    return all(a.weight >= tol for a in mu)


def support_size(mu: AtomicMeasure) -> int:
    return len(mu)


def max_weight_delta(first: AtomicMeasure, second: AtomicMeasure) -> float:
    """Largest pointwise weight difference over the union of both supports."""
    weights: Dict[TorusPoint, float] = {a.point: a.weight for a in first}
    for atom in second:
        weights[atom.point] = weights.get(atom.point, 0.0) - atom.weight
    return max((abs(w) for w in weights.values()), default=0.0)


def same_measure(first: AtomicMeasure, second: AtomicMeasure, tol: float = None) -> bool:
    tol = settings.RELATION_TOL if tol is None else tol
    return max_weight_delta(first, second) < tol


def is_weyl_invariant(mu: AtomicMeasure, tol: float = None) -> bool:
    return same_measure(mu, symmetrize(mu), tol)


def pushforward(mu: AtomicMeasure, decimals: int = 9) -> List[Tuple[complex, float]]:
    """The image measure on the discoid, atoms keyed by rounded Phi values."""
    buckets: Dict[Tuple[float, float], float] = {}
    for atom, z in zip(mu, phi_values(mu.points)):
        key = (round(z.real, decimals) + 0.0, round(z.imag, decimals) + 0.0)
        buckets[key] = buckets.get(key, 0.0) + atom.weight
    return [
        (complex(re, im), weight)
        for (re, im), weight in sorted(buckets.items())
        if abs(weight) >= settings.ZERO_WEIGHT_TOL
    ]


# ----------------------------------------------------------------------------
# Records
# ----------------------------------------------------------------------------

RECORD_FIELDS = ("theta1", "theta2", "weight", "z")


def to_records(mu: AtomicMeasure) -> List[Dict[str, Union[str, float, List[float]]]]:
    values = phi_values(mu.points)
    records = []
    for atom, z in zip(mu, values):
        theta1, theta2 = atom.point.as_strings()
        records.append(
            {
                "theta1": theta1,
                "theta2": theta2,
                "weight": atom.weight,
                "z": [float(z.real), float(z.imag)],
            }
        )
    return records


def from_records(records: Sequence[Dict]) -> AtomicMeasure:
    try:
        return AtomicMeasure(
            Atom(TorusPoint(as_fraction(r["theta1"]), as_fraction(r["theta2"])), float(r["weight"]))
            for r in records
        )
    except KeyError as exc:
        raise InvalidParameterError(f"Atom record is missing field {exc}") from exc
