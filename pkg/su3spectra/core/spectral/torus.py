"""Geometry of the torus T^2 over the discoid.

Points of T^2 are kept as exact rational angles (in full turns). The map

    Phi(w1, w2) = w1 + w2^-1 + w1^-1 w2

sends T^2 onto the discoid, the deltoid curve together with its interior.
Phi is invariant under the six-element Weyl group generated by T2 and T3,
and the Jacobian J of Phi vanishes exactly on the preimage of the deltoid.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple, Union

import numpy as np

from su3spectra.core.config import settings
from su3spectra.core.exceptions import DomainError, InvalidParameterError

logger = logging.getLogger(__name__)

Rational = Union[Fraction, int, str]
DiscoidPoint = complex
TorusPair = Tuple[complex, complex]

OMEGA = cmath.exp(2j * math.pi / 3)
PI_SQUARED = math.pi**2
_CUBE_ROOT_TWO = 2.0 ** (1.0 / 3.0)


def as_fraction(value: Rational) -> Fraction:
    """Read an exact rational from a Fraction, an int or a "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float)):
        raise InvalidParameterError(
            f"Angle {value!r} must be an exact rational, not {type(value).__name__}"
        )
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"Cannot read {value!r} as a rational") from exc


@dataclass(frozen=True, order=True)
class TorusPoint:
    """The point (e^{2 pi i theta1}, e^{2 pi i theta2}); angles live in [0, 1)."""

    theta1: Fraction
    theta2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "theta1", as_fraction(self.theta1) % 1)
        object.__setattr__(self, "theta2", as_fraction(self.theta2) % 1)

    @property
    def angles(self) -> Tuple[float, float]:
        return float(self.theta1), float(self.theta2)

    @property
    def omegas(self) -> TorusPair:
        t1, t2 = self.angles
        return cmath.exp(2j * math.pi * t1), cmath.exp(2j * math.pi * t2)

    def as_strings(self) -> Tuple[str, str]:
        return str(self.theta1), str(self.theta2)

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(-self.theta1, -self.theta2)

    def __str__(self) -> str:
        return f"({self.theta1}, {self.theta2})"


ORIGIN = TorusPoint(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class WeylElement:
    """An element of S3 acting on angles by an integer 2x2 matrix."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    name: str = field(default="", compare=False)

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, p: TorusPoint) -> TorusPoint:
        (a, b), (c, d) = self.matrix
        return TorusPoint(a * p.theta1 + b * p.theta2, c * p.theta1 + d * p.theta2)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        product = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        names = [n for n in (self.name, other.name) if n != "e"]
        return WeylElement(product, "".join(names) or "e")


IDENTITY = WeylElement(((1, 0), (0, 1)), "e")
T2 = WeylElement(((0, -1), (-1, 0)), "T2")
T3 = WeylElement(((0, -1), (1, -1)), "T3")


def _generate_group(generators: Sequence[WeylElement]) -> Tuple[WeylElement, ...]:
    elements = {IDENTITY.matrix: IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        g = frontier.pop()
        for s in generators:
            h = s @ g
            if h.matrix not in elements:
                elements[h.matrix] = h
                frontier.append(h)
    return tuple(sorted(elements.values(), key=lambda g: (len(g.name), g.name)))


WEYL_GROUP: Tuple[WeylElement, ...] = _generate_group((T2, T3))
ROTATIONS: Tuple[WeylElement, ...] = tuple(g for g in WEYL_GROUP if g.det == 1)


# ----------------------------------------------------------------------------
# Weyl action
# ----------------------------------------------------------------------------


def weyl_apply(g: WeylElement, p: TorusPoint) -> TorusPoint:
    return g.apply(p)


def weyl_orbit(p: TorusPoint) -> FrozenSet[TorusPoint]:
    return frozenset(g.apply(p) for g in WEYL_GROUP)


def rotation_orbit(p: TorusPoint) -> FrozenSet[TorusPoint]:
    """Orbit under the cyclic subgroup generated by T3."""
    return frozenset(g.apply(p) for g in ROTATIONS)


def stabilizer_order(p: TorusPoint) -> int:
    return len(WEYL_GROUP) // len(weyl_orbit(p))


def in_fundamental_domain(p: TorusPoint) -> bool:
    """Closed triangle with vertices (0,0), (2/3,1/3), (1/3,2/3)."""
    t1, t2 = p.theta1, p.theta2
    return t2 / 2 <= t1 <= 2 * t2 and t1 + t2 <= 1


def in_fundamental_interior(p: TorusPoint) -> bool:
    t1, t2 = p.theta1, p.theta2
    return t2 / 2 < t1 < 2 * t2 and t1 + t2 < 1


def canonical_representative(p: TorusPoint) -> TorusPoint:
    orbit = weyl_orbit(p)
    inside = [q for q in orbit if in_fundamental_domain(q)]
    return min(inside) if inside else min(orbit)


# ----------------------------------------------------------------------------
# Phi and the Jacobian
# ----------------------------------------------------------------------------


def phi(p: TorusPoint) -> DiscoidPoint:
    w1, w2 = p.omegas
    return w1 + w2.conjugate() + w1.conjugate() * w2


def phi_of_pair(w1: complex, w2: complex) -> DiscoidPoint:
    return w1 + 1 / w2 + w2 / w1


def phi_values(points: Sequence[TorusPoint]) -> np.ndarray:
    """Vectorized Phi over a sequence of torus points."""
    if not points:
        return np.zeros(0, dtype=complex)
    angles = np.array([p.angles for p in points], dtype=float)
    w1 = np.exp(2j * np.pi * angles[:, 0])
    w2 = np.exp(2j * np.pi * angles[:, 1])
    return w1 + np.conj(w2) + np.conj(w1) * w2


def on_deltoid_preimage(p: TorusPoint) -> bool:
    """True when one of 2t1 - t2, 2t2 - t1, t1 + t2 is an integer."""
    t1, t2 = p.theta1, p.theta2
    return any(x.denominator == 1 for x in (2 * t1 - t2, 2 * t2 - t1, t1 + t2))


def _sin_pi(x: Fraction) -> float:
    return math.sin(math.pi * float(x % 2))


def jacobian_theta(p: TorusPoint) -> float:
    """Signed Jacobian J(theta1, theta2).

    Evaluated in the product form
    -16 pi^2 sin(pi(2t1 - t2)) sin(pi(2t2 - t1)) sin(pi(t1 + t2)),
    which returns an exact zero on the deltoid preimage.
    """
    if on_deltoid_preimage(p):
        return 0.0
    t1, t2 = p.theta1, p.theta2
    return (
        -16.0
        * PI_SQUARED
        * _sin_pi(2 * t1 - t2)
        * _sin_pi(2 * t2 - t1)
        * _sin_pi(t1 + t2)
    )


def discoid_radicand(z: DiscoidPoint) -> float:
    """27 - 18|z|^2 + 4z^3 + 4conj(z)^3 - |z|^4; nonnegative exactly on the discoid."""
    z = complex(z)
    norm = (z * z.conjugate()).real
    return 27.0 - 18.0 * norm + 8.0 * (z**3).real - norm * norm


def in_discoid(z: DiscoidPoint, tol: float = None) -> bool:
    tol = settings.DELTOID_TOL if tol is None else tol
    return discoid_radicand(z) >= -tol


def _checked_radicand(z: DiscoidPoint) -> float:
    radicand = discoid_radicand(z)
    if radicand < -settings.DELTOID_TOL:
        raise DomainError(
            f"Point {z} lies outside the discoid", z=[z.real, z.imag], radicand=radicand
        )
    return max(radicand, 0.0)


def jacobian_abs_z(z: DiscoidPoint) -> float:
    return 2.0 * PI_SQUARED * math.sqrt(_checked_radicand(complex(z)))


# ----------------------------------------------------------------------------
# Inversion of Phi
# ----------------------------------------------------------------------------


def _sector_cube_root(w: complex) -> complex:
    """Cube root of w whose phase lies in [0, 2pi/3)."""
    root = w ** (1.0 / 3.0)
    if cmath.phase(root) < 0:
        root *= OMEGA
    return root


def cubic_roots(z: DiscoidPoint) -> Tuple[complex, complex, complex]:
    """Roots of w^3 - z w^2 + conj(z) w - 1 = 0, the values w^(0), w^(1), w^(2)."""
    z = complex(z)
    radicand = _checked_radicand(z)
    zbar = z.conjugate()
    p_cubed = 27.0 - 9.0 * z * zbar + 2.0 * z**3 + 3.0 * math.sqrt(3.0) * math.sqrt(radicand)
    p = _sector_cube_root(p_cubed) if p_cubed != 0 else 0j
    if abs(p) < 1e-12:
        # triple root at a cusp
        return (z / 3, z / 3, z / 3)
    correction = z * z - 3.0 * zbar
    roots = []
    for k in range(3):
        eps = OMEGA**k
        roots.append(
            (z + eps * p / _CUBE_ROOT_TWO + _CUBE_ROOT_TWO * eps.conjugate() * correction / p)
            / 3.0
        )
    return tuple(roots)


def phi_inverse_kl(z: DiscoidPoint, k: int, l: int) -> TorusPair:
    roots = cubic_roots(z)
    return roots[k], roots[l].conjugate()


def phi_inverse(z: DiscoidPoint) -> List[TorusPair]:
    """The six preimages (w^(k), conj(w^(l))) with k != l, with multiplicity."""
    roots = cubic_roots(z)
    return [
        (roots[k], roots[l].conjugate())
        for k in range(3)
        for l in range(3)
        if k != l
    ]


def pair_to_angles(pair: TorusPair) -> Tuple[float, float]:
    return tuple((cmath.phase(w) / (2 * math.pi)) % 1.0 for w in pair)
