"""Exact torus integrals through Laurent-polynomial constant terms.

A Laurent polynomial in w1, w2 is stored as a dict {(a, b): coefficient}
for the monomial w1^a w2^b. Integrating over T^2 against Haar measure keeps
only the constant term, so every integral here is exact integer arithmetic.
"""
import logging
from collections import Counter
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Tuple

from su3spectra.core.config import settings
from su3spectra.core.exceptions import DomainError, InvalidParameterError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int]


class LaurentPoly2:
    """Integer Laurent polynomial in two variables; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] = None):
        self._terms: Dict[Exponent, int] = {
            (int(a), int(b)): int(c) for (a, b), c in (terms or {}).items() if c
        }

    @classmethod
    def monomial(cls, a: int, b: int, coefficient: int = 1) -> "LaurentPoly2":
        return cls({(a, b): coefficient})

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls.monomial(0, 0)

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def constant_term(self) -> int:
        return self.coefficient(0, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def dual_lattice_sum(self, keep: Callable[[int, int], bool]) -> int:
        """Sum of the coefficients whose exponent satisfies keep(a, b)."""
        return sum(c for (a, b), c in self._terms.items() if keep(a, b))

    def evaluate(self, w1: complex, w2: complex) -> complex:
        return sum(c * w1**a * w2**b for (a, b), c in self._terms.items())

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        merged = Counter(self._terms)
        merged.update(other._terms)
        return LaurentPoly2(merged)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({e: other * c for e, c in self._terms.items()})
        product: Dict[Exponent, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                product[key] = product.get(key, 0) + c1 * c2
        return LaurentPoly2(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly2":
        if exponent < 0:
            raise InvalidParameterError("Only nonnegative powers are supported")
        result, base = LaurentPoly2.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly2) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*w1^{a}*w2^{b}" for (a, b), c in sorted(self._terms.items()))
        return f"LaurentPoly2({body or '0'})"


def _poly(pairs: Iterable[Tuple[Exponent, int]]) -> LaurentPoly2:
    return LaurentPoly2(dict(pairs))


# Phi = w1 + w2^-1 + w1^-1 w2 and its conjugate
PHI_STEPS: Tuple[Exponent, ...] = ((1, 0), (0, -1), (-1, 1))
PHI_BAR_STEPS: Tuple[Exponent, ...] = tuple((-a, -b) for a, b in PHI_STEPS)
PHI_POLY = _poly((step, 1) for step in PHI_STEPS)
PHI_BAR_POLY = _poly((step, 1) for step in PHI_BAR_STEPS)

# iJ/2pi^2 as a Laurent polynomial
Q_POLY = _poly(
    [((1, 1), 1), ((-1, -1), -1), ((2, -1), -1), ((-2, 1), 1), ((-1, 2), -1), ((1, -2), 1)]
)

KUPERBERG_SEXTIC = _poly(
    [((-1, 2), 1), ((1, 1), -1), ((2, -1), 1), ((1, -2), -1), ((-1, -1), 1), ((-2, 1), -1)]
)
KUPERBERG_MONOMIAL: Exponent = (-1, 2)


def r_poly(m: int, n: int) -> LaurentPoly2:
    """R_{m,n} = Phi^m conj(Phi)^n as a Laurent polynomial."""
    if m < 0 or n < 0:
        raise InvalidParameterError(f"R_(m,n) needs m, n >= 0, got ({m}, {n})")
    return _r_poly_cached(m, n)


@lru_cache(maxsize=128)
def _r_poly_cached(m: int, n: int) -> LaurentPoly2:
    return PHI_POLY**m * PHI_BAR_POLY**n


def q_poly() -> LaurentPoly2:
    return Q_POLY


def j2_poly() -> LaurentPoly2:
    """J^2/pi^4 = -4 q^2."""
    return -4 * (Q_POLY * Q_POLY)


# ----------------------------------------------------------------------------
# Invariant dimensions
# ----------------------------------------------------------------------------


def dim_torus_invariants(k: int) -> int:
    """Dimension of the T^2-invariants of the k-th tensor power of M_3."""
    return r_poly(k, k).constant_term()


def dim_su3_invariants(k: int) -> int:
    """Dimension of the SU(3)-invariants: the Weyl integral of R_{k,k} J^2 / 24 pi^4."""
    raw = -(r_poly(k, k) * Q_POLY * Q_POLY).constant_term()
    quotient, remainder = divmod(raw, 6)
    if remainder:
        raise DomainError(f"Invariant count {raw} for k={k} is not divisible by 6", k=k)
    return quotient


def _check_oracle_range(k: int):
    if not 0 <= k <= settings.ORACLE_MAX_K:
        raise InvalidParameterError(
            f"Oracle depth must lie in [0, {settings.ORACLE_MAX_K}], got {k}"
        )


def _walk(counts: Counter, steps: Iterable[Exponent]) -> Counter:
    moved: Counter = Counter()
    steps = tuple(steps)
    for (x, y), c in counts.items():
        for dx, dy in steps:
            moved[(x + dx, y + dy)] += c
    return moved


def lattice_walk_oracle(k: int) -> int:
    """Closed walks of k Phi-steps followed by k conjugate steps."""
    _check_oracle_range(k)
    counts = Counter({(0, 0): 1})
    for _ in range(k):
        counts = _walk(counts, PHI_STEPS)
    return sum(c * c for c in counts.values())


# weights of the fundamental representation and its conjugate in Dynkin labels
RHO_WEIGHTS: Tuple[Exponent, ...] = ((1, 0), (-1, 1), (0, -1))
RHO_BAR_WEIGHTS: Tuple[Exponent, ...] = ((0, 1), (1, -1), (-1, 0))


def _fuse(counts: Counter, weights: Iterable[Exponent]) -> Counter:
    fused: Counter = Counter()
    weights = tuple(weights)
    for (a, b), c in counts.items():
        for da, db in weights:
            if a + da >= 0 and b + db >= 0:
                fused[(a + da, b + db)] += c
    return fused


def fusion_walk_oracle(k: int) -> int:
    """Multiplicity of the trivial representation in V^(x)k (x) conj(V)^(x)k."""
    _check_oracle_range(k)
    counts = Counter({(0, 0): 1})
    for _ in range(k):
        counts = _fuse(counts, RHO_WEIGHTS)
        counts = _fuse(counts, RHO_BAR_WEIGHTS)
    return counts[(0, 0)]


def kuperberg_coeff(k: int, n: int) -> int:
    """Coefficient of w1^-1 w2^2 in Phi^k conj(Phi)^n times the Kuperberg sextic."""
    if k < 0 or n < 0 or k + n > settings.KUPERBERG_MAX_DEGREE:
        raise InvalidParameterError(
            f"kuperberg_coeff needs k, n >= 0 and k + n <= "
            f"{settings.KUPERBERG_MAX_DEGREE}, got ({k}, {n})"
        )
    return (r_poly(k, n) * KUPERBERG_SEXTIC).coefficient(*KUPERBERG_MONOMIAL)


# ----------------------------------------------------------------------------
# Exact masses of J^2-weighted lattice measures
# ----------------------------------------------------------------------------


def j2_lattice_mass(keep: Callable[[int, int], bool]) -> int:
    """Total mass of J^2/pi^4 against a uniform lattice measure.

    The uniform measure on a finite subgroup L of T^2 integrates w1^a w2^b
    to 1 when the character (a, b) is trivial on L and to 0 otherwise.
    """
    return -4 * (Q_POLY * Q_POLY).dual_lattice_sum(keep)


def j2_mass_d(n: int) -> int:
    return j2_lattice_mass(lambda a, b: a % n == 0 and b % n == 0 and (a + 2 * b) % (3 * n) == 0)


def j2_mass_product(P: int, Q: int) -> int:
    return j2_lattice_mass(lambda a, b: a % P == 0 and b % Q == 0)
