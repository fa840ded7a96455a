"""Theorem measures as exact linear combinations of the basic families.

A Theorem keeps the combination exactly as printed and, where the printed
coefficients are inconsistent, a corrected combination plus an erratum note.
Coefficients are sympy numbers so that masses can be audited exactly.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

import sympy

from su3spectra.core.exceptions import InvalidParameterError
from su3spectra.core.spectral.counting import j2_mass_d, j2_mass_product
from su3spectra.core.spectral.measures import (
    AtomicMeasure,
    combine,
    d_measure,
    dd_measure,
    dirac_comb,
    dnk_measure,
    j2_reweight,
    uniform_roots_product,
)
from su3spectra.core.spectral.torus import Rational, TorusPoint

logger = logging.getLogger(__name__)

Coefficient = Union[sympy.Expr, Fraction, int, str]

PRINTED = "printed"
CORRECTED = "corrected"


def coefficient(value: Coefficient) -> sympy.Expr:
    """Exact sympy number from a Fraction, an int or a closed-form string."""
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return sympy.sympify(value, rational=True)
    return sympy.sympify(value)


@dataclass(frozen=True)
class TheoremTerm:
    coefficient: sympy.Expr
    label: str
    builder: Callable[[], AtomicMeasure] = field(compare=False, repr=False)
    mass: sympy.Expr = sympy.Integer(1)

    @property
    def weight(self) -> float:
        return float(self.coefficient)

    def measure(self) -> AtomicMeasure:
        return self.builder()

    def describe(self) -> str:
        return f"{self.coefficient} * {self.label}"


@dataclass(frozen=True)
class Theorem:
    subject: str
    printed: Tuple[TheoremTerm, ...]
    corrected: Optional[Tuple[TheoremTerm, ...]] = None
    erratum: Optional[str] = None

    @property
    def forms(self) -> List[str]:
        return [PRINTED, CORRECTED] if self.corrected is not None else [PRINTED]

    def terms(self, form: str = PRINTED) -> Tuple[TheoremTerm, ...]:
        if form == PRINTED:
            return self.printed
        if form == CORRECTED and self.corrected is not None:
            return self.corrected
        raise InvalidParameterError(f"Theorem {self.subject} has no {form} form")

    def measure(self, form: str = PRINTED) -> AtomicMeasure:
        return theorem_combination(self.terms(form))

    def mass(self, form: str = PRINTED) -> sympy.Expr:
        return theorem_mass(self.terms(form))

    def term_masses(self, form: str = PRINTED) -> Dict[str, str]:
        return {t.label: str(sympy.expand(t.coefficient * t.mass)) for t in self.terms(form)}

    def formula(self, form: str = PRINTED) -> str:
        return " + ".join(t.describe() for t in self.terms(form))


def theorem_combination(terms: Iterable[TheoremTerm]) -> AtomicMeasure:
    return combine((t.weight, t.measure()) for t in terms)


def theorem_mass(terms: Iterable[TheoremTerm]) -> sympy.Expr:
    return sympy.expand(sum((t.coefficient * t.mass for t in terms), sympy.Integer(0)))


def is_unit_mass(mass: sympy.Expr, tol: float = 1e-12) -> bool:
    if sympy.expand(mass - 1) == 0:
        return True
    return abs(float(mass) - 1.0) < tol


# ----------------------------------------------------------------------------
# Term factories
# ----------------------------------------------------------------------------


def _j2_d(n: int) -> AtomicMeasure:
    return j2_reweight(d_measure(n))


def _j2_product(P: int, Q: int) -> AtomicMeasure:
    return j2_reweight(uniform_roots_product(P, Q))


def dd_term(c: Coefficient, n: Rational) -> TheoremTerm:
    return TheoremTerm(coefficient(c), f"dd({n})", partial(dd_measure, n))


def dnk_term(c: Coefficient, n: Rational, k: Rational) -> TheoremTerm:
    return TheoremTerm(coefficient(c), f"dnk({n}, {k})", partial(dnk_measure, n, k))


def d_term(c: Coefficient, n: int) -> TheoremTerm:
    return TheoremTerm(coefficient(c), f"d({n})", partial(d_measure, n))


def product_term(c: Coefficient, P: int, Q: int) -> TheoremTerm:
    return TheoremTerm(coefficient(c), f"prod({P}, {Q})", partial(uniform_roots_product, P, Q))


def j2_d_term(c: Coefficient, n: int) -> TheoremTerm:
    return TheoremTerm(coefficient(c), f"J2 d({n})", partial(_j2_d, n), sympy.Integer(j2_mass_d(n)))


def j2_product_term(c: Coefficient, P: int, Q: int) -> TheoremTerm:
    return TheoremTerm(
        coefficient(c),
        f"J2 prod({P}, {Q})",
        partial(_j2_product, P, Q),
        sympy.Integer(j2_mass_product(P, Q)),
    )


def comb_term(c: Coefficient, label: str, points: List[TorusPoint]) -> TheoremTerm:
    """Unit Dirac masses at the listed points (repeats accumulate)."""
    return TheoremTerm(
        coefficient(c), label, partial(dirac_comb, tuple(points)), sympy.Integer(len(points))
    )


def measure_term(
    c: Coefficient, label: str, builder: Callable[[], AtomicMeasure], mass: Coefficient = 1
) -> TheoremTerm:
    return TheoremTerm(coefficient(c), label, builder, coefficient(mass))
