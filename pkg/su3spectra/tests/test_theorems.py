# su3spectra/tests/test_theorems.py
from fractions import Fraction

import pytest
import sympy

from su3spectra.core.exceptions import InvalidParameterError
from su3spectra.core.spectral.measures import d_measure, same_measure
from su3spectra.core.spectral.nimrep import graph_theorem
from su3spectra.core.spectral.theorems import (
    CORRECTED,
    PRINTED,
    Theorem,
    coefficient,
    d_term,
    is_unit_mass,
    j2_d_term,
    theorem_mass,
)


def test_coefficient_parsing():
    assert coefficient(Fraction(3, 12)) == sympy.Rational(1, 4)
    assert coefficient("1/12") == sympy.Rational(1, 12)
    assert sympy.simplify(coefficient("(2 - sqrt(2))/24") - (2 - sympy.sqrt(2)) / 24) == 0
    assert coefficient(2) == 2


def test_j2_terms_carry_their_lattice_mass():
    term = j2_d_term(Fraction(1, 24), 4)
    assert term.mass == 24
    assert theorem_mass([term]) == 1


@pytest.mark.parametrize("graph", ["E8", "E1_12", "E2_12", "E5_12", "E24"])
def test_exceptional_graph_theorems_have_exact_unit_mass(graph):
    theorem = graph_theorem(graph)
    assert sympy.expand(theorem.mass(PRINTED) - 1) == 0
    assert theorem.measure().total_mass == pytest.approx(1.0)


def test_e4_12_printed_mass_is_wrong_and_corrected_is_one():
    theorem = graph_theorem("E4_12")
    assert theorem.forms == [PRINTED, CORRECTED]
    assert theorem.mass(PRINTED) == sympy.Rational(31, 6)
    assert is_unit_mass(theorem.mass(CORRECTED))
    assert "1/72" in theorem.erratum


@pytest.mark.parametrize("n", range(5, 11))
def test_dstar_printed_mass_is_three(n):
    theorem = graph_theorem(f"Dstar({n})")
    assert float(theorem.mass(PRINTED)) == pytest.approx(3.0)
    assert is_unit_mass(theorem.mass(CORRECTED))


def test_missing_form_is_rejected():
    theorem = Theorem("probe", (d_term(1, 2),))
    assert theorem.forms == [PRINTED]
    with pytest.raises(InvalidParameterError):
        theorem.terms(CORRECTED)


def test_term_masses_and_formula():
    theorem = Theorem("probe", (d_term(Fraction(1, 2), 2), d_term(Fraction(1, 2), 3)))
    assert theorem.term_masses() == {"d(2)": "1/2", "d(3)": "1/2"}
    assert theorem.formula() == "1/2 * d(2) + 1/2 * d(3)"
    assert same_measure(
        theorem.measure(), d_measure(2).scaled(0.5) + d_measure(3).scaled(0.5)
    )
