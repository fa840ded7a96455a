# su3spectra/tests/test_measures.py
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from su3spectra.core.exceptions import DomainError, InvalidParameterError
from su3spectra.core.spectral.counting import j2_mass_d, j2_mass_product
from su3spectra.core.spectral.measures import (
    Atom,
    AtomicMeasure,
    combine,
    d_measure,
    dd_measure,
    dirac,
    dnk_measure,
    from_records,
    is_positive,
    is_weyl_invariant,
    j2_reweight,
    moment,
    moment_matrix,
    orbit_measure,
    pushforward,
    same_measure,
    support_size,
    symmetrize,
    to_records,
    uniform_roots_product,
)
from su3spectra.core.spectral.torus import ORIGIN, TorusPoint


def test_atoms_merge_and_zero_weights_drop():
    p = TorusPoint(Fraction(1, 5), Fraction(2, 5))
    mu = AtomicMeasure([Atom(p, 0.25), Atom(p, 0.5), Atom(ORIGIN, 0.0)])
    assert len(mu) == 1
    assert mu.weight_of(p) == pytest.approx(0.75)


def test_dirac_scaled_by_zero_is_empty():
    assert len(dirac(ORIGIN).scaled(0.0)) == 0


def test_oversized_weight_is_rejected():
    with pytest.raises(DomainError):
        AtomicMeasure([Atom(ORIGIN, 1e9)])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
def test_d_measure_is_uniform_on_3n2_points(n):
    mu = d_measure(n)
    assert support_size(mu) == 3 * n * n
    assert mu.total_mass == pytest.approx(1.0)


@pytest.mark.parametrize("p, q", [(2, 3), (3, 3), (5, 4)])
def test_product_support(p, q):
    mu = uniform_roots_product(p, q)
    assert support_size(mu) == p * q
    assert moment(mu, 0, 0) == pytest.approx(1.0)


def test_dnk_support_has_36_atoms():
    assert support_size(dnk_measure(8, Fraction(1, 12))) == 36


@pytest.mark.parametrize(
    "builder",
    [
        lambda: dd_measure(1),
        lambda: dd_measure(Fraction(3, 2)),
        lambda: dnk_measure(2, 0),
        lambda: dnk_measure(8, Fraction(1, 4)),
        lambda: dnk_measure(8, Fraction(-1, 12)),
        lambda: uniform_roots_product(0, 3),
    ],
)
def test_out_of_domain_parameters(builder):
    with pytest.raises(InvalidParameterError):
        builder()


@pytest.mark.parametrize("builder", [lambda: dd_measure(5), lambda: dnk_measure(8, Fraction(1, 12))])
def test_orbit_families_are_weyl_invariant_probabilities(builder):
    mu = builder()
    assert mu.total_mass == pytest.approx(1.0)
    assert is_weyl_invariant(mu)
    assert is_positive(mu)


def test_symmetrize_keeps_mass():
    mu = dirac(TorusPoint(Fraction(1, 7), Fraction(3, 7)))
    symmetric = symmetrize(mu)
    assert support_size(symmetric) == 6
    assert symmetric.total_mass == pytest.approx(1.0)
    assert same_measure(symmetric, orbit_measure(TorusPoint(Fraction(1, 7), Fraction(3, 7))))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_j2_lattice_mass_matches_the_counting_engine(n):
    assert j2_reweight(d_measure(n)).total_mass == pytest.approx(j2_mass_d(n))
    assert j2_mass_d(n) == 24


@pytest.mark.parametrize("p, expected", [(3, 72), (4, 24), (6, 24)])
def test_j2_product_masses(p, expected):
    assert j2_mass_product(p, p) == expected
    assert j2_reweight(uniform_roots_product(p, p)).total_mass == pytest.approx(expected)


def test_dd4_is_the_normalized_j2_d4():
    assert same_measure(dd_measure(4), j2_reweight(d_measure(4)).scaled(1 / 24))


def test_combine_is_linear():
    mu = combine([(0.5, d_measure(2)), (0.5, d_measure(2))])
    assert same_measure(mu, d_measure(2))


def test_moment_conjugate_symmetry():
    mu = dnk_measure(Fraction(24, 5), Fraction(1, 12))
    for m in range(4):
        for n in range(4):
            assert moment(mu, m, n) == pytest.approx(moment(mu, n, m).conjugate(), abs=1e-12)


def test_moment_matrix_matches_moment():
    mu = dd_measure(Fraction(8, 3))
    matrix = moment_matrix(mu, 3)
    assert matrix[2, 1] == pytest.approx(moment(mu, 2, 1), abs=1e-12)
    assert matrix[0, 0] == pytest.approx(1.0)


def test_negative_moment_order():
    with pytest.raises(InvalidParameterError):
        moment(d_measure(1), -1, 0)


def test_pushforward_of_d1_hits_the_three_cusps():
    image = pushforward(d_measure(1))
    assert len(image) == 3
    assert all(abs(abs(z) - 3) < 1e-9 for z, _ in image)
    assert [w for _, w in image] == pytest.approx([1 / 3] * 3)


@given(
    st.lists(
        st.tuples(
            st.fractions(min_value=0, max_value=1, max_denominator=40),
            st.fractions(min_value=0, max_value=1, max_denominator=40),
            st.floats(min_value=0.001, max_value=10, allow_nan=False),
        ),
        max_size=12,
    )
)
def test_records_round_trip(rows):
    mu = AtomicMeasure(Atom(TorusPoint(a, b), w) for a, b, w in rows)
    back = from_records(to_records(mu))
    assert back.atoms == mu.atoms


def test_records_need_every_field():
    with pytest.raises(InvalidParameterError):
        from_records([{"theta1": "1/2", "weight": 1.0}])
