# su3spectra/tests/test_torus.py
import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su3spectra.core.exceptions import DomainError, InvalidParameterError
from su3spectra.core.spectral.torus import (
    ORIGIN,
    ROTATIONS,
    T2,
    T3,
    WEYL_GROUP,
    TorusPoint,
    as_fraction,
    canonical_representative,
    cubic_roots,
    discoid_radicand,
    in_discoid,
    in_fundamental_domain,
    jacobian_abs_z,
    jacobian_theta,
    pair_to_angles,
    phi,
    phi_inverse,
    phi_inverse_kl,
    phi_of_pair,
    phi_values,
    stabilizer_order,
    weyl_apply,
    weyl_orbit,
)

angles = st.fractions(min_value=0, max_value=1, max_denominator=60)
points = st.builds(TorusPoint, angles, angles)


def test_angles_are_reduced_mod_one():
    p = TorusPoint(Fraction(5, 4), Fraction(-1, 3))
    assert p.as_strings() == ("1/4", "2/3")


def test_as_fraction_rejects_floats():
    with pytest.raises(InvalidParameterError):
        as_fraction(0.25)
    assert as_fraction("3/9") == Fraction(1, 3)


def test_weyl_group_has_six_elements_and_three_rotations():
    assert len(WEYL_GROUP) == 6
    assert len(ROTATIONS) == 3
    assert sorted(g.det for g in WEYL_GROUP) == [-1, -1, -1, 1, 1, 1]


def test_generators_act_linearly_mod_one():
    p = TorusPoint(Fraction(1, 4), Fraction(1, 3))
    assert weyl_apply(T2, p) == TorusPoint(Fraction(2, 3), Fraction(3, 4))
    assert weyl_apply(T3, p) == TorusPoint(Fraction(2, 3), Fraction(11, 12))


@pytest.mark.parametrize(
    "point, expected",
    [
        (ORIGIN, 3),
        (TorusPoint(Fraction(1, 3), 0), 0),
        (TorusPoint(Fraction(1, 3), Fraction(2, 3)), 3 * cmath.exp(2j * math.pi / 3)),
    ],
)
def test_phi_at_known_points(point, expected):
    assert phi(point) == pytest.approx(expected, abs=1e-12)


@given(points)
def test_phi_is_weyl_invariant(p):
    z = phi(p)
    for g in WEYL_GROUP:
        assert phi(g.apply(p)) == pytest.approx(z, abs=1e-12)


@given(points)
def test_phi_lands_in_the_discoid(p):
    assert in_discoid(phi(p))


def test_phi_values_matches_scalar_phi():
    pts = [TorusPoint(Fraction(a, 7), Fraction(b, 5)) for a in range(7) for b in range(5)]
    vectorized = phi_values(pts)
    assert np.allclose(vectorized, [phi(p) for p in pts], atol=1e-12)


def test_stabilizers():
    assert stabilizer_order(ORIGIN) == 6
    assert stabilizer_order(TorusPoint(Fraction(1, 2), Fraction(1, 2))) == 2
    assert len(weyl_orbit(TorusPoint(Fraction(1, 7), Fraction(3, 7)))) == 6
    assert len(weyl_orbit(TorusPoint(Fraction(1, 3), 0))) == 6
    assert not in_fundamental_domain(TorusPoint(0, Fraction(1, 2)))


@given(points)
def test_orbit_sizes_divide_the_group_order(p):
    size = len(weyl_orbit(p))
    assert size in {1, 2, 3, 6}
    assert size * stabilizer_order(p) == 6


@given(points)
def test_free_orbits_meet_the_fundamental_domain_once(p):
    if stabilizer_order(p) == 1:
        assert sum(in_fundamental_domain(q) for q in weyl_orbit(p)) == 1


@given(points)
def test_canonical_representative_lies_in_fundamental_domain(p):
    rep = canonical_representative(p)
    assert rep in weyl_orbit(p)
    assert in_fundamental_domain(rep)


def test_jacobian_vanishes_on_the_deltoid_preimage():
    assert jacobian_theta(ORIGIN) == 0.0
    assert jacobian_theta(TorusPoint(Fraction(1, 4), Fraction(1, 2))) == 0.0


def test_jacobian_at_the_centre():
    centre = TorusPoint(Fraction(1, 3), 0)
    assert abs(jacobian_theta(centre)) == pytest.approx(2 * math.pi**2 * math.sqrt(27))
    assert jacobian_abs_z(0) == pytest.approx(2 * math.pi**2 * math.sqrt(27))


@given(points)
def test_squared_jacobians_in_theta_and_z_agree(p):
    assert jacobian_abs_z(phi(p)) ** 2 == pytest.approx(jacobian_theta(p) ** 2, abs=1e-9)


def _grid_samples(count: int, seed: int):
    rng = np.random.default_rng(seed)
    return [
        TorusPoint(Fraction(int(a), 1000), Fraction(int(b), 1000))
        for a, b in rng.integers(0, 1000, size=(count, 2))
    ]


def test_jacobians_agree_on_random_grid_points():
    for p in _grid_samples(1000, seed=5):
        j_theta, j_z = jacobian_theta(p), jacobian_abs_z(phi(p))
        assert j_z**2 == pytest.approx(j_theta**2, abs=1e-9)
        if abs(j_theta) >= 1.0:
            assert j_z == pytest.approx(abs(j_theta), abs=1e-9)


def test_known_jacobian_values():
    quarter = TorusPoint(Fraction(1, 4), Fraction(1, 4))
    third = TorusPoint(Fraction(1, 3), Fraction(1, 3))
    assert jacobian_theta(quarter) ** 2 == pytest.approx(64 * math.pi**4)
    assert jacobian_theta(third) ** 2 == pytest.approx(108 * math.pi**4)


def test_jacobian_vanishes_on_sampled_deltoid_preimage_points():
    rng = np.random.default_rng(13)
    lines = (lambda t: (t, -t), lambda t: (t, 2 * t), lambda t: (2 * t, t))
    for i, q in enumerate(rng.integers(0, 997, size=100)):
        p = TorusPoint(*lines[i % 3](Fraction(int(q), 997)))
        assert jacobian_theta(p) == 0.0
        assert jacobian_abs_z(phi(p)) ** 2 < 1e-9


@given(points)
def test_squared_jacobian_is_weyl_invariant(p):
    j2 = jacobian_theta(p) ** 2
    for g in WEYL_GROUP:
        assert jacobian_theta(weyl_apply(g, p)) ** 2 == pytest.approx(j2, abs=1e-9)


def test_radicand_outside_the_discoid():
    assert discoid_radicand(4) < 0
    with pytest.raises(DomainError):
        cubic_roots(4)


def test_cubic_roots_at_the_centre_are_cube_roots_of_unity():
    roots = sorted(cubic_roots(0), key=cmath.phase)
    expected = sorted((cmath.exp(2j * math.pi * k / 3) for k in range(3)), key=cmath.phase)
    assert roots == pytest.approx(expected, abs=1e-12)


def test_cusp_has_a_triple_root():
    assert cubic_roots(3) == pytest.approx((1, 1, 1))


def _interior_samples(count: int, seed: int = 7):
    rng = np.random.default_rng(seed)
    samples = []
    while len(samples) < count:
        a, b = rng.integers(1, 10_000, size=2)
        p = TorusPoint(Fraction(int(a), 10_000), Fraction(int(b), 10_000))
        if discoid_radicand(phi(p)) > 1e-2:
            samples.append(p)
    return samples


@pytest.mark.parametrize("k, l", [(k, l) for k in range(3) for l in range(3) if k != l])
def test_single_inverse_branch(k, l):
    z = phi(TorusPoint(Fraction(1, 7), Fraction(3, 7)))
    assert phi_of_pair(*phi_inverse_kl(z, k, l)) == pytest.approx(z, abs=1e-9)


def test_inverse_round_trip_on_interior_points():
    worst = 0.0
    for p in _interior_samples(1000):
        z = phi(p)
        for pair in phi_inverse(z):
            worst = max(worst, abs(phi_of_pair(*pair) - z))
    assert worst < 1e-9


@pytest.mark.parametrize("k", range(3))
def test_equal_branch_indices_do_not_invert_phi(k):
    for p in _interior_samples(100, seed=3):
        z = phi(p)
        assert abs(phi_of_pair(*phi_inverse_kl(z, k, k)) - z) > 1e-6


def test_six_inverses_form_the_weyl_orbit():
    for p in _interior_samples(200, seed=11):
        orbit = [g.apply(p).omegas for g in WEYL_GROUP]
        for w1, w2 in phi_inverse(phi(p)):
            assert min(abs(w1 - o1) + abs(w2 - o2) for o1, o2 in orbit) < 1e-9


def _circle_distance(a: float, b: float) -> float:
    d = abs(a - b) % 1.0
    return min(d, 1.0 - d)


def test_inverse_pairs_convert_back_to_orbit_angles():
    p = TorusPoint(Fraction(1, 4), Fraction(1, 3))
    orbit = [(float(q.theta1), float(q.theta2)) for q in weyl_orbit(p)]
    for pair in phi_inverse(phi(p)):
        t1, t2 = pair_to_angles(pair)
        assert 0.0 <= t1 < 1.0 and 0.0 <= t2 < 1.0
        assert min(_circle_distance(t1, a) + _circle_distance(t2, b) for a, b in orbit) < 1e-9
