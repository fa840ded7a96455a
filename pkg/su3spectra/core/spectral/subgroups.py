"""Spectral measures of McKay graphs of the finite subgroups of SU(3).

A group is stored by its conjugacy classes: the class size and a torus point
whose image under Phi is the character of the fundamental representation on
that class. Families A (diagonal abelian), C = Delta(3n^2) and
D = Delta(6n^2) are generated; the exceptional groups E to L are data.
"""
import cmath
import logging
import math
import re
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional, Tuple

from su3spectra.core.config import settings
from su3spectra.core.exceptions import DomainError, InvalidParameterError, UnknownSubjectError
from su3spectra.core.spectral.measures import (
    Atom,
    AtomicMeasure,
    combine,
    orbit_measure,
    pushforward,
    symmetrize,
)
from su3spectra.core.spectral.models import ConjClass, GroupSpec
from su3spectra.core.spectral.schemas import VerificationReport
from su3spectra.core.spectral.theorems import (
    Theorem,
    comb_term,
    d_term,
    dd_term,
    dnk_term,
    j2_d_term,
    j2_product_term,
    measure_term,
    product_term,
)
from su3spectra.core.spectral.torus import (
    ORIGIN,
    ROTATIONS,
    TorusPoint,
    as_fraction,
    canonical_representative,
    in_fundamental_interior,
    phi,
    rotation_orbit,
    weyl_orbit,
)
from su3spectra.core.spectral.verification import verify_theorem

logger = logging.getLogger(__name__)

GENERATED_FAMILIES = ("A", "C", "D")
EXCEPTIONAL_GROUPS = ("E", "F", "G", "H", "I", "J", "K", "L")
_GROUP_ID = re.compile(r"^([ACD])\((\d+)(?:,\s*(\d+))?\)$")

ZERO_REP = TorusPoint(Fraction(1, 3), Fraction(0))


def group_id(family: str, params: Optional[Dict[str, int]] = None) -> str:
    params = params or {}
    if family == "A":
        return f"A({params['p']},{params['q']})"
    if family in ("C", "D"):
        return f"{family}({params['n']})"
    return family


def parse_group_id(text: str) -> Tuple[str, Dict[str, int]]:
    """Read "A(3,4)", "C(5)", "D(9)" or an exceptional letter."""
    text = text.strip().replace(" ", "")
    if text in EXCEPTIONAL_GROUPS:
        return text, {}
    match = _GROUP_ID.match(text)
    if not match:
        raise UnknownSubjectError("group", text, ["A(p,q)", "C(n)", "D(n)", *EXCEPTIONAL_GROUPS])
    family, first, second = match.groups()
    if family == "A":
        if second is None:
            raise InvalidParameterError(f"Group {text} needs two orders, as in A(p,q)")
        return family, {"p": int(first), "q": int(second)}
    if second is not None:
        raise InvalidParameterError(f"Group {text} takes a single level n")
    return family, {"n": int(first)}


def default_group_ids() -> List[str]:
    """Every group swept by a full verification run."""
    orders = settings.family_a_orders
    levels = settings.family_cd_levels
    return (
        [f"A({p},{q})" for p in orders for q in orders]
        + [f"C({n})" for n in levels]
        + [f"D({n})" for n in levels]
        + list(EXCEPTIONAL_GROUPS)
    )


# ----------------------------------------------------------------------------
# Parametric class data
# ----------------------------------------------------------------------------


def _grid(n: int) -> List[TorusPoint]:
    return [TorusPoint(Fraction(a, n), Fraction(b, n)) for a in range(n) for b in range(n)]


def _check_level(n: int):
    if n < 2:
        raise InvalidParameterError(f"Trihedral groups need n >= 2, got {n}")


def kn_set(n: int) -> List[TorusPoint]:
    """One point from each size-3 orbit of the rotations on the (1/n)-grid.

    The point is taken in the wedge 2 theta1 >= theta2, 2 theta2 >= theta1
    when the orbit meets it.
    """
    _check_level(n)
    seen = set()
    points = []
    for p in _grid(n):
        if p in seen:
            continue
        orbit = rotation_orbit(p)
        seen |= orbit
        if len(orbit) != 3:
            continue
        wedge = [
            q for q in orbit if 2 * q.theta1 - q.theta2 >= 0 and 2 * q.theta2 - q.theta1 >= 0
        ]
        points.append(min(wedge) if wedge else min(orbit))
    return sorted(points)


def _weyl_orbits(n: int) -> List[frozenset]:
    seen = set()
    orbits = []
    for p in _grid(n):
        if p not in seen:
            orbit = weyl_orbit(p)
            seen |= orbit
            orbits.append(orbit)
    return orbits


def knprime_set(n: int) -> List[TorusPoint]:
    """Representatives in the open fundamental domain of the size-6 grid orbits."""
    _check_level(n)
    points = []
    for orbit in _weyl_orbits(n):
        if len(orbit) == 6:
            rep = canonical_representative(next(iter(orbit)))
            if not in_fundamental_interior(rep):
                raise DomainError(f"Orbit representative {rep} is not interior", n=n)
            points.append(rep)
    return sorted(points)


def transposition_angles(n: int) -> List[Fraction]:
    """Angles k with -e^{2 pi i k} running over the characters of the transposition classes.

    The character is -a for a an n-th root of unity, so k lies in (1/n)Z for
    n even and in 1/(2n) + (1/n)Z for n odd.
    """
    _check_level(n)
    if n % 2 == 0:
        return [Fraction(j, n) for j in range(n)]
    return [Fraction(2 * j + 1, 2 * n) for j in range(n)]


def theta_k_map(k) -> TorusPoint:
    """A torus point with Phi equal to e^{-2 pi i k}."""
    k = as_fraction(k) % 1
    sixth, half = Fraction(1, 6), Fraction(1, 2)
    quarter = Fraction(1, 4)
    if sixth <= k < half:
        point = TorusPoint(k / 2 + quarter, k)
    elif half <= k < 5 * sixth:
        point = TorusPoint(-k, -k / 2 - quarter)
    else:
        point = TorusPoint(k / 2 + quarter, quarter - k / 2)

    expected = cmath.exp(-2j * math.pi * float(k))
    if abs(phi(point) - expected) > settings.PHI_CHECK_TOL:
        raise DomainError(f"theta({k}) = {point} has Phi {phi(point)}, expected {expected}")
    return point


def _family_a(p: int, q: int) -> GroupSpec:
    if p < 1 or q < 1:
        raise InvalidParameterError(f"A(p,q) needs p, q >= 1, got ({p}, {q})")
    classes = tuple(
        ConjClass(1, TorusPoint(Fraction(k, p), Fraction(l, q)), f"g_{k}_{l}")
        for k in range(p)
        for l in range(q)
    )
    return GroupSpec(group_id("A", {"p": p, "q": q}), p * q, classes, "A", {"p": p, "q": q})


def _central_points(n: int) -> List[TorusPoint]:
    return [p for p in _grid(n) if all(g.apply(p) == p for g in ROTATIONS)]


def _zero_classes(count: int, size: int) -> List[ConjClass]:
    return [ConjClass(size, ZERO_REP, f"three_cycle_{i + 1}") for i in range(count)]


def _family_c(n: int) -> GroupSpec:
    _check_level(n)
    classes = [ConjClass(1, p, f"central_{p}") for p in _central_points(n)]
    classes += [ConjClass(3, p, f"diag_{p}") for p in kn_set(n)]
    if n % 3 == 0:
        classes += _zero_classes(6, n * n // 3)
    else:
        classes += _zero_classes(2, n * n)
    return GroupSpec(group_id("C", {"n": n}), 3 * n * n, tuple(classes), "C", {"n": n})


def _family_d(n: int) -> GroupSpec:
    _check_level(n)
    classes = []
    for orbit in sorted(_weyl_orbits(n), key=lambda o: (len(o), min(o))):
        rep = canonical_representative(min(orbit))
        classes.append(ConjClass(len(orbit), rep, f"diag_{rep}"))
    if n % 3 == 0:
        classes += _zero_classes(3, 2 * n * n // 3)
    else:
        classes += _zero_classes(1, 2 * n * n)
    classes += [
        ConjClass(3 * n, theta_k_map(k), f"transposition_{k}") for k in transposition_angles(n)
    ]
    return GroupSpec(group_id("D", {"n": n}), 6 * n * n, tuple(classes), "D", {"n": n})


def group_classes(family: str, loader=None, **params) -> GroupSpec:
    if family == "A":
        spec = _family_a(params["p"], params["q"])
    elif family == "C":
        spec = _family_c(params["n"])
    elif family == "D":
        spec = _family_d(params["n"])
    elif family in EXCEPTIONAL_GROUPS:
        if loader is None:
            from su3spectra.core.spectral.dependencies import get_table_loader

            loader = get_table_loader()
        spec = loader.get_group(family)
        if spec is None:
            raise UnknownSubjectError("group", family, sorted(loader.load_groups()))
    else:
        raise UnknownSubjectError("group family", family, [*GENERATED_FAMILIES, *EXCEPTIONAL_GROUPS])
    return spec.check_class_equation()


# ----------------------------------------------------------------------------
# Character measures
# ----------------------------------------------------------------------------


def char_measure(g: GroupSpec) -> AtomicMeasure:
    g.check_class_equation()
    return symmetrize(AtomicMeasure(Atom(c.rep, c.size / g.order) for c in g.classes))


def char_moment(g: GroupSpec, m: int, n: int) -> complex:
    """The McKay moment sum_j |G_j|/|G| chi(G_j)^m conj(chi(G_j))^n, summed class by class."""
    total = 0j
    for c in g.classes:
        chi = phi(c.rep)
        total += c.size * chi**m * chi.conjugate() ** n
    return total / g.order


# ----------------------------------------------------------------------------
# Theorems
# ----------------------------------------------------------------------------


def transposition_measure(n: int) -> AtomicMeasure:
    """(1/n) sum over the transposition classes of the orbit measure at theta(k)."""
    return combine((1.0 / n, orbit_measure(theta_k_map(k))) for k in transposition_angles(n))


def _delta_6n2_printed(n: int):
    terms = [
        product_term(Fraction(1, 6), n, n),
        j2_d_term(Fraction(1, 72), 3),
        dd_term(Fraction(3, 2 * n), 4),
    ]
    for j in range(1, (n + 3) // 6 + 1):
        terms.append(dnk_term(Fraction(3, n), Fraction(4 * n, n - 2 * j), Fraction(j, n)))
    if n % 6 == 0:
        terms.append(dd_term(Fraction(3, 2 * n), 2))
    elif n % 3 != 0:
        points = []
        for j in range(1, n + 1):
            a, b, c = Fraction(j, n), Fraction(1 + 2 * j, 2 * n), Fraction(1 - 2 * j, 2 * n)
            points += [TorusPoint(a, b), TorusPoint(b, a), TorusPoint(b, c)]
        terms.append(comb_term(Fraction(1, 12 * n), f"line comb({n})", points))
    return tuple(terms)


def _delta_6n2_corrected(n: int):
    terms = [product_term(Fraction(1, 6), n, n), j2_d_term(Fraction(1, 72), 3)]
    if n % 3:
        terms.append(
            measure_term(Fraction(1, 2), f"T({n})", partial(transposition_measure, n))
        )
        return tuple(terms)

    angles = set(transposition_angles(n))
    if 0 in angles:
        terms.append(dd_term(Fraction(3, 2 * n), 4))
    if Fraction(1, 6) in angles:
        terms.append(dd_term(Fraction(3, 2 * n), 2))
    for alpha in sorted(a for a in angles if 0 < a < Fraction(1, 6)):
        terms.append(dnk_term(Fraction(3, n), 4 / (1 - 2 * alpha), alpha))
    return tuple(terms)


def _exceptional_theorem(family: str) -> Theorem:
    sigma_h = [
        TorusPoint(Fraction(s * k, 5), Fraction(s * l, 5))
        for s in (1, 2)
        for k, l in ((0, 1), (1, 0), (1, 1), (0, 4), (4, 0), (4, 4))
    ]
    sigma_i = []
    for k, l in ((1, 3), (1, 5), (2, 3), (2, 6), (4, 5), (4, 6)):
        p = TorusPoint(Fraction(k, 7), Fraction(l, 7))
        sigma_i += [p, -p]
    origin = [ORIGIN]

    theorems = {
        "E": Theorem(
            "E",
            (
                j2_d_term(Fraction(1, 48), 4),
                j2_d_term(Fraction(1, 108), 3),
                d_term(Fraction(1, 3), 2),
                d_term(Fraction(-1, 18), 1),
            ),
        ),
        "F": Theorem(
            "F",
            (
                j2_d_term(Fraction(1, 32), 4),
                j2_d_term(Fraction(1, 216), 3),
                d_term(Fraction(1, 6), 2),
                d_term(Fraction(-1, 36), 1),
            ),
        ),
        "G": Theorem(
            "G",
            printed=(
                j2_d_term(Fraction(1, 48), 6),
                j2_d_term(Fraction(1, 96), 4),
                d_term(Fraction(1, 6), 3),
                j2_d_term(Fraction(7, 648), 3),
                d_term(Fraction(1, 18), 2),
                d_term(Fraction(-1, 108), 1),
                j2_product_term(Fraction(-1, 36), 6, 6),
                product_term(Fraction(-1, 18), 3, 3),
            ),
            corrected=(
                j2_d_term(Fraction(1, 48), 6),
                j2_d_term(Fraction(1, 96), 4),
                d_term(Fraction(1, 6), 3),
                j2_d_term(Fraction(7, 648), 3),
                d_term(Fraction(1, 18), 2),
                d_term(Fraction(-1, 108), 1),
                j2_product_term(Fraction(-1, 144), 6, 6),
                product_term(Fraction(-1, 18), 3, 3),
            ),
            erratum="the J^2 prod(6, 6) coefficient is -1/144 (printed -1/36)",
        ),
        "H": Theorem(
            "H",
            printed=(
                j2_d_term(Fraction(1, 72), 3),
                product_term(Fraction(1, 5), 2, 2),
                comb_term(Fraction(-7, 30), "delta(0, 0)", origin),
                comb_term(Fraction(1, 30), "fifths comb", sigma_h),
            ),
            corrected=(
                j2_d_term(Fraction(1, 72), 3),
                product_term(Fraction(1, 3), 2, 2),
                comb_term(Fraction(-1, 15), "delta(0, 0)", origin),
                comb_term(Fraction(1, 30), "fifths comb", sigma_h),
            ),
            erratum="prod(2, 2) and delta(0, 0) carry 1/3 and -1/15 (printed 1/5 and -7/30)",
        ),
        "I": Theorem(
            "I",
            printed=(
                j2_d_term(Fraction(1, 72), 3),
                product_term(Fraction(1, 6), 2, 2),
                comb_term(Fraction(-1, 28), "delta(0, 0)", origin),
                comb_term(Fraction(1, 42), "sevenths comb", sigma_i),
            ),
            corrected=(
                j2_d_term(Fraction(1, 72), 3),
                j2_product_term(Fraction(1, 96), 4, 4),
                product_term(Fraction(1, 6), 2, 2),
                comb_term(Fraction(-1, 28), "delta(0, 0)", origin),
                comb_term(Fraction(1, 42), "sevenths comb", sigma_i),
            ),
            erratum="the term (1/96) J^2 prod(4, 4) carrying the order-4 class is missing",
        ),
        "J": Theorem(
            "J",
            (
                j2_d_term(Fraction(1, 72), 3),
                d_term(Fraction(1, 3), 2),
                d_term(Fraction(-1, 15), 1),
                dd_term(Fraction(1, 5), 5),
                dd_term(Fraction(1, 5), Fraction(5, 2)),
            ),
        ),
        "K": Theorem(
            "K",
            printed=(
                j2_d_term(Fraction(1, 32), 4),
                j2_d_term(Fraction(1, 24), 3),
                d_term(Fraction(1, 2), 2),
                d_term(Fraction(-5, 42), 1),
                dnk_term(Fraction(6, 7), Fraction(21, 4), Fraction(1, 21)),
            ),
            corrected=(
                j2_d_term(Fraction(1, 96), 4),
                j2_d_term(Fraction(1, 72), 3),
                d_term(Fraction(1, 6), 2),
                d_term(Fraction(-1, 28), 1),
                dnk_term(Fraction(2, 7), Fraction(21, 4), Fraction(1, 21)),
            ),
            erratum="coefficients 1/96, 1/72, 1/6, -1/28, 2/7 (printed 1/32, 1/24, 1/2, -5/42, 6/7); "
            "the dnk parameters are read as (21/4, 1/21)",
        ),
        "L": Theorem(
            "L",
            (
                j2_d_term(Fraction(1, 96), 4),
                j2_d_term(Fraction(1, 108), 3),
                d_term(Fraction(1, 6), 2),
                d_term(Fraction(-7, 180), 1),
                dd_term(Fraction(1, 5), 5),
                dd_term(Fraction(1, 5), Fraction(5, 2)),
            ),
        ),
    }
    return theorems[family]


def group_theorem(family: str, **params) -> Theorem:
    if family == "A":
        p, q = params["p"], params["q"]
        return Theorem(group_id("A", params), (product_term(1, p, q),))
    if family == "C":
        n = params["n"]
        _check_level(n)
        return Theorem(
            group_id("C", params),
            (product_term(Fraction(1, 3), n, n), j2_d_term(Fraction(1, 36), 3)),
        )
    if family == "D":
        n = params["n"]
        _check_level(n)
        return Theorem(
            group_id("D", params),
            printed=_delta_6n2_printed(n),
            corrected=_delta_6n2_corrected(n),
            erratum="the transposition classes carry mass 1/2, spread as 1/(2n) over the "
            "orbits of theta(k) for the n characters -e^{2 pi i k}",
        )
    if family in EXCEPTIONAL_GROUPS:
        return _exceptional_theorem(family)
    raise UnknownSubjectError("group family", family, [*GENERATED_FAMILIES, *EXCEPTIONAL_GROUPS])


def theorem_group_measure(family: str, form: str = "printed", **params) -> AtomicMeasure:
    return group_theorem(family, **params).measure(form)


# ----------------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------------


def verify_group(
    family: str,
    params: Optional[Dict[str, int]] = None,
    max_moment: Optional[int] = None,
    tol: Optional[float] = None,
    normalize: bool = False,
) -> VerificationReport:
    params = params or {}
    spec = group_classes(family, **params)
    notes = list(spec.notes)
    if family == "D":
        n = params["n"]
        image = pushforward(transposition_measure(n))
        notes.append(
            f"transposition classes push forward to {len(image)} points on the unit circle"
        )
    return verify_theorem(
        spec.name,
        "group",
        group_theorem(family, **params),
        char_measure(spec),
        max_moment=max_moment,
        tol=tol,
        normalize=normalize,
        notes=notes,
    )
