"""Spectral measures of the SU(3) nimrep graphs.

The exponent tables are the source of truth: a graph's spectral measure is
the Weyl symmetrization of its weighted exponent points. Each graph also has
a theorem expressing that measure through the basic measure families, and
the A(n) graphs additionally carry an adjacency-matrix oracle.
"""
import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
import sympy

from su3spectra.core.config import settings
from su3spectra.core.exceptions import DomainError, InvalidParameterError, UnknownSubjectError
from su3spectra.core.spectral.measures import (
    Atom,
    AtomicMeasure,
    d_measure,
    dd_measure,
    j2_reweight,
    j2_weight,
    max_weight_delta,
    moment,
    symmetrize,
)
from su3spectra.core.spectral.models import Exponent, GraphSpectrum
from su3spectra.core.spectral.schemas import VerificationReport
from su3spectra.core.spectral.theorems import (
    PRINTED,
    Theorem,
    TheoremTerm,
    dd_term,
    dnk_term,
    j2_d_term,
)
from su3spectra.core.spectral.torus import TorusPoint
from su3spectra.core.spectral.verification import verify_theorem

logger = logging.getLogger(__name__)

Lambda = Tuple[int, int]

EXCEPTIONAL_GRAPHS = ("E8", "E1_12", "E2_12", "E4_12", "E5_12", "E24")
PARAMETRIC_GRAPHS = ("Dstar(n)", "A(n)")
_PARAMETRIC_ID = re.compile(r"^(Dstar|D\*|A)\(?(\d+)\)?$")


def parse_graph_id(graph: str) -> Tuple[str, Optional[int]]:
    """Split "Dstar(7)", "D*7" or "A(5)" into family and level; exceptional ids pass through."""
    graph = graph.strip()
    if graph in EXCEPTIONAL_GRAPHS:
        return graph, None
    match = _PARAMETRIC_ID.match(graph)
    if not match:
        raise UnknownSubjectError("graph", graph, list(EXCEPTIONAL_GRAPHS + PARAMETRIC_GRAPHS))
    family = "A" if match.group(1) == "A" else "Dstar"
    n = int(match.group(2))
    if family == "Dstar" and n < 5:
        raise InvalidParameterError(f"Dstar(n) needs n >= 5, got {n}")
    if family == "A" and n < 4:
        raise InvalidParameterError(f"A(n) needs n >= 4, got {n}")
    return family, n


def canonical_graph_id(graph: str) -> str:
    family, n = parse_graph_id(graph)
    return family if n is None else f"{family}({n})"


def default_graph_ids() -> List[str]:
    """Every graph swept by a full verification run."""
    return (
        list(EXCEPTIONAL_GRAPHS)
        + [f"Dstar({n})" for n in settings.dstar_levels]
        + [f"A({n})" for n in settings.a_graph_levels]
    )


# ----------------------------------------------------------------------------
# Exponents and spectra
# ----------------------------------------------------------------------------


def theta_of_exponent(lam: Lambda, n: int) -> TorusPoint:
    lambda1, lambda2 = lam
    if lambda1 < 0 or lambda2 < 0:
        raise InvalidParameterError(f"Exponent {lam} must be nonnegative")
    return TorusPoint(
        Fraction(lambda1 + 2 * lambda2 + 3, 3 * n), Fraction(2 * lambda1 + lambda2 + 3, 3 * n)
    )


def eigen_measure(spec: GraphSpectrum) -> AtomicMeasure:
    return symmetrize(
        AtomicMeasure(Atom(theta_of_exponent(e.lam, spec.n), e.weight) for e in spec.exponents)
    )


def dominant_triangle(n: int) -> List[Lambda]:
    return [(a, b) for a in range(n - 2) for b in range(n - 2 - a)]


def _rotate(mu: Lambda, n: int) -> Lambda:
    return n - 3 - mu[0] - mu[1], mu[0]


def dstar_spectrum(n: int) -> GraphSpectrum:
    """Exponents A^k(l, l) of D*(n), each row weighted (4/n) sin^2(2 pi (l + 1)/n).

    The row weights of one triple share a single printed |psi|^2, so the raw
    total is 3; the spectrum is normalized and the factor kept.
    """
    if n < 5:
        raise InvalidParameterError(f"Dstar(n) needs n >= 5, got {n}")
    exponents = []
    for lam in range((n - 3) // 2 + 1):
        weight = 4.0 / n * math.sin(2 * math.pi * (lam + 1) / n) ** 2
        expr = f"4/{n}*sin(2*pi*{lam + 1}/{n})**2"
        mu = (lam, lam)
        for _ in range(3):
            exponents.append(Exponent(mu[0], mu[1], weight, expr))
            mu = _rotate(mu, n)
    spectrum = GraphSpectrum(
        name=f"Dstar({n})",
        n=n,
        exponents=tuple(exponents),
        description=f"D({n})*, the conjugate orbifold graph at level {n}",
    )
    return spectrum.normalized()


def a_graph_spectrum(n: int) -> GraphSpectrum:
    """Every dominant weight of A(n), weighted by J(theta(lambda))^2."""
    if n < 4:
        raise InvalidParameterError(f"A(n) needs n >= 4, got {n}")
    raw = [(lam, j2_weight(theta_of_exponent(lam, n))) for lam in dominant_triangle(n)]
    total = math.fsum(w for _, w in raw)
    exponents = tuple(Exponent(lam[0], lam[1], w / total) for lam, w in raw)
    return GraphSpectrum(
        name=f"A({n})",
        n=n,
        exponents=exponents,
        description=f"A({n}), the fusion graph of the fundamental representation at level {n}",
    )


def graph_spectrum(graph: str, loader=None) -> GraphSpectrum:
    family, n = parse_graph_id(graph)
    if family == "Dstar":
        return dstar_spectrum(n)
    if family == "A":
        return a_graph_spectrum(n)
    if loader is None:
        from su3spectra.core.spectral.dependencies import get_table_loader

        loader = get_table_loader()
    spectrum = loader.get_graph(family)
    if spectrum is None:
        raise UnknownSubjectError("graph", family, sorted(loader.load_graphs()))
    return spectrum


# ----------------------------------------------------------------------------
# Theorems
# ----------------------------------------------------------------------------


def _dstar_theorem(n: int) -> Theorem:
    def terms(scale: int) -> Tuple[TheoremTerm, ...]:
        return tuple(
            dd_term(
                sympy.Rational(scale, n) * sympy.sin(2 * sympy.pi * j / n) ** 2, Fraction(n, j)
            )
            for j in range(1, (n - 1) // 2 + 1)
        )

    return Theorem(
        subject=f"Dstar({n})",
        printed=terms(12),
        corrected=terms(4),
        erratum="the coefficients (12/n) sin^2(2 pi j/n) sum to 3; each triple of "
        "exponent rows shares one weight, so the unit-mass form uses 4/n",
    )


def _a_theorem(n: int) -> Theorem:
    return Theorem(subject=f"A({n})", printed=(j2_d_term(Fraction(1, 24), n),))


def _exceptional_theorems() -> dict:
    e12_sqrt3 = ("(2 - sqrt(3))/12", "(2 + sqrt(3))/12")
    return {
        "E8": Theorem(
            "E8",
            (
                dd_term("(2 - sqrt(2))/8", 8),
                dd_term("(2 + sqrt(2))/8", Fraction(8, 3)),
                dnk_term(Fraction(1, 2), Fraction(24, 5), Fraction(1, 12)),
            ),
        ),
        "E1_12": Theorem(
            "E1_12",
            (
                dd_term(e12_sqrt3[0], 12),
                dd_term(e12_sqrt3[1], Fraction(12, 5)),
                j2_d_term(Fraction(1, 36), 4),
            ),
        ),
        "E2_12": Theorem(
            "E2_12",
            (
                dd_term(e12_sqrt3[1], 12),
                dd_term(e12_sqrt3[0], Fraction(12, 5)),
                j2_d_term(Fraction(1, 36), 4),
            ),
        ),
        "E4_12": Theorem(
            "E4_12",
            printed=(
                dd_term(Fraction(1, 12), 12),
                dd_term(Fraction(1, 12), Fraction(12, 5)),
                j2_d_term(Fraction(1, 12), 4),
                j2_d_term(Fraction(1, 8), 3),
            ),
            corrected=(
                dd_term(Fraction(1, 12), 12),
                dd_term(Fraction(1, 12), Fraction(12, 5)),
                j2_d_term(Fraction(1, 72), 4),
                j2_d_term(Fraction(1, 48), 3),
            ),
            erratum="the J^2 d(4) and J^2 d(3) coefficients are 1/72 and 1/48 (printed 1/12 and 1/8)",
        ),
        "E5_12": Theorem(
            "E5_12",
            (
                dd_term(Fraction(1, 3), 12),
                dd_term(Fraction(1, 3), Fraction(12, 5)),
                j2_d_term(Fraction(1, 72), 4),
            ),
        ),
        "E24": Theorem(
            "E24",
            (
                dd_term("(6 - 2*sqrt(3) - sqrt(6))/48", 24),
                dd_term("(6 + 2*sqrt(3) - sqrt(6))/48", Fraction(24, 5)),
                dd_term("(6 + 2*sqrt(3) + sqrt(6))/48", Fraction(24, 7)),
                dd_term("(6 - 2*sqrt(3) + sqrt(6))/48", Fraction(24, 11)),
                dnk_term("(2 - sqrt(2))/8", 8, Fraction(1, 12)),
                dnk_term("(2 + sqrt(2))/8", 4, Fraction(1, 24)),
            ),
        ),
    }


def graph_theorem(graph: str) -> Theorem:
    family, n = parse_graph_id(graph)
    if family == "Dstar":
        return _dstar_theorem(n)
    if family == "A":
        return _a_theorem(n)
    return _exceptional_theorems()[family]


def theorem_measure(graph: str, form: str = PRINTED, normalize: bool = True) -> AtomicMeasure:
    measure = graph_theorem(graph).measure(form)
    if normalize:
        measure = measure.scaled(1.0 / measure.total_mass)
    return measure


# ----------------------------------------------------------------------------
# Adjacency oracle for A(n)
# ----------------------------------------------------------------------------

# fusion with the fundamental representation moves a dominant weight by one of these
RHO_STEPS: Tuple[Lambda, ...] = ((1, 0), (-1, 1), (0, -1))


@dataclass(frozen=True)
class Adjacency:
    matrix: np.ndarray = field(compare=False)
    vertices: Tuple[Lambda, ...]
    star: int
    graph: nx.DiGraph = field(compare=False, repr=False)


def a_graph_adjacency(n: int) -> Adjacency:
    if n < 4:
        raise InvalidParameterError(f"A(n) needs n >= 4, got {n}")
    vertices = dominant_triangle(n)
    inside = set(vertices)
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    for a, b in vertices:
        for da, db in RHO_STEPS:
            target = (a + da, b + db)
            if target in inside:
                g.add_edge((a, b), target)
    matrix = nx.to_numpy_array(g, nodelist=vertices, dtype=int)
    return Adjacency(matrix, tuple(vertices), vertices.index((0, 0)), g)


def matrix_moments(adj: np.ndarray, star: int, m: int, n: int) -> complex:
    """The (star, star) entry of adj^m (adj^T)^n."""
    a = np.asarray(adj, dtype=float)
    if not np.allclose(a @ a.T, a.T @ a, rtol=0.0, atol=1e-10):
        raise DomainError("Adjacency matrix is not normal", size=a.shape[0])
    power = np.linalg.matrix_power(a, m) @ np.linalg.matrix_power(a.T, n)
    return complex(power[star, star])


# ----------------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------------


def verify_graph(
    graph: str,
    max_moment: Optional[int] = None,
    tol: Optional[float] = None,
    normalize: bool = False,
) -> VerificationReport:
    subject = canonical_graph_id(graph)
    spectrum = graph_spectrum(subject)
    notes = list(spectrum.notes)
    if not math.isclose(spectrum.normalization, 1.0):
        notes.append(
            f"exponent weights rescaled by 1/{spectrum.normalization:.12g} to unit mass"
        )
    return verify_theorem(
        subject,
        "graph",
        graph_theorem(subject),
        eigen_measure(spectrum),
        max_moment=max_moment,
        tol=tol,
        normalize=normalize,
        notes=notes,
    )


def verify_a_oracle(
    n: int, max_total: int = 8, tol: Optional[float] = None
) -> VerificationReport:
    """Apex-vertex adjacency moments of A(n) against the normalized J^2 d(n)."""
    tol = settings.DEFAULT_TOL if tol is None else tol
    adjacency = a_graph_adjacency(n)
    measure = j2_reweight(d_measure(n))
    measure = measure.scaled(1.0 / measure.total_mass)

    deltas = np.zeros((max_total + 1, max_total + 1))
    for m in range(max_total + 1):
        for k in range(max_total + 1 - m):
            deltas[m, k] = abs(
                matrix_moments(adjacency.matrix, adjacency.star, m, k) - moment(measure, m, k)
            )
    max_delta = float(deltas.max())
    notes = [f"{len(adjacency.vertices)} vertices, moments with m + n <= {max_total}"]
    passed = max_delta < tol
    if n == 4:
        atom_delta = max_weight_delta(measure, dd_measure(4))
        notes.append(f"max atom delta against dd(4): {atom_delta:.3e}")
        passed = passed and atom_delta < settings.RELATION_TOL

    logger.info("oracle A(%d): %s (max delta %.3e)", n, "pass" if passed else "FAIL", max_delta)
    return VerificationReport(
        subject=f"A({n})",
        kind="oracle",
        max_moment=max_total,
        tol=tol,
        deltas=deltas.tolist(),
        max_delta=max_delta,
        passed=passed,
        positive=True,
        notes=notes,
    )
