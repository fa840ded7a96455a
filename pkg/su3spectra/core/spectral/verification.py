"""Moment comparison between a theorem measure and its reference measure.

Verification failures are report content; nothing here raises on a mismatch.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional

import numpy as np

from su3spectra.core.config import settings
from su3spectra.core.exceptions import SpectraError
from su3spectra.core.spectral.measures import (
    AtomicMeasure,
    combine,
    d_measure,
    dd_measure,
    dnk_measure,
    is_positive,
    j2_reweight,
    max_weight_delta,
    moment_matrix,
    uniform_roots_product,
)
from su3spectra.core.spectral.schemas import VerificationReport
from su3spectra.core.spectral.theorems import CORRECTED, Theorem

logger = logging.getLogger(__name__)


def compare_moments(
    reference: AtomicMeasure, candidate: AtomicMeasure, max_moment: int
) -> np.ndarray:
    """|moment(candidate, m, n) - moment(reference, m, n)| for 0 <= m, n <= max_moment."""
    return np.abs(moment_matrix(candidate, max_moment) - moment_matrix(reference, max_moment))


def _mass_note(theorem: Theorem, form: str) -> str:
    masses = ", ".join(f"{label}: {mass}" for label, mass in theorem.term_masses(form).items())
    return f"{form} term masses: {masses}; total {theorem.mass(form)}"


def verify_theorem(
    subject: str,
    kind: str,
    theorem: Theorem,
    reference: AtomicMeasure,
    max_moment: Optional[int] = None,
    tol: Optional[float] = None,
    normalize: bool = False,
    notes: Iterable[str] = (),
) -> VerificationReport:
    """Check the printed form of a theorem, falling back to its corrected form."""
    max_moment = settings.DEFAULT_MAX_MOMENT if max_moment is None else max_moment
    tol = settings.DEFAULT_TOL if tol is None else tol
    notes: List[str] = list(notes)
    report: Optional[VerificationReport] = None

    for form in theorem.forms:
        try:
            measure = theorem.measure(form)
        except SpectraError as e:
            notes.append(f"{form} form cannot be built: {e.message}")
            logger.debug("%s: %s form not constructible: %s", subject, form, e.message)
            continue

        scale = 1.0
        if normalize:
            scale = measure.total_mass
            if abs(scale) < settings.ZERO_WEIGHT_TOL:
                notes.append(f"{form} form has zero mass")
                continue
            measure = measure.scaled(1.0 / scale)

        deltas = compare_moments(reference, measure, max_moment)
        max_delta = float(deltas.max())
        passed = max_delta < tol
        report = VerificationReport(
            subject=subject,
            kind=kind,
            max_moment=max_moment,
            tol=tol,
            scale=scale,
            form=form,
            deltas=deltas.tolist(),
            max_delta=max_delta,
            passed=passed,
            positive=is_positive(measure),
            exact_mass=str(theorem.mass(form)),
        )
        if passed:
            if form == CORRECTED:
                notes.append(f"erratum: {theorem.erratum}")
                notes.append(_mass_note(theorem, form))
            break
        notes.append(f"{form} form fails with max moment delta {max_delta:.3e}")
        notes.append(_mass_note(theorem, form))

    if report is None:
        report = VerificationReport(
            subject=subject, kind=kind, max_moment=max_moment, tol=tol, passed=False
        )
    report.notes = notes
    logger.info(
        "%s %s: %s (form=%s, max delta %.3e)",
        kind,
        subject,
        "pass" if report.passed else "FAIL",
        report.form,
        report.max_delta,
    )
    return report


# ----------------------------------------------------------------------------
# Measure relations
# ----------------------------------------------------------------------------

RELATION_LEVELS = (3, 4, 5, 8, Fraction(8, 3), Fraction(24, 5))


def _relation_report(subject: str, delta: float, formula: str, tol: float) -> VerificationReport:
    report = VerificationReport(
        subject=subject,
        kind="relation",
        max_moment=0,
        tol=tol,
        deltas=[[delta]],
        max_delta=delta,
        passed=delta < tol,
        notes=[formula],
    )
    logger.info("relation %s: %s (delta %.3e)", subject, "pass" if report.passed else "FAIL", delta)
    return report


def verify_relations(tol: Optional[float] = None) -> List[VerificationReport]:
    """The four identities between the measure families, compared atom by atom."""
    tol = settings.RELATION_TOL if tol is None else tol

    j2_d3 = max_weight_delta(
        j2_reweight(d_measure(3)).scaled(3.0), j2_reweight(uniform_roots_product(3, 3))
    )
    dd4 = max_weight_delta(dd_measure(4), j2_reweight(d_measure(4)).scaled(1.0 / 24.0))
    dnk0 = max(max_weight_delta(dnk_measure(n, 0), dd_measure(n)) for n in RELATION_LEVELS)
    dd2 = max(
        max_weight_delta(dnk_measure(6, Fraction(1, 6)), dd_measure(2)),
        max_weight_delta(
            dd_measure(2), combine([(4.0 / 3.0, d_measure(2)), (-1.0 / 3.0, d_measure(1))])
        ),
    )
    return [
        _relation_report("j2_d3_product", j2_d3, "3 J^2 d(3) = J^2 prod(3, 3)", tol),
        _relation_report("dd4_j2_d4", dd4, "dd(4) = J^2 d(4) / 24", tol),
        _relation_report("dnk_zero_shift", dnk0, "dnk(n, 0) = dd(n)", tol),
        _relation_report("dd2", dd2, "dnk(6, 1/6) = dd(2) = (4 d(2) - d(1)) / 3", tol),
    ]
