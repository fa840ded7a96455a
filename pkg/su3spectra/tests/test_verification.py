# su3spectra/tests/test_verification.py
from fractions import Fraction

import numpy as np
import pytest

from su3spectra.core.spectral.measures import d_measure, dd_measure, dnk_measure
from su3spectra.core.spectral.theorems import CORRECTED, PRINTED, Theorem, d_term, dnk_term
from su3spectra.core.spectral.verification import compare_moments, verify_relations, verify_theorem


def test_compare_moments_of_a_measure_with_itself():
    mu = dd_measure(5)
    deltas = compare_moments(mu, mu, 4)
    assert deltas.shape == (5, 5)
    assert np.all(deltas == 0)


def test_all_four_relations_hold():
    reports = verify_relations()
    assert [r.subject for r in reports] == ["j2_d3_product", "dd4_j2_d4", "dnk_zero_shift", "dd2"]
    for report in reports:
        assert report.kind == "relation"
        assert report.passed, report.notes
        assert report.max_delta < 1e-10


def test_printed_form_passes():
    theorem = Theorem("probe", (d_term(1, 3),))
    report = verify_theorem("probe", "graph", theorem, d_measure(3), max_moment=4, tol=1e-10)
    assert report.passed
    assert report.form == PRINTED
    assert report.exact_mass == "1"
    assert report.positive
    assert report.notes == []


def test_corrected_form_is_used_after_a_printed_failure():
    theorem = Theorem(
        "probe",
        printed=(d_term(2, 3),),
        corrected=(d_term(1, 3),),
        erratum="the coefficient is 1",
    )
    report = verify_theorem("probe", "graph", theorem, d_measure(3), max_moment=4, tol=1e-10)
    assert report.passed
    assert report.form == CORRECTED
    assert "erratum: the coefficient is 1" in report.notes
    assert any(note.startswith("printed form fails") for note in report.notes)


def test_normalization_reports_the_scale():
    theorem = Theorem("probe", (d_term(3, 2),))
    report = verify_theorem(
        "probe", "graph", theorem, d_measure(2), max_moment=4, tol=1e-10, normalize=True
    )
    assert report.passed
    assert report.scale == pytest.approx(3.0)


def test_unbuildable_form_is_noted_not_raised():
    theorem = Theorem(
        "probe",
        printed=(dnk_term(1, 8, Fraction(1, 4)),),
        corrected=(dnk_term(1, 8, Fraction(1, 12)),),
        erratum="shift 1/12",
    )
    report = verify_theorem(
        "probe", "graph", theorem, dnk_measure(8, Fraction(1, 12)), max_moment=4, tol=1e-10
    )
    assert report.passed
    assert report.notes[0].startswith("printed form cannot be built")


def test_failure_is_report_content():
    theorem = Theorem("probe", (d_term(1, 2),))
    report = verify_theorem("probe", "graph", theorem, d_measure(3), max_moment=4, tol=1e-10)
    assert not report.passed
    assert report.max_delta > 1e-10
    assert report.model_dump(by_alias=True)["pass"] is False
