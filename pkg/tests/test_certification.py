import dataclasses
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from certification import (
    PolytopePoint,
    certify,
    chromatic_number_report,
    class_list,
    closed_form_applies,
    closed_form_small_eigenvalues,
    constituent_degrees,
    default_point,
    even_polytope_contains,
    even_weights,
    expected_bound,
    large_degree_certificate,
    odd_polytope_contains,
    odd_weights,
    parity_of,
    polytope_contains,
    selected_classes,
    spectrum_digest,
    verify_weighting,
    weights_for,
)
from certification.certificate import check_closed_forms
from combinatorics import Partition
from spectra import EXACT, HYBRID, full_spectrum, weighted_eigenvalue
from utils.errors import CertificationFailure, InvalidArgumentError


def _assert_certified(certificate, n):
    spectrum = certificate.spectrum
    assert certificate.verified
    assert certificate.bound == 6 * factorial(n - 3)
    assert spectrum.max_value == comb(n, 3) - 1
    assert spectrum.max_attainers == (Partition.of(n),)
    assert spectrum.min_value == -1
    assert set(spectrum.min_attainers) == {Partition.of(n - 1, 1), Partition.of(n - 2, 2), Partition.of(n - 3, 3)}
    assert certificate.chromatic_lower_bound == certificate.chromatic_upper_bound == comb(n, 3)


def test_constituent_degrees():
    assert constituent_degrees(27) == (2924, 26, 324, 2574)
    assert constituent_degrees(20) == (1139, 19, 170, 950)
    with pytest.raises(InvalidArgumentError):
        constituent_degrees(5)


def test_parity_and_class_lists():
    assert parity_of(27) == "odd"
    assert parity_of(20) == "even"
    assert len(class_list(9, "odd")) == 5
    assert len(class_list(10, "even")) == 5
    with pytest.raises(InvalidArgumentError):
        class_list(8, "odd")
    with pytest.raises(InvalidArgumentError):
        class_list(6, "odd")
    with pytest.raises(InvalidArgumentError):
        class_list(9, "even")
    with pytest.raises(InvalidArgumentError):
        class_list(20, "prime")
    with pytest.raises(InvalidArgumentError):
        selected_classes(11)


def test_polytope_membership():
    assert odd_polytope_contains(27, PolytopePoint(600, -2800))
    assert not odd_polytope_contains(27, PolytopePoint(0, 0))
    assert even_polytope_contains(20, PolytopePoint(100, 50))
    # s must be positive
    assert not even_polytope_contains(20, PolytopePoint(100, 0))
    assert not even_polytope_contains(20, PolytopePoint(50, 100))


def test_default_points():
    assert default_point(27) == PolytopePoint(650, -2250)
    assert default_point(20) == PolytopePoint(189, Fraction(189, 2))
    for n in range(12, 60):
        if closed_form_applies(n):
            assert polytope_contains(n, default_point(n))


def test_closed_form_ranges():
    assert closed_form_applies(27)
    assert not closed_form_applies(25)
    assert closed_form_applies(20)
    assert not closed_form_applies(18)


@pytest.mark.parametrize("n", [20, 22, 24, 27, 29, 31])
def test_closed_forms_match_characters(n):
    point = default_point(n)
    weighting = weights_for(n, point)
    forms = closed_form_small_eigenvalues(n, point)
    assert len(forms) == 10
    for partition, value in forms.items():
        assert weighted_eigenvalue(partition, weighting) == value


@given(
    n=st.sampled_from([20, 21, 26, 27]),
    t=st.fractions(-10**4, 10**4, max_denominator=100),
    s=st.fractions(-10**4, 10**4, max_denominator=100),
)
def test_closed_forms_hold_at_any_point(n, t, s):
    point = PolytopePoint(t, s)
    weighting = weights_for(n, point)
    for partition, value in closed_form_small_eigenvalues(n, point).items():
        assert weighted_eigenvalue(partition, weighting) == value


_open_unit = st.fractions(0, 1, max_denominator=1000).filter(lambda x: 0 < x < 1)


@st.composite
def odd_interior_point(draw, n):
    # u = t + s and v = s - t sweep the part of the polytope with u < b - c/2
    _, beta, gamma, _ = constituent_degrees(n)
    b, c = beta + gamma, comb(n - 1, 3)
    m = Fraction(n * (n - 2) * (n - 4), 3)
    u = b - c + draw(_open_unit) * Fraction(c, 2)
    low = max(2 * u - b, -m)
    v = low + draw(st.one_of(_open_unit, st.just(Fraction(1)))) * (b - c - low)
    return PolytopePoint((u - v) / 2, (u + v) / 2)


@st.composite
def even_interior_point(draw, n):
    alpha, beta, gamma, _ = constituent_degrees(n)
    b, c = beta + gamma, comb(n - 1, 2)
    half = Fraction(alpha + 1, 2)
    t_low, t_high = max(b - c, 0), min(b + c, half)
    t = t_low + draw(_open_unit) * (t_high - t_low)
    s = draw(_open_unit) * min(t, half - t)
    return PolytopePoint(t, s)


@given(data=st.data(), n=st.sampled_from([13, 27, 29, 41]))
def test_odd_weight_signs_inside_the_polytope(data, n):
    point = data.draw(odd_interior_point(n))
    assert odd_polytope_contains(n, point)
    w1, w2, w3, w4, w5 = odd_weights(n, point).omegas
    assert w1 > 0 and w2 > 0 and w3 > 0 and w5 > 0
    assert w4 < 0


@given(data=st.data(), n=st.sampled_from([12, 20, 30]))
def test_even_weights_positive_inside_the_polytope(data, n):
    point = data.draw(even_interior_point(n))
    assert even_polytope_contains(n, point)
    assert all(omega > 0 for omega in even_weights(n, point).omegas)


def test_closed_forms_need_n_twelve():
    with pytest.raises(InvalidArgumentError):
        closed_form_small_eigenvalues(11, PolytopePoint(1, 1))


def test_check_closed_forms_flags_a_wrong_point():
    point = PolytopePoint(600, -2800)
    weighting = weights_for(27, PolytopePoint(601, -2800))
    with pytest.raises(CertificationFailure):
        check_closed_forms(27, weighting, point)


@pytest.mark.parametrize("n", [20, 27])
def test_certify_exact(n):
    certificate = certify(n)
    _assert_certified(certificate, n)
    assert certificate.strategy == "closed-form"
    assert certificate.mode == EXACT
    assert certificate.point == default_point(n)


def test_certify_at_an_explicit_point():
    certificate = certify(20, point=PolytopePoint(100, 50))
    _assert_certified(certificate, 20)
    assert certificate.weighting.omegas == (349, 130, 510, 50, 100)


def test_certify_outside_the_polytope():
    with pytest.raises(CertificationFailure):
        certify(20, point=PolytopePoint(0, 0))


@pytest.mark.parametrize("n", [1, 10])
def test_certify_below_range(n):
    with pytest.raises(InvalidArgumentError):
        certify(n)


def test_certify_hybrid_at_33():
    certificate = certify(33, mode=HYBRID)
    _assert_certified(certificate, 33)
    assert certificate.spectrum.mode == HYBRID
    assert certificate.spectrum.large_degree_bound < 1
    assert certificate.spectrum.computed_count == 14


def test_certificate_to_dict():
    data = certify(20).to_dict()
    assert data["n"] == 20
    assert data["case"] == "even"
    assert data["point"] == {"t": "189", "s": "189/2"}
    assert data["bound"] == str(6 * factorial(17))
    assert data["boundExpression"] == "6*(17)!"
    assert data["chromaticLower"] == data["chromaticUpper"] == str(comb(20, 3))
    assert data["verified"] is True
    assert len(data["spectrumDigest"]) == 64


def test_spectrum_digest_is_stable():
    weighting = weights_for(20, PolytopePoint(100, 50))
    assert spectrum_digest(full_spectrum(weighting)) == spectrum_digest(full_spectrum(weighting, workers=2))


def test_verify_weighting_names_the_offending_shape():
    weighting = weights_for(20, PolytopePoint(100, 50))
    spectrum = full_spectrum(weighting)
    target = Partition.of(18, 1, 1)
    rows = tuple(
        dataclasses.replace(row, eigenvalue=Fraction(-2)) if row.partition == target else row
        for row in spectrum.rows
    )
    with pytest.raises(CertificationFailure) as error:
        verify_weighting(weighting, dataclasses.replace(spectrum, rows=rows))
    assert error.value.partition == target


def test_verify_weighting_rejects_a_wrong_row_sum():
    weighting = weights_for(20, PolytopePoint(100, 50))
    spectrum = full_spectrum(weighting)
    rows = tuple(
        dataclasses.replace(row, eigenvalue=Fraction(5)) if row.partition == Partition.of(20) else row
        for row in spectrum.rows
    )
    with pytest.raises(CertificationFailure):
        verify_weighting(weighting, dataclasses.replace(spectrum, rows=rows))


def test_large_degree_certificate():
    weighting = weights_for(27, PolytopePoint(600, -2800))
    assert large_degree_certificate(27, weighting, 5 * comb(27, 3)) == Fraction(8524, 14625)
    with pytest.raises(CertificationFailure):
        large_degree_certificate(27, weighting, 1000)
    with pytest.raises(InvalidArgumentError):
        large_degree_certificate(29, weighting, 5 * comb(27, 3))


@pytest.mark.parametrize("n", range(11, 41))
def test_chromatic_number_report(n):
    assert chromatic_number_report(n, expected_bound(n)) == (comb(n, 3), comb(n, 3))


@pytest.mark.slow
@pytest.mark.parametrize("n", [22, 24, 29, 31])
def test_certify_exact_slow(n):
    _assert_certified(certify(n), n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [30, 40, 41])
def test_certify_hybrid_slow(n):
    certificate = certify(n, mode=HYBRID)
    _assert_certified(certificate, n)
    assert certificate.spectrum.large_degree_bound < 1


@pytest.mark.slow
def test_hybrid_and_exact_agree_at_30():
    exact = certify(30)
    hybrid = certify(30, mode=HYBRID)
    for exact_row, hybrid_row in zip(exact.spectrum.rows, hybrid.spectrum.rows):
        if hybrid_row.eigenvalue is not None:
            assert hybrid_row.eigenvalue == exact_row.eigenvalue
