import hashlib
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from certification.classes import SMALLEST_SELECTED_N, parity_of, selected_classes
from certification.closed_forms import closed_form_small_eigenvalues
from certification.weights import (
    constituent_degrees,
    default_point,
    polytope_contains,
    weights_for,
)
from combinatorics.characters import permutation_character_constituents_3
from spectra.eigenvalues import large_degree_bound, ratio_bound, weighted_eigenvalue
from spectra.spectrum import EXACT, HYBRID, default_threshold, full_spectrum
from utils.errors import CertificationFailure, InvalidArgumentError
from utils.input_parser import InputParser

logger = logging.getLogger(__name__)

# smallest n handled by the two-parameter families with their default points
CLOSED_FORM_START = {"odd": 27, "even": 20}
SMALLEST_CERTIFIED_N = 11

CLOSED_FORM = "closed-form"
SEARCH = "search"


@dataclass(frozen=True)
class Certificate:
    """A verified weighting together with the coclique bound it proves."""

    n: int
    parity_case: str
    point: object
    weighting: object
    spectrum: object
    bound: Fraction
    chromatic_lower_bound: int
    chromatic_upper_bound: int
    verified: bool
    mode: str = EXACT
    strategy: str = CLOSED_FORM

    def to_dict(self):
        fmt = InputParser.format_rational
        return {
            "n": self.n,
            "case": self.parity_case,
            "point": None if self.point is None else self.point.to_dict(),
            "classes": [rho.to_json() for rho in self.weighting.classes],
            "omegas": [fmt(omega) for omega in self.weighting.omegas],
            "spectrumDigest": spectrum_digest(self.spectrum),
            "minAttainers": [p.to_json() for p in self.spectrum.min_attainers],
            "bound": fmt(self.bound),
            "boundExpression": f"6*({self.n - 3})!",
            "chromaticLower": str(self.chromatic_lower_bound),
            "chromaticUpper": str(self.chromatic_upper_bound),
            "verified": self.verified,
            "mode": self.mode,
            "strategy": self.strategy,
        }


def spectrum_digest(report):
    """sha256 of the rows in canonical JSON form."""
    rows = report.to_dict()["rows"]
    canonical = json.dumps(rows, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def large_degree_certificate(n, weighting, threshold, uniform=False):
    """
    Bound on |eigenvalue| for every λ of degree >= threshold.

    Raises CertificationFailure when the bound is not below 1.
    """
    if weighting.n != n:
        raise InvalidArgumentError(f"Weighting is for Sym({weighting.n}), not Sym({n}).")
    bound = large_degree_bound(weighting, threshold, uniform=uniform)
    if bound >= 1:
        raise CertificationFailure(f"Large-degree bound {bound} is not below 1; fall back to exact mode.")
    return bound


def verify_weighting(weighting, spectrum):
    """
    Checks the three eigenvalue conditions behind the ratio bound.

    [n] carries C(n,3)-1 and is the only shape to reach it; the three
    non-trivial constituents carry -1 and are the only shapes to reach it;
    every other eigenvalue lies strictly between. Raises CertificationFailure
    naming the first offending shape.
    """
    n = weighting.n
    alpha = constituent_degrees(n)[0]
    trivial, *constituents = permutation_character_constituents_3(n)

    if spectrum.mode == HYBRID and not (spectrum.large_degree_bound is not None and spectrum.large_degree_bound < 1):
        raise CertificationFailure("Hybrid spectrum lacks a large-degree bound below 1.")

    for row in spectrum.rows:
        if row.eigenvalue is None:
            continue
        value = row.eigenvalue
        if row.partition == trivial:
            if value != alpha:
                raise CertificationFailure(f"Row sum is {value}, expected {alpha}.", row.partition)
        elif row.partition in constituents:
            if value != -1:
                raise CertificationFailure(f"Eigenvalue {value} on {row.partition}, expected -1.", row.partition)
        elif not -1 < value < alpha:
            raise CertificationFailure(
                f"Eigenvalue {value} on {row.partition} is outside (-1, {alpha}).", row.partition
            )


def chromatic_number_report(n, bound):
    """
    (lower, upper) for the chromatic number of the 3-derangement graph.

    Lower is n!/α rounded up; upper colours each permutation by the image of
    {1,2,3}, which uses C(n,3) colour classes.
    """
    bound = Fraction(bound)
    quotient = Fraction(factorial(n)) / bound
    lower = -(-quotient.numerator // quotient.denominator)
    return lower, comb(n, 3)


def conclude_certificate(n, weighting, spectrum, point, mode, strategy):
    verify_weighting(weighting, spectrum)
    alpha = constituent_degrees(n)[0]
    bound = ratio_bound(factorial(n), alpha, -1)
    if bound != expected_bound(n):
        raise CertificationFailure(f"Ratio bound {bound} differs from 6*({n - 3})!.")
    lower, upper = chromatic_number_report(n, bound)
    logger.info("Certified n=%d (%s, %s): bound %s", n, strategy, mode, bound)
    return Certificate(
        n=n,
        parity_case=parity_of(n),
        point=point,
        weighting=weighting,
        spectrum=spectrum,
        bound=bound,
        chromatic_lower_bound=lower,
        chromatic_upper_bound=upper,
        verified=True,
        mode=mode,
        strategy=strategy,
    )


def check_closed_forms(n, weighting, point):
    """Compares the closed forms with the character computation; raises on the first mismatch."""
    for partition, expected in closed_form_small_eigenvalues(n, point).items():
        actual = weighted_eigenvalue(partition, weighting)
        if actual != expected:
            raise CertificationFailure(
                f"Closed form gives {expected} on {partition} but characters give {actual}.", partition
            )


def closed_form_certificate(n, point=None, mode=EXACT, threshold=None, workers=None):
    """The two-parameter pipeline: classes, weights, polytope, spectrum, bound."""
    selected_classes(n)
    if point is None:
        point = default_point(n)
    elif not polytope_contains(n, point):
        raise CertificationFailure(f"Point {point} is outside the polytope for n = {n}.")

    weighting = weights_for(n, point)
    check_closed_forms(n, weighting, point)

    if mode == HYBRID:
        if threshold is None:
            threshold = default_threshold(n, weighting.parity_case)
        large_degree_certificate(n, weighting, threshold)

    spectrum = full_spectrum(weighting, mode=mode, threshold=threshold, workers=workers)
    return conclude_certificate(n, weighting, spectrum, point, mode, CLOSED_FORM)


def closed_form_applies(n):
    return n >= CLOSED_FORM_START[parity_of(n)]


def certify(n, point=None, mode=EXACT, threshold=None, workers=None, budget=None):
    """
    A verified certificate that 3-setwise intersecting families in Sym(n) have at most 6(n-3)! members.

    Odd n >= 27 and even n >= 20 use the two-parameter weights (at `point` or
    the default point); smaller n from 11 upward use the weighting search. A
    point given for 12 <= n below those ranges is tried with the
    two-parameter weights.
    """
    if n < SMALLEST_CERTIFIED_N:
        raise InvalidArgumentError(f"certify supports n >= {SMALLEST_CERTIFIED_N}, got {n}.")
    if closed_form_applies(n) or (point is not None and n >= SMALLEST_SELECTED_N):
        return closed_form_certificate(n, point=point, mode=mode, threshold=threshold, workers=workers)

    # imported here: search depends on this module
    from certification.search import search_certificate

    if point is not None:
        logger.warning("Ignoring point %s: n=%d is below the two-parameter range", point, n)
    return search_certificate(n, mode=mode, budget=budget, workers=workers)


def expected_bound(n):
    """6(n-3)!."""
    return 6 * factorial(n - 3)
