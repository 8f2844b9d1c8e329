"""
Two-parameter weight families and the polytopes where they work.

Both families put eigenvalue C(n,3)-1 on [n] and -1 on [n-1,1], [n-2,2] and
[n-3,3]. Points are (t, s) with t = ω5 and s = ω4.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from certification.classes import SMALLEST_SELECTED_N, class_list, parity_of
from spectra.weighting import EVEN, ODD, Weighting
from utils.errors import CertificationFailure, InvalidArgumentError
from utils.input_parser import InputParser

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolytopePoint:
    t: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "s", Fraction(self.s))

    def to_dict(self):
        return {"t": InputParser.format_rational(self.t), "s": InputParser.format_rational(self.s)}

    def __str__(self):
        return f"({InputParser.format_rational(self.t)}, {InputParser.format_rational(self.s)})"


def constituent_degrees(n):
    """(α, β, γ, δ) = (C(n,3)-1, n-1, C(n,2)-n, C(n,3)-C(n,2))."""
    if n < 6:
        raise InvalidArgumentError(f"constituent_degrees needs n >= 6, got {n}.")
    return comb(n, 3) - 1, n - 1, comb(n, 2) - n, comb(n, 3) - comb(n, 2)


def _require(n, parity):
    if n < SMALLEST_SELECTED_N or parity_of(n) != parity:
        raise InvalidArgumentError(f"The {parity} family needs {parity} n >= {SMALLEST_SELECTED_N}, got {n}.")


def odd_weights(n, point):
    """The odd-n solution: every (t, s) gives the prescribed four eigenvalues."""
    _require(n, ODD)
    alpha, beta, gamma, _ = constituent_degrees(n)
    t, s = point.t, point.s
    omegas = (
        -s - t + beta + gamma,
        (-s - t + alpha - beta) / 2,
        (s + t + alpha - beta) / 2 - gamma,
        s,
        t,
    )
    return Weighting(n, tuple(class_list(n, ODD)), omegas, params=(t, s), parity_case=ODD)


def even_weights(n, point):
    """The even-n solution."""
    _require(n, EVEN)
    alpha, beta, gamma, _ = constituent_degrees(n)
    t, s = point.t, point.s
    omegas = (
        (-2 * t - 2 * s + alpha + 2 * beta + gamma) / 3,
        t / 6 - s / 3 + Fraction(alpha - beta, 6) - Fraction(gamma, 3),
        (-t + alpha - beta) / 2,
        s,
        t,
    )
    return Weighting(n, tuple(class_list(n, EVEN)), omegas, params=(t, s), parity_case=EVEN)


def weights_for(n, point):
    """odd_weights or even_weights by the parity of n."""
    return odd_weights(n, point) if n % 2 else even_weights(n, point)


def odd_polytope_contains(n, point):
    t, s = point.t, point.s
    _, beta, gamma, _ = constituent_degrees(n)
    b = beta + gamma
    c = comb(n - 1, 3)
    m = Fraction(n * (n - 2) * (n - 4), 3)
    return 3 * t + s < b and -m < s - t <= b - c and b - c < t + s < b


def even_polytope_contains(n, point):
    t, s = point.t, point.s
    _, beta, gamma, _ = constituent_degrees(n)
    b = beta + gamma
    c = comb(n - 1, 2)
    return 2 * t + 2 * s < comb(n, 3) and t - s > 0 and b - c < t < b + c and s > 0


def polytope_contains(n, point):
    return odd_polytope_contains(n, point) if n % 2 else even_polytope_contains(n, point)


def default_point(n):
    """
    An interior point of the polytope for the parity of n.

    Odd:  t = C(n-1,3)/4, s = β+γ-C(n-1,3).
    Even: t = β+γ, s = (β+γ)/2.
    """
    _, beta, gamma, _ = constituent_degrees(n)
    b = beta + gamma
    if n % 2:
        c = comb(n - 1, 3)
        point = PolytopePoint(Fraction(c, 4), Fraction(b - c))
    else:
        point = PolytopePoint(Fraction(b), Fraction(b, 2))

    if not polytope_contains(n, point):
        raise CertificationFailure(f"Default point {point} is outside the polytope at n = {n}.")
    logger.debug("Default point at n=%d: %s", n, point)
    return point
