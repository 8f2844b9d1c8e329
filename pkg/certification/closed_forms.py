"""
Closed-form eigenvalues of the ten small shapes outside the four constituents.

Each value is a function of n and the point (t, s); they must agree with the
generic character computation for the matching weight family.
"""

from fractions import Fraction
from math import comb

from certification.weights import constituent_degrees
from combinatorics.partitions import Partition
from utils.errors import InvalidArgumentError


def _shape(*head, ones=0):
    return Partition(tuple(head) + (1,) * ones)


def _odd_forms(n, t, s):
    alpha, beta, gamma, delta = constituent_degrees(n)
    b = beta + gamma
    e = -1 if n % 2 else 1
    cubic = n * (n - 2) * (n - 4)
    return {
        _shape(ones=n): -e * (-s - 3 * t + beta + 2 * gamma),
        _shape(2, ones=n - 2): e - e * (s + t + alpha - beta - 2 * gamma) / (n - 1),
        _shape(2, 2, ones=n - 4): e * (delta + s - t) / gamma,
        _shape(n - 2, ones=2): (-s - t + b) / comb(n - 1, 2),
        _shape(3, ones=n - 3): -e * (-s - t + b) / comb(n - 1, 2),
        _shape(2, 2, 2, ones=n - 6): e - e * (s + t + alpha - beta - 2 * gamma) / delta,
        _shape(n - 3, ones=3): (s + t - b) / comb(n - 1, 3),
        _shape(4, ones=n - 4): -e * (s + t - b) / comb(n - 1, 3),
        _shape(n - 3, 2, 1): 3 * (s + t) / cubic,
        _shape(3, 2, ones=n - 5): -e * 3 * (s - t) / cubic,
    }


def _even_forms(n, t, s):
    alpha, beta, gamma, delta = constituent_degrees(n)
    b = beta + gamma
    e = -1 if n % 2 else 1
    cubic = n * (n - 2) * (n - 4)
    return {
        _shape(ones=n): e * (alpha - 2 * s - 2 * t),
        _shape(n - 2, ones=2): (-t + b) / comb(n - 1, 2),
        _shape(3, ones=n - 3): e * (-t + b) / comb(n - 1, 2),
        _shape(n - 3, ones=3): (t - b) / comb(n - 1, 3),
        _shape(4, ones=n - 4): e * (t - b) / comb(n - 1, 3),
        _shape(n - 3, 2, 1): 3 * t / cubic,
        _shape(3, 2, ones=n - 5): -e * 3 * t / cubic,
        _shape(2, ones=n - 2): -e + 2 * s / (n - 1),
        _shape(2, 2, ones=n - 4): -e + e * (-2 * s + 2 * t) / gamma,
        _shape(2, 2, 2, ones=n - 6): -e + e * 2 * s / delta,
    }


def closed_form_small_eigenvalues(n, point):
    """Map partition -> exact eigenvalue for the ten small non-constituent shapes."""
    if n < 12:
        raise InvalidArgumentError(f"Closed forms are stated for n >= 12, got {n}.")
    t, s = Fraction(point.t), Fraction(point.s)
    return _odd_forms(n, t, s) if n % 2 else _even_forms(n, t, s)
