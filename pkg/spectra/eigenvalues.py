"""
Eigenvalues of weighted unions of conjugacy classes, and the bounds built on them.

Every matrix here is a linear combination of class matrices of Sym(n), so each
irreducible λ contributes one eigenvalue Σ ω_i χ^λ(C_i) / χ^λ(1).
"""

import logging
from fractions import Fraction

from combinatorics.characters import character_magnitude_bound, class_size, mn_character
from combinatorics.partitions import hook_degree
from utils.errors import InvalidArgumentError

logger = logging.getLogger(__name__)


def weighted_eigenvalue(partition, weighting):
    """The eigenvalue of the weighted class matrix on the λ-isotypic component."""
    if partition.n != weighting.n:
        raise InvalidArgumentError(f"Shape {partition} is not a partition of {weighting.n}.")
    numerator = sum(
        (omega * mn_character(partition, rho) for rho, omega in zip(weighting.classes, weighting.omegas)),
        Fraction(0),
    )
    return numerator / hook_degree(partition)


def normal_cayley_eigenvalue(partition, classes):
    """Eigenvalue of the unweighted Cayley graph whose connection set is the union of `classes`."""
    classes = list(classes)
    if len(set(classes)) != len(classes):
        raise InvalidArgumentError("Connection classes must be pairwise distinct.")
    total = 0
    for rho in classes:
        if rho.n != partition.n:
            raise InvalidArgumentError(f"Class {rho} and shape {partition} have different n.")
        total += class_size(rho) * mn_character(partition, rho)
    return Fraction(total, hook_degree(partition))


def ratio_bound(num_vertices, row_sum, min_eigenvalue):
    """
    Weighted ratio bound |V| / (1 - d/τ) on the independence number.

    Needs τ < 0 <= d.
    """
    row_sum = Fraction(row_sum)
    min_eigenvalue = Fraction(min_eigenvalue)
    if min_eigenvalue >= 0:
        raise InvalidArgumentError(f"The ratio bound needs a negative least eigenvalue, got {min_eigenvalue}.")
    if row_sum < 0:
        raise InvalidArgumentError(f"The ratio bound needs a non-negative row sum, got {row_sum}.")
    return Fraction(num_vertices) / (1 - row_sum / min_eigenvalue)


def clique_coclique_bound(num_vertices, clique_size):
    """|V| / ω, an upper bound on α for vertex-transitive graphs."""
    if clique_size < 1:
        raise InvalidArgumentError(f"Clique size must be at least 1, got {clique_size}.")
    return Fraction(num_vertices, clique_size)


def large_degree_bound(weighting, threshold, uniform=False):
    """
    Σ |ω_i| · b_i / threshold, where b_i bounds every character value on class i.

    Any λ with degree >= threshold then has |eigenvalue| at most this number.
    With uniform=True every class uses the largest b_i.
    """
    if threshold <= 0:
        raise InvalidArgumentError(f"Threshold must be positive, got {threshold}.")
    bounds = [character_magnitude_bound(rho) for rho in weighting.classes]
    if uniform and bounds:
        bounds = [max(bounds)] * len(bounds)
    total = sum((abs(omega) * b for omega, b in zip(weighting.omegas, bounds)), Fraction(0))
    result = total / threshold
    logger.debug("Large-degree bound %s (class bounds %s, threshold %s)", result, bounds, threshold)
    return result
