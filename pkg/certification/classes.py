"""
The five conjugacy classes the weighted matrices live on.

Odd n uses (n), (n-2,1^2), (n-2,2), (n-5,4,1), (n-1,1).
Even n uses (n-5,5), (n-6,2^3), (n-6,4,1^2), (n-6,4,2), (n-6,5,1).
"""

from combinatorics.characters import CycleType
from combinatorics.derangements import is_t_derangement_type
from spectra.weighting import EVEN, ODD
from utils.errors import InvalidArgumentError

SMALLEST_SELECTED_N = 12


def _class_parts(n, parity):
    if parity == ODD:
        return [(n,), (n - 2, 1, 1), (n - 2, 2), (n - 5, 4, 1), (n - 1, 1)]
    if parity == EVEN:
        return [(n - 5, 5), (n - 6, 2, 2, 2), (n - 6, 4, 1, 1), (n - 6, 4, 2), (n - 6, 5, 1)]
    raise InvalidArgumentError(f"parity must be '{ODD}' or '{EVEN}', got {parity!r}.")


def class_list(n, parity):
    """
    The five classes of the given family at n, whatever the parity of n.

    Raises InvalidArgumentError when a cycle length is not positive, two
    classes coincide, or a class fixes some 3-subset.
    """
    classes = []
    for parts in _class_parts(n, parity):
        if any(part < 1 for part in parts):
            raise InvalidArgumentError(f"The {parity} classes need larger n; {parts} has a non-positive cycle.")
        classes.append(CycleType(parts))

    if len(set(classes)) != len(classes):
        raise InvalidArgumentError(f"The {parity} classes collide at n = {n}.")
    for rho in classes:
        if not is_t_derangement_type(rho, 3):
            raise InvalidArgumentError(f"Class {rho} fixes a 3-subset at n = {n}.")
    return classes


def parity_of(n):
    return ODD if n % 2 else EVEN


def selected_classes(n):
    """The classes for the parity of n; n must be at least 12."""
    if n < SMALLEST_SELECTED_N:
        raise InvalidArgumentError(f"selected_classes needs n >= {SMALLEST_SELECTED_N}, got {n}.")
    return class_list(n, parity_of(n))
