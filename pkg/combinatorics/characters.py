"""
Exact irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule: strip a border strip of the
first cycle length, recurse on the rest, sign by leg length. All arithmetic is
on Python integers.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod

from combinatorics.partitions import (
    Partition,
    conjugate,
    hook_degree,
    partitions_of,
    strip_residues,
)
from utils.errors import InvalidArgumentError, PreconditionViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleType:
    """A conjugacy class of Sym(n), named by its cycle lengths in decreasing order."""

    parts: tuple
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(sorted((int(part) for part in self.parts), reverse=True))
        if any(part < 1 for part in parts):
            raise InvalidArgumentError(f"Cycle lengths must be positive, got {list(self.parts)}.")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def of(cls, *parts):
        """Shorthand: CycleType.of(25, 1, 1)."""
        return cls(tuple(parts))

    @classmethod
    def from_partition(cls, partition):
        return cls(partition.parts)

    @property
    def sign(self):
        """Sign of any permutation in the class."""
        return -1 if (self.n - len(self.parts)) % 2 else 1

    @property
    def size(self):
        return class_size(self)

    def multiplicities(self):
        return Counter(self.parts)

    def to_json(self):
        return list(self.parts)

    def __str__(self):
        return "(" + ",".join(str(part) for part in self.parts) + ")"


@lru_cache(maxsize=None)
def _mn(parts, rho):
    """Character of the shape `parts` on the composition `rho`, consumed left to right."""
    if not rho:
        return 1 if not parts else 0
    total = 0
    for residue, leg in strip_residues(parts, rho[0]):
        value = _mn(residue, rho[1:])
        total += -value if leg % 2 else value
    return total


def mn_character_of_composition(partition, composition):
    """
    χ^λ on the class of `composition`, with the cycle lengths removed in the
    given order. Any order gives the same value.
    """
    composition = tuple(int(part) for part in composition)
    if any(part < 1 for part in composition):
        raise InvalidArgumentError(f"Cycle lengths must be positive, got {list(composition)}.")
    if sum(composition) != partition.n:
        raise InvalidArgumentError(
            f"Shape {partition} has {partition.n} cells but the class has {sum(composition)} points."
        )
    return _mn(partition.parts, composition)


def mn_character(partition, rho):
    """χ^λ(ρ) as an exact integer."""
    if rho.n != partition.n:
        raise InvalidArgumentError(f"Shape {partition} has {partition.n} cells but {rho} moves {rho.n} points.")
    return _mn(partition.parts, rho.parts)


def class_size(rho):
    """n! / (∏ cycle lengths · ∏ multiplicity!)."""
    centraliser = prod(rho.parts) * prod(factorial(m) for m in Counter(rho.parts).values())
    return factorial(rho.n) // centraliser


def cycle_types_of(n):
    """Every cycle type of Sym(n), in canonical order."""
    return [CycleType.from_partition(partition) for partition in partitions_of(n)]


def small_degree_irreducibles(n, bound):
    """Every λ ⊢ n with hook_degree(λ) < bound, found by enumeration."""
    found = [partition for partition in partitions_of(n) if hook_degree(partition) < bound]
    logger.debug("%d irreducibles of Sym(%d) have degree below %d", len(found), n, bound)
    return found


def permutation_character_constituents_3(n):
    """Constituents of the action on 3-subsets: [n], [n-1,1], [n-2,2], [n-3,3]."""
    if n < 6:
        raise InvalidArgumentError(f"The four constituents are distinct only for n >= 6, got {n}.")
    return [Partition.of(n), Partition.of(n - 1, 1), Partition.of(n - 2, 2), Partition.of(n - 3, 3)]


def character_magnitude_bound(rho):
    """
    Bound on |χ^λ(ρ)| over every λ ⊢ n, for ρ = (n-a, tail) with 3a+1 <= n.

    With that many cells, λ has at most one strip of length n-a, so the value
    is ± a character of Sym(a) on the tail.
    """
    a = rho.n - rho.parts[0]
    if 3 * a + 1 > rho.n:
        raise PreconditionViolation(
            f"Class {rho} has leading cycle {rho.parts[0]}; need 3a+1 <= n with a = {a}."
        )
    if a == 0:
        return 1
    tail = CycleType(rho.parts[1:])
    return max(abs(mn_character(mu, tail)) for mu in partitions_of(a))


def character_table(n):
    """(partitions, cycle types, rows) with rows[i][j] = χ^{partitions[i]}(classes[j])."""
    shapes = partitions_of(n)
    classes = cycle_types_of(n)
    rows = [[mn_character(shape, rho) for rho in classes] for shape in shapes]
    return shapes, classes, rows


def small_shapes(n):
    """
    The fourteen shapes of degree below 5·C(n,3) for large n, as (label, Partition) pairs:
    seven near-trivial shapes followed by their transposes.
    """
    if n < 8:
        raise PreconditionViolation(f"The fourteen small shapes are distinct only for n >= 8, got {n}.")
    top = [
        ("[n]", (n,)),
        ("[n-1,1]", (n - 1, 1)),
        ("[n-2,2]", (n - 2, 2)),
        ("[n-3,3]", (n - 3, 3)),
        ("[n-2,1^2]", (n - 2, 1, 1)),
        ("[n-3,2,1]", (n - 3, 2, 1)),
        ("[n-3,1^3]", (n - 3, 1, 1, 1)),
    ]
    bottom = [
        ("[1^n]", (1,) * n),
        ("[2,1^(n-2)]", (2,) + (1,) * (n - 2)),
        ("[2^2,1^(n-4)]", (2, 2) + (1,) * (n - 4)),
        ("[2^3,1^(n-6)]", (2, 2, 2) + (1,) * (n - 6)),
        ("[3,1^(n-3)]", (3,) + (1,) * (n - 3)),
        ("[3,2,1^(n-5)]", (3, 2) + (1,) * (n - 5)),
        ("[4,1^(n-4)]", (4,) + (1,) * (n - 4)),
    ]
    return [(label, Partition(parts)) for label, parts in top + bottom]


def constituent_table(n, classes):
    """Rows (label, partition, values) of the small shapes evaluated on `classes`."""
    return [
        (label, shape, [mn_character(shape, rho) for rho in classes])
        for label, shape in small_shapes(n)
    ]


def transpose_sign_holds(partition, rho):
    """Whether χ^{λ'}(ρ) = sign(ρ)·χ^λ(ρ)."""
    return mn_character(conjugate(partition), rho) == rho.sign * mn_character(partition, rho)
