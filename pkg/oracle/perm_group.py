import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from sympy.combinatorics import Permutation

from combinatorics.characters import CycleType
from utils.errors import InvalidArgumentError

logger = logging.getLogger(__name__)


def cycle_type_of(perm):
    """Cycle type of a permutation in one-line notation (0-based tuple)."""
    structure = Permutation(list(perm)).cycle_structure
    parts = [length for length, count in structure.items() for _ in range(count)]
    # pad fixed points sympy may leave implicit
    parts.extend([1] * (len(perm) - sum(parts)))
    return CycleType(tuple(parts))


def compose(u, v):
    """u∘v: apply v first, then u."""
    return tuple(u[i] for i in v)


def inverse(perm):
    result = [0] * len(perm)
    for i, image in enumerate(perm):
        result[image] = i
    return tuple(result)


def quotient(u, v):
    """u·v⁻¹."""
    return compose(u, inverse(v))


@dataclass
class PermGroupTable:
    """Every element of Sym(n) with its conjugacy class."""

    n: int
    elements: list
    class_index: dict

    @classmethod
    def build(cls, n):
        if n < 1:
            raise InvalidArgumentError(f"Sym(n) needs n >= 1, got {n}.")
        elements = list(itertools.permutations(range(n)))
        class_index = {perm: cycle_type_of(perm) for perm in elements}
        logger.debug("Built Sym(%d) with %d elements", n, len(elements))
        return cls(n, elements, class_index)

    def class_of(self, perm):
        return self.class_index[perm]

    def class_sizes(self):
        """Cycle type -> number of elements, counted directly."""
        return Counter(self.class_index.values())

    def position(self):
        """Element -> row index in `elements`."""
        return {perm: index for index, perm in enumerate(self.elements)}
