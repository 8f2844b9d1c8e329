"""
Integer partitions and Young diagrams.

Partitions are immutable tuples of weakly decreasing positive parts. Rows and
columns of a diagram are addressed with 1-based (row, col) cells, row 1 at the
top. Canonical order is lexicographically decreasing on the part lists.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod

from utils.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

ADD = "add"
REMOVE = "remove"


@dataclass(frozen=True)
class Partition:
    """A partition of n, also used as its Young diagram."""

    parts: tuple
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(part) for part in self.parts)
        if any(part < 1 for part in parts):
            raise InvalidArgumentError(f"Partition parts must be positive, got {list(parts)}.")
        if any(later > earlier for earlier, later in zip(parts, parts[1:])):
            raise InvalidArgumentError(f"Partition parts must be weakly decreasing, got {list(parts)}.")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def of(cls, *parts):
        """Shorthand: Partition.of(4, 2, 1)."""
        return cls(tuple(parts))

    @property
    def length(self):
        """Number of rows."""
        return len(self.parts)

    def row(self, index):
        """Length of the 1-based row `index` (0 past the last row)."""
        return self.parts[index - 1] if 1 <= index <= len(self.parts) else 0

    def contains(self, cell):
        return cell.row >= 1 and cell.col >= 1 and cell.col <= self.row(cell.row)

    def cells(self):
        """Every cell, row by row."""
        return [Cell(r, c) for r, length in enumerate(self.parts, start=1) for c in range(1, length + 1)]

    def sort_key(self):
        """Key for canonical (lexicographically decreasing) order; sort with reverse=True."""
        return self.parts

    def to_json(self):
        return list(self.parts)

    def __str__(self):
        return "[" + ",".join(str(part) for part in self.parts) + "]"


@dataclass(frozen=True)
class Cell:
    """A box of a Young diagram at 1-based (row, col)."""

    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise InvalidArgumentError(f"Cell coordinates are 1-based, got ({self.row}, {self.col}).")


@dataclass(frozen=True)
class RimHook:
    """
    A border strip: cells on a path from its lowest-leftmost cell to its
    highest-rightmost cell using only upward and rightward steps.
    """

    cells: tuple

    def __post_init__(self):
        cells = tuple(self.cells)
        if not cells:
            raise InvalidArgumentError("A rim hook has at least one cell.")
        for here, step in zip(cells, cells[1:]):
            up = step.row == here.row - 1 and step.col == here.col
            right = step.row == here.row and step.col == here.col + 1
            if not (up or right):
                raise InvalidArgumentError(
                    f"Rim hook cells must step up or right, got ({here.row},{here.col}) -> ({step.row},{step.col})."
                )
        object.__setattr__(self, "cells", cells)

    @property
    def length(self):
        return len(self.cells)

    @property
    def leg_length(self):
        """Rows spanned minus one."""
        return len({cell.row for cell in self.cells}) - 1

    @property
    def start(self):
        return self.cells[0]

    def rows(self):
        return sorted({cell.row for cell in self.cells})

    def columns(self):
        return sorted({cell.col for cell in self.cells})


def _partitions_bounded(n, largest):
    """Yields partitions of n with parts at most `largest`, in decreasing lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n):
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n))


def partitions_of(n):
    """
    All partitions of n in canonical order: [n] first, [1^n] last.

    Raises InvalidArgumentError for n < 1.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"partitions_of needs a positive integer, got {n!r}.")
    result = list(_partitions_cached(n))
    logger.debug("Enumerated %d partitions of %d", len(result), n)
    return result


def conjugate_parts(parts):
    """Column lengths of the diagram with row lengths `parts`."""
    if not parts:
        return ()
    return tuple(sum(1 for part in parts if part > col) for col in range(parts[0]))


def conjugate(partition):
    """The transposed diagram."""
    return Partition(conjugate_parts(partition.parts))


def hook_lengths(partition):
    """Hook length of every cell, as rows of integers."""
    columns = conjugate_parts(partition.parts)
    return [
        [(length - col - 1) + (columns[col] - row - 1) + 1 for col in range(length)]
        for row, length in enumerate(partition.parts)
    ]


@lru_cache(maxsize=None)
def _hook_degree(parts):
    partition = Partition(parts)
    return factorial(partition.n) // prod(h for row in hook_lengths(partition) for h in row)


def hook_degree(partition):
    """Dimension of the Specht module: n! divided by the product of the hook lengths."""
    return _hook_degree(partition.parts)


def _strip_removals(parts, length):
    """
    Finds every border strip of `length` cells.

    Each strip corresponds to a cell (i, j) (0-based) whose hook has `length`
    cells; the strip runs from the bottom of column j to the end of row i.
    Yields (i, j, bottom_row, residue_parts).
    """
    columns = conjugate_parts(parts)
    for i, row_length in enumerate(parts):
        for j in range(row_length):
            bottom = columns[j] - 1
            if (row_length - j) + (bottom - i) != length:
                continue
            residue = list(parts)
            for r in range(i, bottom):
                residue[r] = parts[r + 1] - 1
            residue[bottom] = j
            yield i, j, bottom, tuple(part for part in residue if part > 0)


def strip_residues(parts, length):
    """(residue parts, leg length) for each border strip of `length` cells; plain tuples for the character recursion."""
    return [(residue, bottom - i) for i, _, bottom, residue in _strip_removals(parts, length)]


def rim_hooks(partition, length):
    """
    Every rim hook of exactly `length` cells whose removal leaves a partition.

    Ordered by starting cell, row then column.
    """
    if length < 1:
        raise InvalidArgumentError(f"Rim hook length must be positive, got {length}.")
    hooks = []
    parts = partition.parts
    for i, j, bottom, residue in _strip_removals(parts, length):
        cells = []
        for r in range(bottom, i - 1, -1):
            first_col = j if r == bottom else parts[r + 1] - 1
            cells.extend(Cell(r + 1, c + 1) for c in range(first_col, parts[r]))
        hooks.append(RimHook(tuple(cells)))
    hooks.sort(key=lambda hook: (hook.start.row, hook.start.col))
    return hooks


def remove_rim_hook(partition, hook):
    """
    The partition left after deleting the cells of `hook`.

    Raises InvalidArgumentError if `hook` is not a rim hook of `partition`.
    """
    removed = {}
    for cell in hook.cells:
        if not partition.contains(cell):
            raise InvalidArgumentError(f"Cell ({cell.row},{cell.col}) is not in {partition}.")
        removed.setdefault(cell.row, []).append(cell.col)

    residue = list(partition.parts)
    for row, cols in removed.items():
        cols.sort()
        length = partition.row(row)
        # removed cells must be the rightmost run of the row
        if cols != list(range(length - len(cols) + 1, length + 1)):
            raise InvalidArgumentError(f"{hook} does not remove the end of row {row} of {partition}.")
        residue[row - 1] = length - len(cols)

    if any(later > earlier for earlier, later in zip(residue, residue[1:])):
        raise InvalidArgumentError(f"Removing the strip from {partition} does not leave a partition.")
    return Partition(tuple(part for part in residue if part > 0))


def branching_neighbors(partition, direction):
    """
    Partitions reachable by adding (direction 'add') or removing ('remove')
    one corner cell, in canonical order.
    """
    parts = partition.parts
    neighbours = []
    if direction == ADD:
        for i in range(len(parts) + 1):
            current = parts[i] if i < len(parts) else 0
            if i == 0 or parts[i - 1] > current:
                grown = list(parts) + ([0] if i == len(parts) else [])
                grown[i] += 1
                neighbours.append(Partition(tuple(grown)))
    elif direction == REMOVE:
        if not parts:
            raise InvalidArgumentError("The empty partition has no cell to remove.")
        for i, part in enumerate(parts):
            if i == len(parts) - 1 or part > parts[i + 1]:
                shrunk = list(parts)
                shrunk[i] -= 1
                neighbours.append(Partition(tuple(p for p in shrunk if p > 0)))
    else:
        raise InvalidArgumentError(f"direction must be '{ADD}' or '{REMOVE}', got {direction!r}.")
    return sorted(neighbours, key=Partition.sort_key, reverse=True)


def main():
    """Small demonstration of the partition helpers."""
    for partition in partitions_of(5):
        hooks = ", ".join(f"len {h.length} leg {h.leg_length}" for h in rim_hooks(partition, 3))
        print(f"{str(partition):<14} degree {hook_degree(partition):>3}  3-hooks: {hooks or '-'}")


if __name__ == "__main__":
    main()
