from math import factorial

import pytest
from hypothesis import given

from combinatorics import (
    Cell,
    Partition,
    RimHook,
    branching_neighbors,
    conjugate,
    hook_degree,
    hook_lengths,
    partitions_of,
    remove_rim_hook,
    rim_hooks,
)
from combinatorics.partitions import strip_residues
from conftest import partition_strategy
from utils.errors import InvalidArgumentError


def test_partition_init():
    p = Partition.of(4, 2, 1)
    assert p.parts == (4, 2, 1)
    assert p.n == 7
    assert p.length == 3
    assert str(p) == "[4,2,1]"


def test_empty_partition_is_allowed():
    assert Partition(()).n == 0
    assert Partition(()).length == 0


@pytest.mark.parametrize("parts", [(1, 2), (3, 0), (2, -1)])
def test_partition_rejects_bad_parts(parts):
    with pytest.raises(InvalidArgumentError):
        Partition(parts)


def test_cell_is_one_based():
    with pytest.raises(InvalidArgumentError):
        Cell(0, 1)
    p = Partition.of(3, 1)
    assert p.contains(Cell(2, 1))
    assert not p.contains(Cell(2, 2))
    assert len(p.cells()) == 4


def test_partitions_of_five_in_canonical_order():
    assert [p.parts for p in partitions_of(5)] == [
        (5,),
        (4, 1),
        (3, 2),
        (3, 1, 1),
        (2, 2, 1),
        (2, 1, 1, 1),
        (1, 1, 1, 1, 1),
    ]


@pytest.mark.parametrize("n, count", [(1, 1), (4, 5), (10, 42), (20, 627), (27, 3010)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count


@pytest.mark.parametrize("bad", [0, -3])
def test_partitions_of_rejects_non_positive(bad):
    with pytest.raises(InvalidArgumentError):
        partitions_of(bad)


def test_conjugate():
    assert conjugate(Partition.of(4, 2, 1)).parts == (3, 2, 1, 1)
    assert conjugate(Partition.of(5)).parts == (1, 1, 1, 1, 1)


def test_hook_lengths_known_values():
    assert hook_lengths(Partition.of(3, 2)) == [[4, 3, 1], [2, 1]]


@pytest.mark.parametrize(
    "parts, degree",
    [((1,), 1), ((2, 1), 2), ((3, 1), 3), ((2, 2), 2), ((3, 2), 5), ((3, 1, 1), 6), ((4, 2, 1), 35)],
)
def test_hook_degree_known_values(parts, degree):
    assert hook_degree(Partition(parts)) == degree


@pytest.mark.parametrize("n", range(1, 9))
def test_squared_degrees_sum_to_group_order(n):
    assert sum(hook_degree(p) ** 2 for p in partitions_of(n)) == factorial(n)


def test_constituent_degrees_at_27():
    degrees = [hook_degree(Partition(parts)) for parts in [(26, 1), (25, 2), (24, 3)]]
    assert degrees == [26, 324, 2574]


@given(partition_strategy())
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert hook_degree(conjugate(p)) == hook_degree(p)


@given(partition_strategy(max_n=9))
def test_branching_rule_degrees(p):
    grown = branching_neighbors(p, "add")
    assert sum(hook_degree(q) for q in grown) == (p.n + 1) * hook_degree(p)
    if p.n > 1:
        assert sum(hook_degree(q) for q in branching_neighbors(p, "remove")) == hook_degree(p)


def test_branching_neighbors_order():
    p = Partition.of(2, 1)
    assert [q.parts for q in branching_neighbors(p, "add")] == [(3, 1), (2, 2), (2, 1, 1)]
    assert [q.parts for q in branching_neighbors(p, "remove")] == [(2,), (1, 1)]


def test_branching_neighbors_errors():
    with pytest.raises(InvalidArgumentError):
        branching_neighbors(Partition(()), "remove")
    with pytest.raises(InvalidArgumentError):
        branching_neighbors(Partition.of(2), "sideways")


def test_rim_hooks_of_three_two():
    (two,) = rim_hooks(Partition.of(3, 2), 2)
    assert two.cells == (Cell(2, 1), Cell(2, 2))
    assert two.leg_length == 0
    assert remove_rim_hook(Partition.of(3, 2), two).parts == (3,)

    (three,) = rim_hooks(Partition.of(3, 2), 3)
    assert three.cells == (Cell(2, 2), Cell(1, 2), Cell(1, 3))
    assert three.leg_length == 1
    assert three.rows() == [1, 2]
    assert three.columns() == [2, 3]
    assert remove_rim_hook(Partition.of(3, 2), three).parts == (1, 1)


def test_rim_hooks_sorted_by_start_cell():
    hooks = rim_hooks(Partition.of(3, 3, 3), 1)
    assert len(hooks) == 1
    hooks = rim_hooks(Partition.of(4, 2, 2, 1), 2)
    starts = [(h.start.row, h.start.col) for h in hooks]
    assert starts == sorted(starts)


def test_rim_hook_rejects_bad_steps():
    with pytest.raises(InvalidArgumentError):
        RimHook((Cell(1, 1), Cell(2, 1)))
    with pytest.raises(InvalidArgumentError):
        RimHook(())


def test_remove_rim_hook_rejects_non_strips():
    p = Partition.of(3, 2)
    with pytest.raises(InvalidArgumentError):
        remove_rim_hook(p, RimHook((Cell(1, 1), Cell(1, 2))))
    with pytest.raises(InvalidArgumentError):
        remove_rim_hook(p, RimHook((Cell(2, 3),)))


def test_rim_hook_length_must_be_positive():
    with pytest.raises(InvalidArgumentError):
        rim_hooks(Partition.of(2), 0)


@given(partition_strategy(max_n=12))
def test_removing_each_rim_hook_leaves_the_strip_residue(p):
    for length in range(1, p.n + 1):
        hooks = rim_hooks(p, length)
        residues = strip_residues(p.parts, length)
        assert len(hooks) == len(residues)
        left = sorted(remove_rim_hook(p, hook).parts for hook in hooks)
        assert left == sorted(residue for residue, _ in residues)
        for hook in hooks:
            assert hook.length == length


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 26))
def test_long_rim_hooks_are_unique(n):
    for p in partitions_of(n):
        for length in range(1, n + 1):
            count = len(rim_hooks(p, length))
            assert count <= n // length
            if 2 * length > n:
                assert count <= 1
