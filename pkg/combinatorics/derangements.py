from combinatorics.characters import class_size, cycle_types_of
from utils.errors import InvalidArgumentError


def _subset_sums(parts):
    """All sums of sub-multisets of `parts`."""
    sums = {0}
    for part in parts:
        sums |= {total + part for total in sums}
    return sums


def is_t_derangement_type(rho, t):
    """True when no sub-multiset of the cycle lengths sums to t, i.e. the class fixes no t-subset."""
    if not 1 <= t <= rho.n:
        raise InvalidArgumentError(f"t must lie in [1, {rho.n}], got {t}.")
    return t not in _subset_sums(rho.parts)


def derangement_classes(n, t):
    """(cycle type, class size) for every t-derangement class of Sym(n), in canonical order."""
    return [(rho, class_size(rho)) for rho in cycle_types_of(n) if is_t_derangement_type(rho, t)]


def derangement_degree(n, t):
    """Number of t-derangements in Sym(n): the valency of the t-derangement graph."""
    return sum(size for _, size in derangement_classes(n, t))
