"""
Brute-force cross-checks that build Sym(n) explicitly.

None of this is needed for a certificate; it confirms the character-based
computations where the group is small enough to write down.
"""

import itertools
import logging
from collections import Counter
from math import factorial, lcm

import networkx as nx
import numpy as np

from combinatorics.characters import character_table, class_size
from combinatorics.derangements import derangement_classes, is_t_derangement_type
from combinatorics.partitions import hook_degree, partitions_of
from spectra.eigenvalues import clique_coclique_bound, weighted_eigenvalue
from oracle.perm_group import PermGroupTable, compose, cycle_type_of, quotient
from utils.config import get_settings
from utils.errors import CertificationFailure, InvalidArgumentError, OracleRefusal

logger = logging.getLogger(__name__)

FLOAT_TOLERANCE = 1e-9
FLOAT = "float"
EXACT = "exact"
# the exact route multiplies n!×n! integer matrices in Python
EXACT_ROUTE_MAX_N = 5


def _refuse_above(n, cap, what):
    if n > cap:
        raise OracleRefusal(f"{what} is capped at n = {cap}, got {n}; use a certificate for larger n.")


def predicted_spectrum(weighting):
    """Character-derived eigenvalues, each repeated deg(λ)² times, sorted."""
    values = []
    for partition in partitions_of(weighting.n):
        values.extend([weighted_eigenvalue(partition, weighting)] * hook_degree(partition) ** 2)
    return sorted(values)


def _weight_matrix(table, weights, dtype):
    """Entry (u, v) is the weight of the class of u·v⁻¹; `weights` maps cycle type to weight."""
    size = len(table.elements)
    matrix = np.zeros((size, size), dtype=dtype)
    for row, u in enumerate(table.elements):
        for col, v in enumerate(table.elements):
            weight = weights.get(table.class_of(quotient(u, v)))
            if weight:
                matrix[row, col] = weight
    return matrix


def _exact_spectrum(table, weighting):
    """
    Confirms the predicted multiset on the scaled integer matrix B = L·A:
    the product of (B - Lξ I) over distinct ξ vanishes, and the power traces
    tr(B^k) match the predicted multiplicities.
    """
    weights = {rho: weighting.element_weight(i) for i, rho in enumerate(weighting.classes)}
    scale = lcm(*(weight.denominator for weight in weights.values())) if weights else 1
    scaled = _weight_matrix(table, {rho: int(weight * scale) for rho, weight in weights.items()}, object)
    predicted = predicted_spectrum(weighting)
    counts = Counter(value * scale for value in predicted)
    size = scaled.shape[0]
    identity = np.identity(size, dtype=object)

    product = identity.copy()
    for value in counts:
        if value.denominator != 1:
            raise CertificationFailure(f"Scaled eigenvalue {value} is not an integer.")
        product = product.dot(scaled - int(value) * identity)
    if any(entry != 0 for entry in product.flat):
        raise CertificationFailure("The weighted matrix has an eigenvalue outside the predicted set.")

    power = identity.copy()
    for k in range(1, len(counts)):
        power = power.dot(scaled)
        trace = sum(power[i, i] for i in range(size))
        expected = sum(multiplicity * value ** k for value, multiplicity in counts.items())
        if trace != expected:
            raise CertificationFailure(f"tr(B^{k}) = {trace}, predicted {expected}.")
    return predicted


def brute_cayley_spectrum(n, weighting, method=None, max_n=None):
    """
    Eigenvalues of the explicit n!×n! weighted matrix.

    method 'float' returns numpy eigenvalues (sorted floats); method 'exact'
    returns the predicted Fractions after checking them on the integer matrix.
    `max_n` overrides CERT_ORACLE_MAX_N.
    """
    settings = get_settings()
    method = method or settings.eigen_method
    _refuse_above(n, max_n or settings.oracle_max_n, "Dense spectrum")
    if weighting.n != n:
        raise InvalidArgumentError(f"Weighting is for Sym({weighting.n}), not Sym({n}).")

    table = PermGroupTable.build(n)
    if method == EXACT:
        _refuse_above(n, EXACT_ROUTE_MAX_N, "The exact dense route")
        return _exact_spectrum(table, weighting)
    if method != FLOAT:
        raise InvalidArgumentError(f"method must be '{FLOAT}' or '{EXACT}', got {method!r}.")

    weights = {rho: float(weighting.element_weight(i)) for i, rho in enumerate(weighting.classes)}
    matrix = _weight_matrix(table, weights, float)
    return sorted(float(value) for value in np.linalg.eigvalsh(matrix))


def spectra_match(brute, predicted, tolerance=FLOAT_TOLERANCE):
    """Whether two sorted eigenvalue lists agree entrywise within `tolerance`."""
    return len(brute) == len(predicted) and all(
        abs(float(a) - float(b)) <= tolerance for a, b in zip(brute, predicted)
    )


def orthogonality_check(n, rows=None):
    """
    Row and column orthogonality of the character table of Sym(n).

    `rows` replaces the computed table, so a corrupted table can be checked.
    """
    if n > 9:
        raise InvalidArgumentError(f"orthogonality_check is meant for n <= 9, got {n}.")
    shapes, classes, computed = character_table(n)
    rows = computed if rows is None else rows
    order = factorial(n)
    sizes = [class_size(rho) for rho in classes]

    for i, j in itertools.combinations_with_replacement(range(len(shapes)), 2):
        inner = sum(size * a * b for size, a, b in zip(sizes, rows[i], rows[j]))
        if inner != (order if i == j else 0):
            logger.info("Row orthogonality fails for %s, %s", shapes[i], shapes[j])
            return False

    for k, l in itertools.combinations_with_replacement(range(len(classes)), 2):
        inner = sum(row[k] * row[l] for row in rows)
        if inner != (order // sizes[k] if k == l else 0):
            logger.info("Column orthogonality fails for %s, %s", classes[k], classes[l])
            return False
    return True


def canonical_coclique(n, max_n=None):
    """
    The permutations fixing {0,1,2} setwise: 6(n-3)! of them, pairwise 3-setwise intersecting.

    Capped at CERT_ORACLE_MAX_N unless `max_n` is given.
    """
    if n < 4:
        raise InvalidArgumentError(f"canonical_coclique needs n >= 4, got {n}.")
    _refuse_above(n, max_n or get_settings().oracle_max_n, "The canonical coclique check")
    family = set()
    for head in itertools.permutations(range(3)):
        for tail in itertools.permutations(range(3, n)):
            family.add(head + tail)
    triple = {0, 1, 2}
    if any({perm[i] for i in triple} != triple for perm in family):
        raise CertificationFailure("A member of the stabiliser moves {0,1,2}.")
    return frozenset(family)


def is_coclique(n, family, t=3):
    """True when no two members differ by a t-derangement."""
    family = list(family)
    if any(len(perm) != n for perm in family):
        raise InvalidArgumentError(f"Every member must be a permutation of {n} points.")
    quotients = {quotient(u, v) for u, v in itertools.combinations(family, 2)}
    return not any(is_t_derangement_type(cycle_type_of(q), t) for q in quotients)


def derangement_graph(n, t=3, max_n=None):
    """Cayley graph on Sym(n) whose connection set is the t-derangements."""
    _refuse_above(n, max_n or get_settings().mis_max_n, "The derangement graph")
    connection = {rho for rho, _ in derangement_classes(n, t)}
    table = PermGroupTable.build(n)
    graph = nx.Graph()
    graph.add_nodes_from(table.elements)
    generators = [perm for perm in table.elements if table.class_of(perm) in connection]
    for u in table.elements:
        for s in generators:
            graph.add_edge(u, compose(s, u))
    return graph


def _greedy_colour_order(candidates, adjacency):
    """
    Greedy colouring of `candidates` (a bitset) in the complement-clique sense.

    Returns vertices with their colour numbers, colours ascending; a vertex's
    colour bounds the clique size still reachable from it.
    """
    order, bounds = [], []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            vertex = (available & -available).bit_length() - 1
            available &= ~(1 << vertex)
            available &= ~adjacency[vertex]
            uncoloured &= ~(1 << vertex)
            order.append(vertex)
            bounds.append(colour)
    return order, bounds


def max_clique_size(adjacency, candidates):
    """Exact maximum clique in the graph given by bitset `adjacency`, restricted to `candidates`."""
    best = 0

    def expand(size, candidates):
        nonlocal best
        order, bounds = _greedy_colour_order(candidates, adjacency)
        for vertex, bound in zip(reversed(order), reversed(bounds)):
            if size + bound <= best:
                return
            remaining = candidates & adjacency[vertex]
            if remaining:
                expand(size + 1, remaining)
            elif size + 1 > best:
                best = size + 1
            candidates &= ~(1 << vertex)

    if candidates:
        expand(0, candidates)
    return best


def brute_max_coclique(n, max_n=None):
    """Independence number of the 3-derangement graph by exact branch and bound."""
    _refuse_above(n, max_n or get_settings().mis_max_n, "Exact coclique search")
    if n < 3:
        raise InvalidArgumentError(f"3-derangements need n >= 3, got {n}.")
    graph = derangement_graph(n, 3, max_n=max_n)

    # vertices by descending degree; cocliques of the graph are cliques of the complement
    vertices = sorted(graph.nodes, key=lambda v: (-graph.degree(v), v))
    index = {v: i for i, v in enumerate(vertices)}
    everyone = (1 << len(vertices)) - 1
    adjacency = []
    for v in vertices:
        neighbours = 0
        for u in graph.neighbors(v):
            neighbours |= 1 << index[u]
        adjacency.append(everyone & ~neighbours & ~(1 << index[v]))

    # the graph is vertex-transitive, so some maximum coclique contains the identity
    identity = index[tuple(range(n))]
    size = 1 + max_clique_size(adjacency, adjacency[identity])
    logger.info("Independence number of the 3-derangement graph at n=%d: %d", n, size)
    return size


def dihedral_derangement_bound(n):
    """
    Clique-coclique bound for the dihedral group of the n-gon acting on vertices.

    The n rotations form a clique of derangements, so intersecting families
    have at most 2n / n = 2 elements.
    """
    if n < 3:
        raise InvalidArgumentError(f"The n-gon needs n >= 3, got {n}.")
    rotations = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    # distinct rotations never agree on a point, so they are pairwise adjacent
    if any(any(a[i] == b[i] for i in range(n)) for a, b in itertools.combinations(rotations, 2)):
        raise CertificationFailure("Two rotations agree on a vertex.")
    return clique_coclique_bound(2 * n, len(rotations))
