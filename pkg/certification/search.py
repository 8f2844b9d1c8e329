"""
Weighting search for the n where the two-parameter families are not used.

For a pool of 3-derangement classes the four prescribed eigenvalues are
linear equations in the weights; sympy gives their exact solution set
ω = ω0 + N·z. Strategy "lp" asks scipy's linprog for the z with the largest
margin below C(n,3)-1 and above -1 on every other shape, then rationalises z.
Strategy "grid" handles pools with at most two free parameters by walking z
exactly. Every candidate is checked in exact arithmetic before it is accepted.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy
from scipy.optimize import linprog

from certification.certificate import SEARCH, conclude_certificate
from certification.classes import class_list, parity_of
from certification.weights import constituent_degrees
from combinatorics.characters import mn_character, permutation_character_constituents_3
from combinatorics.derangements import derangement_classes
from combinatorics.partitions import hook_degree, partitions_of
from spectra.spectrum import EXACT, HYBRID, full_spectrum
from spectra.weighting import CUSTOM, EVEN, ODD, Weighting
from utils.config import get_settings
from utils.errors import CertificationFailure, InvalidArgumentError

logger = logging.getLogger(__name__)

LP = "lp"
GRID = "grid"
STRATEGIES = (LP, GRID)

SMALLEST_SEARCH_N = 6
DENOMINATOR_LIMITS = tuple(10 ** k for k in range(13))
MARGIN_TOLERANCE = 1e-9
GRID_LEVELS = 10


@dataclass(frozen=True)
class SearchResult:
    weighting: Weighting
    pool: str
    strategy: str
    attempts: int
    free_parameters: int


class _BudgetExhausted(Exception):
    pass


class _Budget:
    """Counts exact candidate checks against the configured limit."""

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise _BudgetExhausted()


def class_pools(n):
    """
    Named class pools in search order: the parity's five classes, the other
    family's five, their union, then every 3-derangement class.
    """
    own = parity_of(n)
    other = EVEN if own == ODD else ODD
    pools = []
    for name, parity in (("parity", own), ("other-parity", other)):
        try:
            pools.append((name, class_list(n, parity)))
        except InvalidArgumentError as e:
            logger.debug("Skipping %s pool at n=%d: %s", name, n, e)

    if len(pools) == 2:
        union = list(pools[0][1]) + [rho for rho in pools[1][1] if rho not in pools[0][1]]
        pools.append(("union", union))
    pools.append(("all", [rho for rho, _ in derangement_classes(n, 3)]))

    distinct, seen = [], set()
    for name, classes in pools:
        key = frozenset(classes)
        if classes and key not in seen:
            seen.add(key)
            distinct.append((name, classes))
    return distinct


class _PoolSystem:
    """Eigenvalue rows of every shape for one pool, plus the exact solution set of the equalities."""

    def __init__(self, n, classes):
        self.n = n
        self.classes = list(classes)
        self.alpha = constituent_degrees(n)[0]
        trivial, *constituents = permutation_character_constituents_3(n)
        self.pinned = {trivial: Fraction(self.alpha), **{shape: Fraction(-1) for shape in constituents}}

        # rows[k][i] = χ^λ(C_i) / deg λ, so that ξ_λ = rows[k] · ω
        self.shapes = partitions_of(n)
        self.rows = []
        for shape in self.shapes:
            degree = hook_degree(shape)
            self.rows.append([Fraction(mn_character(shape, rho), degree) for rho in self.classes])
        self.free_rows = [row for shape, row in zip(self.shapes, self.rows) if shape not in self.pinned]

        equations = [[mn_character(shape, rho) for rho in self.classes] for shape in self.pinned]
        targets = [value * hook_degree(shape) for shape, value in self.pinned.items()]
        self.particular, self.basis = self._solve(equations, targets)

    @staticmethod
    def _to_fraction(value):
        value = sympy.Rational(value)
        return Fraction(int(value.p), int(value.q))

    def _solve(self, equations, targets):
        matrix = sympy.Matrix(equations)
        rhs = sympy.Matrix([sympy.Integer(int(target)) for target in targets])
        try:
            solution, params = matrix.gauss_jordan_solve(rhs)
        except ValueError:
            return None, []
        particular = solution.subs({param: 0 for param in params})
        basis = [[self._to_fraction(entry) for entry in vector] for vector in matrix.nullspace()]
        return [self._to_fraction(entry) for entry in particular], basis

    @property
    def consistent(self):
        return self.particular is not None

    def omegas(self, z):
        return [
            base + sum((vector[i] * zj for vector, zj in zip(self.basis, z)), Fraction(0))
            for i, base in enumerate(self.particular)
        ]

    def accepts(self, omegas):
        """Exact check of the three eigenvalue conditions."""
        for shape, row in zip(self.shapes, self.rows):
            value = sum((c * w for c, w in zip(row, omegas)), Fraction(0))
            pinned = self.pinned.get(shape)
            if pinned is not None:
                if value != pinned:
                    return False
            elif not -1 < value < self.alpha:
                return False
        return True

    def affine_rows(self):
        """For each unpinned shape: (ξ at z = 0, derivative of ξ along each basis vector)."""
        affine = []
        for row in self.free_rows:
            base = sum((c * w for c, w in zip(row, self.particular)), Fraction(0))
            slopes = [sum((c * v for c, v in zip(row, vector)), Fraction(0)) for vector in self.basis]
            affine.append((base, slopes))
        return affine


def _interval_for_last(affine, fixed, alpha):
    """Open interval of the last parameter keeping every row in (-1, alpha), or None."""
    low, high = None, None
    for base, slopes in affine:
        offset = base + sum((s * z for s, z in zip(slopes, fixed)), Fraction(0))
        slope = slopes[len(fixed)]
        if slope == 0:
            if not -1 < offset < alpha:
                return None
            continue
        a, b = (-1 - offset) / slope, (alpha - offset) / slope
        lower, upper = (a, b) if slope > 0 else (b, a)
        low = lower if low is None else max(low, lower)
        high = upper if high is None else min(high, upper)
    if low is not None and high is not None and low >= high:
        return None
    return low, high


def _simplest_between(low, high):
    """A rational strictly inside (low, high), preferring small denominators."""
    if low is None and high is None:
        return Fraction(0)
    if low is None:
        return Fraction(high.numerator // high.denominator - 1)
    if high is None:
        return Fraction(low.numerator // low.denominator + 1)
    denominator = 1
    while True:
        numerator = (low * denominator).numerator // (low * denominator).denominator + 1
        candidate = Fraction(numerator, denominator)
        if candidate < high:
            return candidate
        denominator *= 2


def _grid_values(radius, levels=GRID_LEVELS):
    """0, then ±radius/2^k multiples in coarse-to-fine order, down to 2^-levels."""
    yield Fraction(0)
    seen = {Fraction(0)}
    for level in range(levels + 1):
        step = Fraction(radius, 2 ** level)
        count = 2 ** level
        for j in range(1, count + 1):
            for value in (j * step, -j * step):
                if value not in seen:
                    seen.add(value)
                    yield value


def _search_grid(system, budget):
    free = len(system.basis)
    if free > 2:
        return None
    if free == 0:
        budget.spend()
        return system.particular if system.accepts(system.particular) else None

    affine = system.affine_rows()
    if free == 1:
        budget.spend()
        interval = _interval_for_last(affine, [], system.alpha)
        if interval is None:
            return None
        omegas = system.omegas([_simplest_between(*interval)])
        return omegas if system.accepts(omegas) else None

    for z1 in _grid_values(4 * system.alpha):
        budget.spend()
        interval = _interval_for_last(affine, [z1], system.alpha)
        if interval is None:
            continue
        omegas = system.omegas([z1, _simplest_between(*interval)])
        if system.accepts(omegas):
            return omegas
    return None


def _search_lp(system, budget):
    free = len(system.basis)
    if free == 0:
        budget.spend()
        return system.particular if system.accepts(system.particular) else None

    affine = system.affine_rows()
    a_ub, b_ub = [], []
    for base, slopes in affine:
        slopes = [float(s) for s in slopes]
        # ξ >= -1 + ε  and  ξ <= α - ε
        a_ub.append([-s for s in slopes] + [1.0])
        b_ub.append(float(1 + base))
        a_ub.append(slopes + [1.0])
        b_ub.append(float(system.alpha - base))

    objective = np.zeros(free + 1)
    objective[-1] = -1.0
    result = linprog(
        objective,
        A_ub=np.array(a_ub),
        b_ub=np.array(b_ub),
        bounds=[(None, None)] * free + [(None, 1.0)],
        method="highs",
    )
    if not result.success:
        logger.debug("linprog failed: %s", result.message)
        return None
    margin = result.x[-1]
    logger.debug("LP margin %.3g with %d free parameters", margin, free)
    if margin <= MARGIN_TOLERANCE:
        return None

    for limit in DENOMINATOR_LIMITS:
        budget.spend()
        z = [Fraction(float(value)).limit_denominator(limit) for value in result.x[:free]]
        omegas = system.omegas(z)
        if system.accepts(omegas):
            return omegas
    return None


def weighting_search(n, budget=None, strategy=LP):
    """
    First weighting, over the class pools in order, whose exact spectrum meets
    the three eigenvalue conditions. Raises CertificationFailure when every
    pool fails or the budget runs out.
    """
    if n < SMALLEST_SEARCH_N:
        raise InvalidArgumentError(f"weighting_search needs n >= {SMALLEST_SEARCH_N}, got {n}.")
    if strategy not in STRATEGIES:
        raise InvalidArgumentError(f"strategy must be one of {STRATEGIES}, got {strategy!r}.")
    budget = _Budget(budget if budget is not None else get_settings().search_budget)
    run = _search_lp if strategy == LP else _search_grid

    try:
        for name, classes in class_pools(n):
            system = _PoolSystem(n, classes)
            if not system.consistent:
                logger.info("Pool %s (%d classes) cannot meet the equalities at n=%d", name, len(classes), n)
                continue
            omegas = run(system, budget)
            if omegas is not None:
                logger.info("Found weighting on pool %s at n=%d after %d checks", name, n, budget.used)
                weighting = Weighting(n, tuple(classes), tuple(omegas), parity_case=CUSTOM)
                return SearchResult(weighting, name, strategy, budget.used, len(system.basis))
            logger.info("Pool %s (%d free parameters) gave nothing at n=%d", name, len(system.basis), n)
    except _BudgetExhausted:
        raise CertificationFailure(f"Search budget of {budget.limit} checks exhausted at n = {n}.") from None

    raise CertificationFailure(f"No weighting found at n = {n} with strategy {strategy}.")


def search_certificate(n, mode=EXACT, budget=None, strategy=LP, workers=None):
    """Certificate from a searched weighting; the spectrum is always evaluated exactly."""
    if mode == HYBRID:
        logger.warning("Searched weightings are verified in exact mode; ignoring hybrid at n=%d", n)
    result = weighting_search(n, budget=budget, strategy=strategy)
    return certificate_from_search(result, workers=workers)


def certificate_from_search(result, workers=None):
    weighting = result.weighting
    spectrum = full_spectrum(weighting, mode=EXACT, workers=workers)
    return conclude_certificate(weighting.n, weighting, spectrum, None, EXACT, SEARCH)
