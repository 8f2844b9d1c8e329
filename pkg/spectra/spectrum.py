import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from combinatorics.partitions import Partition, hook_degree, partitions_of
from spectra.eigenvalues import large_degree_bound, weighted_eigenvalue
from spectra.weighting import EVEN, ODD
from utils.config import get_settings
from utils.errors import CertificationFailure, InvalidArgumentError
from utils.input_parser import InputParser

logger = logging.getLogger(__name__)

EXACT = "exact"
HYBRID = "hybrid"
MODES = (EXACT, HYBRID)

# regimes a row can be covered by
COMPUTED = "computed"
BOUNDED = "bounded"


def default_threshold(n, parity_case):
    """Degree cut-off below which the small shapes are evaluated exactly in hybrid mode."""
    if parity_case == ODD:
        return 5 * comb(n, 3)
    if parity_case == EVEN:
        return 3 * comb(n, 3)
    raise InvalidArgumentError("Custom weightings need an explicit hybrid threshold.")


@dataclass(frozen=True)
class SpectrumRow:
    partition: Partition
    degree: int
    eigenvalue: object  # Fraction, or None for bounded rows
    regime: str = COMPUTED


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalue of every irreducible, with the extremes and who attains them."""

    n: int
    weighting: object
    rows: tuple
    min_value: object
    max_value: object
    min_attainers: tuple
    max_attainers: tuple
    mode: str = EXACT
    threshold: int = None
    large_degree_bound: object = None
    computed_count: int = field(default=0)

    def eigenvalue_of(self, partition):
        for row in self.rows:
            if row.partition == partition:
                return row.eigenvalue
        raise KeyError(str(partition))

    def to_dict(self):
        """JSON-ready form; rationals as 'p/q' strings, big integers as decimal strings."""
        fmt = InputParser.format_rational
        params = None
        if self.weighting.params is not None:
            t, s = self.weighting.params
            params = {"t": fmt(t), "s": fmt(s)}
        return {
            "n": self.n,
            "case": self.weighting.parity_case,
            "params": params,
            "classes": [rho.to_json() for rho in self.weighting.classes],
            "omegas": [fmt(omega) for omega in self.weighting.omegas],
            "rows": [
                {
                    "partition": row.partition.to_json(),
                    "degree": str(row.degree),
                    "eigenvalue": None if row.eigenvalue is None else fmt(row.eigenvalue),
                    "regime": row.regime,
                }
                for row in self.rows
            ],
            "min": fmt(self.min_value),
            "max": fmt(self.max_value),
            "minAttainers": [p.to_json() for p in self.min_attainers],
            "maxAttainers": [p.to_json() for p in self.max_attainers],
            "mode": self.mode,
            "threshold": None if self.threshold is None else str(self.threshold),
            "largeDegreeBound": None if self.large_degree_bound is None else fmt(self.large_degree_bound),
        }


def _evaluate_chunk(job):
    """Worker entry: eigenvalues for a slice of partitions. Module level so it pickles."""
    weighting, chunk, threshold = job
    results = []
    for parts in chunk:
        partition = Partition(parts)
        degree = hook_degree(partition)
        if threshold is not None and degree >= threshold:
            results.append((parts, degree, None))
        else:
            results.append((parts, degree, weighted_eigenvalue(partition, weighting)))
    return results


def _chunks(items, count):
    size = max(1, -(-len(items) // count))
    return [items[start:start + size] for start in range(0, len(items), size)]


def full_spectrum(weighting, mode=EXACT, threshold=None, workers=None):
    """
    Eigenvalues of the weighted matrix for every λ ⊢ n.

    Exact mode evaluates each λ. Hybrid mode evaluates λ with degree below the
    threshold and covers the rest with the large-degree bound, which must be
    below 1.
    """
    if mode not in MODES:
        raise InvalidArgumentError(f"mode must be one of {MODES}, got {mode!r}.")
    if workers is None:
        workers = get_settings().workers

    bound = None
    if mode == HYBRID:
        if threshold is None:
            threshold = default_threshold(weighting.n, weighting.parity_case)
        bound = large_degree_bound(weighting, threshold)
        if bound >= 1:
            raise CertificationFailure(
                f"Large-degree bound {bound} is not below 1 at threshold {threshold}; use exact mode."
            )
    else:
        threshold = None

    shapes = [partition.parts for partition in partitions_of(weighting.n)]
    jobs = [(weighting, chunk, threshold) for chunk in _chunks(shapes, max(1, workers) * 4)]
    logger.info("Evaluating %d shapes of Sym(%d) in %s mode with %d worker(s)", len(shapes), weighting.n, mode, workers)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            evaluated = [row for chunk in executor.map(_evaluate_chunk, jobs) for row in chunk]
    else:
        evaluated = [row for job in jobs for row in _evaluate_chunk(job)]

    rows = tuple(
        SpectrumRow(Partition(parts), degree, value, COMPUTED if value is not None else BOUNDED)
        for parts, degree, value in evaluated
    )
    computed = [row for row in rows if row.eigenvalue is not None]
    if not computed:
        raise InvalidArgumentError(
            f"Threshold {threshold} leaves no shape to evaluate; every row would be bounded."
        )
    min_value = min(row.eigenvalue for row in computed)
    max_value = max(row.eigenvalue for row in computed)

    return SpectrumReport(
        n=weighting.n,
        weighting=weighting,
        rows=rows,
        min_value=min_value,
        max_value=max_value,
        min_attainers=tuple(row.partition for row in computed if row.eigenvalue == min_value),
        max_attainers=tuple(row.partition for row in computed if row.eigenvalue == max_value),
        mode=mode,
        threshold=threshold,
        large_degree_bound=bound,
        computed_count=len(computed),
    )
