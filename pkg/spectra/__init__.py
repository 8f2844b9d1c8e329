from .weighting import CUSTOM, EVEN, ODD, Weighting
from .eigenvalues import (
    clique_coclique_bound,
    large_degree_bound,
    normal_cayley_eigenvalue,
    ratio_bound,
    weighted_eigenvalue,
)
from .spectrum import EXACT, HYBRID, SpectrumReport, SpectrumRow, default_threshold, full_spectrum
