from .perm_group import PermGroupTable, compose, cycle_type_of, inverse, quotient
from .brute import (
    brute_cayley_spectrum,
    brute_max_coclique,
    canonical_coclique,
    derangement_graph,
    dihedral_derangement_bound,
    is_coclique,
    max_clique_size,
    orthogonality_check,
    predicted_spectrum,
    spectra_match,
)
