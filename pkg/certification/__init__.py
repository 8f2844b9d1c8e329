from .classes import class_list, parity_of, selected_classes
from .weights import (
    PolytopePoint,
    constituent_degrees,
    default_point,
    even_polytope_contains,
    even_weights,
    odd_polytope_contains,
    odd_weights,
    polytope_contains,
    weights_for,
)
from .closed_forms import closed_form_small_eigenvalues
from .certificate import (
    Certificate,
    SMALLEST_CERTIFIED_N,
    certify,
    chromatic_number_report,
    closed_form_applies,
    expected_bound,
    large_degree_certificate,
    spectrum_digest,
    verify_weighting,
)
from .search import (
    SMALLEST_SEARCH_N,
    STRATEGIES,
    SearchResult,
    certificate_from_search,
    class_pools,
    search_certificate,
    weighting_search,
)
