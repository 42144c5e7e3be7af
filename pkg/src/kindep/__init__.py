"""Spectral upper bounds on the k-independence number of graphs."""

from .bounds import (
    BoundReport,
    all_bounds,
    alternating_bound,
    antipodal_bound,
    antipodal_raw_bound,
    best_bound,
    cvetkovic,
    diameter_from_alternating,
    diameter_from_quadratic,
    hoffman,
    nonnegative_ratio_bound,
    partition_quotient,
    polynomial_count_bound,
    polynomial_ratio_bound,
    power_count_bound,
    quadratic_ratio_bound,
    shifted_sum_power_bound,
    sum_power_bound,
    tight_quadratic_quotient,
    walk_regular_bound,
)
from .graphs import (
    DistanceInfo,
    Graph,
    bipartite_minus_matching,
    catalog_names,
    complete,
    cycle,
    distances,
    from_edge_list,
    from_text,
    generalized_petersen,
    is_regular,
    johnson,
    load,
    named,
    power_graph,
    save,
    to_text,
)
from .oracle import ExactResult, exact_alpha_k, exact_diameter
from .polynomials import (
    Poly,
    PredistanceFamily,
    alternating_polynomial,
    gap_weighted_inner_product,
    optimal_quadratic,
    predistance_family,
    sum_power_poly,
    trace_inner_product,
)
from .spectra import (
    PolyStats,
    Spectrum,
    diag_powers,
    eigendecompose,
    group_spectrum,
    is_walk_regular,
    poly_stats,
)

__version__ = "0.1.0"
