"""Spectral graph analysis on dense adjacency matrices.

Eigenvector components of a graph's adjacency matrix are computed along
several independent routes (determinants of node-deleted submatrices, the
squared eigenvalue equation, walk expansions, resolvents) and cross-checked
against a dense eigensolver.  Fundamental weights, their dual, spacing
bounds, complement-graph coupling and a large suite of spectral inequalities
round out the library.  Everything is pure-function style over immutable
graph values and safe for concurrent reads.
"""

from .graphs import (
    Graph,
    GraphStats,
    complement,
    complete,
    complete_bipartite,
    connected,
    cycle,
    delete_node,
    delete_node_pair,
    erdos_renyi,
    generate,
    parse_graph,
    path,
    star,
    to_adjacency_text,
    to_edge_list_text,
)
from .polynomials import IntPolynomial
from .spectral import (
    SpectralDecomposition,
    char_poly_derivative_at,
    char_poly_exact,
    decompose,
    det_shift,
    matrix_power_entry,
    walk_counts,
)
from .centrality import (
    CentralityReport,
    RiDecomposition,
    beta_normalization_check,
    centrality_report,
    component_product,
    r_decomposition,
    redundancy,
    resolvent_squared,
    signed_components,
    squared_component_det,
    squared_component_mult2,
    walk_expansion_matrix,
    walk_expansion_squared,
)
from .weights import (
    ComplementCoupling,
    HadamardCheck,
    SpacingBounds,
    WeightProfile,
    complement_coupling,
    generic_spacing_fraction,
    hadamard_diagonalizes_complete,
    identity_suite,
    spacing_bounds,
    sylvester_hadamard,
    w1_bounds_check,
    weight_profile,
)
from .bounds import (
    BoundEntry,
    BoundReport,
    SiProfile,
    max_component_lb,
    min_over_k_and_i_bounds,
    nikiforov_extended,
    si_profile,
    upper_bound_squared,
    walk_minmax_bounds,
)
from .fixtures import benchmark_graph, benchmark_polynomials

__version__ = "1.0.0"

__all__ = [
    "Graph",
    "GraphStats",
    "IntPolynomial",
    "SpectralDecomposition",
    "CentralityReport",
    "RiDecomposition",
    "WeightProfile",
    "SpacingBounds",
    "ComplementCoupling",
    "HadamardCheck",
    "BoundEntry",
    "BoundReport",
    "SiProfile",
    "benchmark_graph",
    "benchmark_polynomials",
    "beta_normalization_check",
    "centrality_report",
    "char_poly_derivative_at",
    "char_poly_exact",
    "complement",
    "complement_coupling",
    "complete",
    "complete_bipartite",
    "component_product",
    "connected",
    "cycle",
    "decompose",
    "delete_node",
    "delete_node_pair",
    "det_shift",
    "erdos_renyi",
    "generate",
    "generic_spacing_fraction",
    "hadamard_diagonalizes_complete",
    "identity_suite",
    "matrix_power_entry",
    "max_component_lb",
    "min_over_k_and_i_bounds",
    "nikiforov_extended",
    "parse_graph",
    "path",
    "r_decomposition",
    "redundancy",
    "resolvent_squared",
    "si_profile",
    "signed_components",
    "spacing_bounds",
    "squared_component_det",
    "squared_component_mult2",
    "star",
    "sylvester_hadamard",
    "to_adjacency_text",
    "to_edge_list_text",
    "upper_bound_squared",
    "w1_bounds_check",
    "walk_counts",
    "walk_expansion_squared",
    "walk_minmax_bounds",
    "weight_profile",
]
