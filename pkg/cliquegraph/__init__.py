"""Clique graphs of regular, clique regular graphs and their spectra."""

from .core.cliques import (
    CliqueGraphResult,
    build_clique_graph,
    build_line_graph,
    clique_number,
    clique_regular_orders,
    enumerate_cliques_of_order,
    enumerate_maximal_cliques,
    is_clique_regular,
    verify_incidence_identities,
    verify_phi_identity,
)
from .core.graph import Graph, new_graph
from .core.graph6 import parse_graph6, write_graph6
from .core.isomorphism import are_isomorphic
from .core.spectral import (
    Spectrum,
    char_poly_exact,
    degree_bounds,
    interlacing_bounds,
    predicted_clique_charpoly,
    predicted_clique_spectrum,
    spectrum_exact,
    spectrum_numeric,
)
from .core.srg import (
    SrgParams,
    classify_srg,
    clique_graph_srg_classification,
    enumerate_srg_locally_linear_with_srg_clique_graph,
    srg_spectrum_from_params,
)
from .core.theorems import SuiteOptions, run_suite
from .data.families import oa_block_graph, orthogonal_array, rook_graph, triangular_graph
from .data.golay import golay_coset_graph
from .data.quadrangles import gq_collinearity_graph, gq_dual, gq_elliptic, gq_symplectic
from .data.settings import load_settings

__all__ = [
    "CliqueGraphResult",
    "Graph",
    "Spectrum",
    "SrgParams",
    "SuiteOptions",
    "are_isomorphic",
    "build_clique_graph",
    "build_line_graph",
    "char_poly_exact",
    "classify_srg",
    "clique_graph_srg_classification",
    "clique_number",
    "clique_regular_orders",
    "degree_bounds",
    "enumerate_cliques_of_order",
    "enumerate_maximal_cliques",
    "enumerate_srg_locally_linear_with_srg_clique_graph",
    "golay_coset_graph",
    "gq_collinearity_graph",
    "gq_dual",
    "gq_elliptic",
    "gq_symplectic",
    "interlacing_bounds",
    "is_clique_regular",
    "load_settings",
    "new_graph",
    "oa_block_graph",
    "orthogonal_array",
    "parse_graph6",
    "predicted_clique_charpoly",
    "predicted_clique_spectrum",
    "rook_graph",
    "run_suite",
    "spectrum_exact",
    "spectrum_numeric",
    "srg_spectrum_from_params",
    "triangular_graph",
    "verify_incidence_identities",
    "verify_phi_identity",
    "write_graph6",
]
