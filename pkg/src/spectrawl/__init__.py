"""spectrawl: graph expressivity toolkit.

Three graph-discrimination mechanisms under one roof, built to cross-validate
each other: 1-WL color refinement, adjacency-spectrum separability tests, and
fixed-coefficient GNN modules driven by closed-walk counts (equivalently, by
the variance of a filtered white input).
"""

from .discriminate import (
    CSL_FILTER,
    PAIR_FILTER,
    CslSpec,
    DiscriminationReport,
    PairConfig,
    anonymous_embed,
    csl_base_graph,
    csl_classify,
    csl_generate,
    csl_score,
    discriminate_pair,
    embeddings_isomorphic,
    run_benchmark,
)
from .gnn import (
    LINEAR,
    RELU,
    SQUARE,
    FilterParams,
    Nonlinearity,
    StochasticConfig,
    closed_walk_count,
    constant_input_response,
    diag_powers,
    diagonal_module,
    gnn_layer,
    graph_filter,
    self_convolve,
    spectral_diagonal_module,
    stochastic_variance,
)
from .graphs import (
    Graph,
    GraphCorpusEntry,
    Permutation,
    apply_permutation,
    corpus,
    corpus_graph,
    erdos_renyi,
    from_edge_list,
    is_isomorphic_bruteforce,
    load_graph,
    save_graph,
)
from .spectral import (
    ConditionReport,
    Eigenspace,
    Spectrum,
    abs_eigvec_test,
    check_separability_conditions,
    eigendecompose,
    eigenspace,
    eigenvector_one_products,
    filter_matrix,
    frequency_response,
    isolating_filter,
    spectra_differ,
)
from .wl import WLColoring, wl_distinguish, wl_feature_matrix, wl_refine

__version__ = "0.1.0"

__all__ = [
    "CSL_FILTER",
    "PAIR_FILTER",
    "ConditionReport",
    "CslSpec",
    "DiscriminationReport",
    "Eigenspace",
    "FilterParams",
    "Graph",
    "GraphCorpusEntry",
    "LINEAR",
    "Nonlinearity",
    "PairConfig",
    "Permutation",
    "RELU",
    "SQUARE",
    "Spectrum",
    "StochasticConfig",
    "WLColoring",
    "abs_eigvec_test",
    "anonymous_embed",
    "apply_permutation",
    "check_separability_conditions",
    "closed_walk_count",
    "constant_input_response",
    "corpus",
    "corpus_graph",
    "csl_base_graph",
    "csl_classify",
    "csl_generate",
    "csl_score",
    "diag_powers",
    "diagonal_module",
    "discriminate_pair",
    "eigendecompose",
    "eigenspace",
    "eigenvector_one_products",
    "embeddings_isomorphic",
    "erdos_renyi",
    "filter_matrix",
    "frequency_response",
    "from_edge_list",
    "gnn_layer",
    "graph_filter",
    "is_isomorphic_bruteforce",
    "isolating_filter",
    "load_graph",
    "run_benchmark",
    "save_graph",
    "self_convolve",
    "spectra_differ",
    "spectral_diagonal_module",
    "stochastic_variance",
    "wl_distinguish",
    "wl_feature_matrix",
    "wl_refine",
]
