"""Uniform sampling of simple k-uniform hypergraphs with a given degree sequence.

A hypergraph is encoded as a bipartite graph (nodes on the left, edges on
the right). Any sampler for bipartite graphs with the matching degrees
becomes a hypergraph sampler by rejecting draws in which two right nodes
share a neighborhood.
"""

from hypersample.core import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    Hypergraph,
    HypergraphInstance,
    RngSeed,
    canonicalize,
    validate_instance,
)
from hypersample.simplicity import NotHSimple, is_h_simple, phi
from hypersample.config_model import (
    config_sample_hypergraph,
    expected_trials_estimate,
    project,
    random_configuration,
)
from hypersample.switch_chain import ChainState, initial_graph, switch_sample, switch_step
from hypersample.rejection import (
    RejectionStats,
    SamplerHandle,
    fpaus_cap,
    geometric_tail_check,
    hypergraph_sampling,
)
from hypersample.bounds import (
    BoundsReport,
    bounds_report,
    c0_condition,
    gmw_log_count,
    irregular_simplicity_bound,
    mixing_budget_irregular,
    mixing_budget_regular,
    regular_simplicity_bound,
    tv_output_bound,
)
from hypersample.oracle import (
    OracleResult,
    enumerate_bipartite,
    exact_constants,
    exact_uniform_handle,
    verify_proposition_balanced,
)
from hypersample.stats import chi_square_uniformity, empirical_distribution, tv_distance

__version__ = "0.1.0"
