"""Graph search on vertex-numbered graphs, traversal predicates and
enumeration oracles, order-type bounds in ordinal arithmetic, and the
finite witness constructions that realize those bounds."""

from .graph import (
    DisconnectedGraphError,
    GraphFormatError,
    OrderedGraph,
    Traversal,
    component_excluding,
    deserialize,
    dot_export,
    induced_subgraph,
    is_connected,
    neighbors,
    random_connected_graph,
    relabel,
    serialize,
)
from .ordinal import Ordinal, OrdinalParseError, cofinality, fundamental_sequence, omega_power, omega_quot_rem, zeta
from .predicates import (
    TraversalSet,
    closure_samples,
    colex_compare_inverse,
    enumerate_traversals,
    has_decreasing_neighbors,
    is_breadth_first,
    is_depth_first,
    is_traversal,
    level_decomposition,
    lex_compare,
    verify_colex_max,
    verify_lex_min,
    verify_quotient_stability,
    verify_subset_stability,
)
from .search import (
    BfsTrace,
    LeastNeighborMap,
    SearchTrace,
    alt_search,
    bfs_search,
    deterministic_search,
    least_neighbor_map,
    traversal_tree,
)
from .witness import (
    WitnessBuild,
    WitnessVerdict,
    build_bfs_tree_witness,
    build_padded_graph,
    build_zeta_witness,
    format_manifest,
    verify_witness,
)

__version__ = "0.1.0"
