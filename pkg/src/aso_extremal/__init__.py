"""Augmented Sombor index: computation, extremal families and exhaustive verification."""

from .canon import canonical_code, canonical_form, canonical_labeling, is_isomorphic
from .connectivity import edge_connectivity, vertex_connectivity
from .enumerate import (
    GraphStream,
    connected_graphs,
    filter_by_connectivity,
    labeled_trees,
    random_connected_graph,
    unicyclic_graphs,
)
from .families import FamilySpec, connectivity_max_bound, construct, join, unicyclic_max_bound
from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    build_graph,
    degree_profile,
    delete_edge,
    disjoint_union,
    has_isolated_edge,
    is_connected,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .index import (
    AsoUndefinedError,
    DeletionDelta,
    aso,
    aso_delta_decomposition,
    compare_h_pairs,
    edge_contribution,
    h_exact,
    so,
)

__version__ = "0.1.0"
