"""Graph model operations: validation, structure queries, canonical labels."""

from entgraph.graphs.canonical import (
    canonical_form,
    colour_vector,
    count_classes,
    decode_label,
    enumerate_graphs,
    find_isomorphism,
    graph_from_colours,
)
from entgraph.graphs.operations import (
    connected_components,
    degree,
    is_complete_web,
    is_connected,
    open_edges,
    permute,
    profile,
    require_valid,
    subgraph,
    to_networkx,
    validate,
)

__all__ = [
    "canonical_form",
    "colour_vector",
    "connected_components",
    "count_classes",
    "decode_label",
    "degree",
    "enumerate_graphs",
    "find_isomorphism",
    "graph_from_colours",
    "is_complete_web",
    "is_connected",
    "open_edges",
    "permute",
    "profile",
    "require_valid",
    "subgraph",
    "to_networkx",
    "validate",
]
