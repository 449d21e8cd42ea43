"""Toolkit for the F-free 2-edge-colouring problem on small graphs."""

from .graphs import (
    EdgeColouring,
    Graph,
    GraphError,
    UnsupportedSizeError,
    canonical_form,
    complement,
    connected_components,
    contains_induced,
    enumerate_nonisomorphic_graphs,
    induced_subgraph,
    is_bipartite,
    parse_graph6,
    write_graph6,
)
from .patterns import (
    CATALOGUE,
    Pattern,
    PatternSet,
    build_Bbar,
    build_Lk,
    expresses_finite_class,
    is_trivial_set,
    is_universally_colourable,
    lift_graph,
    named,
    parse_pattern_set,
    swap_colours,
)
from .oracle import (
    ColouringWitness,
    admits_colouring,
    count_colourings,
    free_colourings_of,
    verify_colouring,
)

__all__ = [
    "CATALOGUE",
    "ColouringWitness",
    "EdgeColouring",
    "Graph",
    "GraphError",
    "Pattern",
    "PatternSet",
    "UnsupportedSizeError",
    "admits_colouring",
    "build_Bbar",
    "build_Lk",
    "canonical_form",
    "complement",
    "connected_components",
    "contains_induced",
    "count_colourings",
    "enumerate_nonisomorphic_graphs",
    "expresses_finite_class",
    "free_colourings_of",
    "induced_subgraph",
    "is_bipartite",
    "is_trivial_set",
    "is_universally_colourable",
    "lift_graph",
    "named",
    "parse_graph6",
    "parse_pattern_set",
    "swap_colours",
    "verify_colouring",
    "write_graph6",
]
