"""Graph representation, recognizers and named graph families."""

from storyplan.graph.generators import generate_from_spec, generate_named, parse_family_spec
from storyplan.graph.io import format_graph, parse_graph, read_graph, write_graph
from storyplan.graph.models import Graph, RotationSystem, build_graph, induced_subgraph
from storyplan.graph.recognizers import (
    StackingOrder,
    bipartition,
    complete_to_two_tree,
    connected_components,
    is_bipartite,
    is_forest,
    is_outerplanar,
    is_triangle_free,
    max_degree,
    planarity,
    stacking_order,
)

__all__ = [
    "Graph",
    "RotationSystem",
    "StackingOrder",
    "bipartition",
    "build_graph",
    "complete_to_two_tree",
    "connected_components",
    "format_graph",
    "generate_from_spec",
    "generate_named",
    "induced_subgraph",
    "is_bipartite",
    "is_forest",
    "is_outerplanar",
    "is_triangle_free",
    "max_degree",
    "parse_family_spec",
    "parse_graph",
    "planarity",
    "read_graph",
    "stacking_order",
    "write_graph",
]
