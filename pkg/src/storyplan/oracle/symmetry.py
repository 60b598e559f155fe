"""Automorphism orbits for symmetry reduction."""

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from storyplan.graph.models import Graph
from storyplan.graph.recognizers import to_networkx


def _anchored(nx_graph: nx.Graph, anchor: int) -> nx.Graph:
    marked = nx_graph.copy()
    nx.set_node_attributes(marked, False, "anchor")
    marked.nodes[anchor]["anchor"] = True
    return marked


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``."""
    if g.degree(u) != g.degree(v):
        return False
    if u == v:
        return True
    base = to_networkx(g)
    matcher = GraphMatcher(
        _anchored(base, u),
        _anchored(base, v),
        node_match=lambda a, b: a["anchor"] == b["anchor"],
    )
    return matcher.is_isomorphic()


def orbit_representatives(g: Graph) -> list[int]:
    """Smallest vertex of each automorphism orbit, in increasing order."""
    representatives: list[int] = []
    assigned: set[int] = set()
    for v in g.vertices:
        if v in assigned:
            continue
        representatives.append(v)
        assigned.add(v)
        for u in range(v + 1, g.n):
            if u not in assigned and same_orbit(g, v, u):
                assigned.add(u)
    return representatives
