"""Recognizers for the graph classes the planners and the oracle rely on."""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx
import structlog

from storyplan.exceptions import NotPartialTwoTreeError, NotTwoTreeError
from storyplan.graph.models import Edge, Graph, RotationSystem, build_graph, normalize_edge

logger = structlog.get_logger(__name__)

APEX = -1


def to_networkx(g: Graph) -> nx.Graph:
    """Convert to a networkx graph with the same integer vertices."""
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices)
    nx_graph.add_edges_from(g.sorted_edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling its nodes to 0..n-1 in sorted order."""
    try:
        nodes = sorted(nx_graph.nodes())
    except TypeError:
        nodes = list(nx_graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()])


def subgraph_networkx(vertices: Iterable[int], edges: Iterable[Edge]) -> nx.Graph:
    """Networkx graph on an explicit vertex and edge set."""
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(vertices)
    nx_graph.add_edges_from(edges)
    return nx_graph


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in g.vertices), default=0)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    components = []
    for start in g.vertices:
        if seen[start]:
            continue
        seen[start] = True
        component = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    component.append(w)
                    queue.append(w)
        components.append(sorted(component))
    return components


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are pairwise adjacent."""
    for u, v in g.edges:
        if g.neighbor_sets[u] & g.neighbor_sets[v]:
            return False
    return True


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    for u, v in g.sorted_edges():
        common = g.neighbor_sets[u] & g.neighbor_sets[v]
        if common:
            return (u, v, min(common))
    return None


def edges_form_forest(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    """Acyclicity check by union-find."""
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_forest(g: Graph) -> bool:
    """True iff the graph has no cycle."""
    if g.m > g.n - 1 and g.n > 0:
        return False
    return edges_form_forest(g.vertices, g.edges)


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-colouring by BFS from the smallest vertex of each component.

    Returns:
        The two sides (the side of each component's smallest vertex first),
        or None if the graph has an odd cycle
    """
    colour: dict[int, int] = {}
    for start in g.vertices:
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return (
        [v for v in g.vertices if colour[v] == 0],
        [v for v in g.vertices if colour[v] == 1],
    )


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def planarity(g: Graph) -> RotationSystem | None:
    """Planarity test.

    Returns:
        A rotation system of a planar embedding, with the longest face as the
        designated outer face, or None if the graph is not planar
    """
    is_planar, embedding = nx.check_planarity(to_networkx(g))
    if not is_planar:
        return None
    return rotation_from_embedding(embedding, g.n)


def rotation_from_embedding(embedding: nx.PlanarEmbedding, n: int) -> RotationSystem:
    """Convert a networkx embedding (clockwise neighbor lists) to a rotation system."""
    rotation = []
    for v in range(n):
        clockwise = list(embedding.neighbors_cw_order(v)) if v in embedding else []
        rotation.append(tuple(reversed(clockwise)))
    rs = RotationSystem(rotation=tuple(rotation))
    faces = rs.faces()
    if not faces:
        return rs
    outer = max(faces, key=len)
    return RotationSystem(rotation=rs.rotation, outer_face=tuple(outer))


def rotation_to_embedding(rs: RotationSystem) -> nx.PlanarEmbedding:
    """Convert a rotation system to a networkx embedding."""
    embedding = nx.PlanarEmbedding()
    embedding.set_data({v: list(reversed(rs.rotation[v])) for v in range(rs.n)})
    embedding.add_nodes_from(range(rs.n))
    return embedding


def is_planar_edges(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    is_planar, _ = nx.check_planarity(subgraph_networkx(vertices, edges))
    return is_planar


def is_outerplanar_edges(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    """Outerplanarity via the apex construction."""
    vs = list(vertices)
    nx_graph = subgraph_networkx(vs, edges)
    nx_graph.add_edges_from((APEX, v) for v in vs)
    is_planar, _ = nx.check_planarity(nx_graph)
    return is_planar


def is_planar(g: Graph) -> bool:
    return is_planar_edges(g.vertices, g.edges)


def is_outerplanar(g: Graph) -> bool:
    """True iff adding an apex adjacent to every vertex keeps the graph planar."""
    return is_outerplanar_edges(g.vertices, g.edges)


def outerplanar_boundary_order(g: Graph) -> list[int]:
    """A cyclic order of the vertices in which every edge is non-crossing.

    The order is the counterclockwise rotation around the apex vertex of a
    planar embedding of the apex graph, started at the smallest vertex. Placed by
    :func:`storyplan.geometry.layout.convex_positions` the order runs
    counterclockwise around the convex hull, and the drawing is outerplane.

    Raises:
        ValueError: If the graph is not outerplanar
    """
    if g.n == 0:
        return []
    nx_graph = to_networkx(g)
    nx_graph.add_edges_from((APEX, v) for v in g.vertices)
    is_planar, embedding = nx.check_planarity(nx_graph)
    if not is_planar:
        raise ValueError("Graph is not outerplanar")
    around_apex = list(reversed(list(embedding.neighbors_cw_order(APEX))))
    start = around_apex.index(min(around_apex))
    return around_apex[start:] + around_apex[:start]


@dataclass(frozen=True)
class StackingOrder:
    """Construction order of a 2-tree.

    ``order[:3]`` is the root triangle; ``stacked_on[v]`` is the edge the
    vertex ``v`` is stacked on (absent for the root triangle).
    """

    order: tuple[int, ...]
    stacked_on: dict[int, Edge]

    def replay(self, n: int) -> frozenset[Edge]:
        """Edge set rebuilt from the order."""
        a, b, c = self.order[:3]
        edges = {normalize_edge(a, b), normalize_edge(b, c), normalize_edge(a, c)}
        for v in self.order[3:]:
            x, y = self.stacked_on[v]
            edges.add(normalize_edge(v, x))
            edges.add(normalize_edge(v, y))
        return frozenset(edges)


def stacking_order(g: Graph) -> StackingOrder:
    """Recognize a 2-tree and return a stacking order.

    Repeatedly removes the smallest vertex of degree 2 whose two neighbors are
    adjacent, until a triangle remains; the removals reversed are the order.

    Raises:
        NotTwoTreeError: If the graph is not a 2-tree
    """
    if g.n < 3 or g.m != 2 * g.n - 3:
        raise NotTwoTreeError(f"A 2-tree on {g.n} vertices has {2 * g.n - 3} edges, got {g.m}")

    nbrs = [set(adj) for adj in g.adjacency]
    alive = set(g.vertices)
    removed: list[tuple[int, Edge]] = []

    def removable(v: int) -> bool:
        if len(nbrs[v]) != 2:
            return False
        x, y = nbrs[v]
        return y in nbrs[x]

    while len(alive) > 3:
        candidate = next((v for v in sorted(alive) if removable(v)), None)
        if candidate is None:
            raise NotTwoTreeError("No degree-2 vertex with adjacent neighbors remains")
        x, y = sorted(nbrs[candidate])
        removed.append((candidate, (x, y)))
        nbrs[x].discard(candidate)
        nbrs[y].discard(candidate)
        nbrs[candidate].clear()
        alive.discard(candidate)

    a, b, c = sorted(alive)
    if not (b in nbrs[a] and c in nbrs[a] and c in nbrs[b]):
        raise NotTwoTreeError("Remaining three vertices do not form a triangle")

    order = [a, b, c] + [v for v, _ in reversed(removed)]
    return StackingOrder(order=tuple(order), stacked_on=dict(removed))


def is_two_tree(g: Graph) -> bool:
    try:
        stacking_order(g)
    except NotTwoTreeError:
        return False
    return True


def complete_to_two_tree(g: Graph) -> tuple[Graph, StackingOrder]:
    """Augment a partial 2-tree to a 2-tree on the same vertex set.

    Eliminates vertices of degree at most 2 (smallest index first), joining
    the two neighbors of each eliminated vertex by a fill edge. Rebuilding in
    reverse elimination order stacks every vertex on an edge; vertices of
    lower degree borrow an existing edge.

    Raises:
        NotPartialTwoTreeError: If the graph has treewidth greater than two
            or fewer than three vertices
    """
    if g.n < 3:
        raise NotPartialTwoTreeError("A 2-tree needs at least three vertices")

    nbrs = [set(adj) for adj in g.adjacency]
    alive = set(g.vertices)
    eliminated: list[tuple[int, tuple[int, ...]]] = []

    while len(alive) > 3:
        candidate = next((v for v in sorted(alive) if len(nbrs[v]) <= 2), None)
        if candidate is None:
            raise NotPartialTwoTreeError("Every remaining vertex has degree at least 3")
        around = tuple(sorted(nbrs[candidate]))
        if len(around) == 2:
            x, y = around
            nbrs[x].add(y)
            nbrs[y].add(x)
        for w in around:
            nbrs[w].discard(candidate)
        nbrs[candidate].clear()
        alive.discard(candidate)
        eliminated.append((candidate, around))

    a, b, c = sorted(alive)
    edges = {normalize_edge(a, b), normalize_edge(b, c), normalize_edge(a, c)}
    adj: dict[int, set[int]] = {a: {b, c}, b: {a, c}, c: {a, b}}
    stacked_on: dict[int, Edge] = {}
    order = [a, b, c]

    for v, around in reversed(eliminated):
        if len(around) == 2:
            x, y = around
        elif len(around) == 1:
            x = around[0]
            y = min(adj[x])
        else:
            x, y = min(edges)
        for w in (x, y):
            edges.add(normalize_edge(v, w))
            adj.setdefault(v, set()).add(w)
            adj[w].add(v)
        stacked_on[v] = normalize_edge(x, y)
        order.append(v)

    completed = build_graph(g.n, sorted(edges))
    logger.debug("Completed partial 2-tree", n=g.n, fill_edges=completed.m - g.m)
    return completed, StackingOrder(order=tuple(order), stacked_on=stacked_on)
