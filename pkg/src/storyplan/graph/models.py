"""Core graph types: simple undirected graphs and rotation systems."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from storyplan.exceptions import DuplicateEdgeError, OutOfRangeError, SelfLoopError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge as an ordered pair (smaller endpoint first)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on the vertices 0..n-1.

    Instances are immutable. Use :func:`build_graph` to construct one from an
    edge list; it validates the input and sorts the adjacency.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        """Adjacency as frozensets, for membership tests."""
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """N[v]: the vertex together with its neighbors."""
        return self.neighbor_sets[v] | {v}

    def sorted_edges(self) -> list[Edge]:
        """Edges in lexicographic order."""
        return sorted(self.edges)

    def induced_edges(self, vertices: Iterable[int]) -> frozenset[Edge]:
        """Edges of the subgraph induced by ``vertices`` (original labels)."""
        vs = set(vertices)
        return frozenset(
            (u, v) for u in vs for v in self.adjacency[u] if u < v and v in vs
        )

    def degree_sequence(self) -> list[int]:
        return sorted((len(nbrs) for nbrs in self.adjacency), reverse=True)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Args:
        n: Number of vertices
        edge_list: Pairs (u, v) with 0 <= u, v < n

    Returns:
        Graph with sorted adjacency

    Raises:
        OutOfRangeError: If an endpoint is outside 0..n-1
        SelfLoopError: If an edge joins a vertex to itself
        DuplicateEdgeError: If an unordered edge is given twice
    """
    if n < 0:
        raise OutOfRangeError(f"Vertex count must be non-negative, got {n}")

    edges: set[Edge] = set()
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"Self-loop at vertex {u}")
        edge = normalize_edge(u, v)
        if edge in edges:
            raise DuplicateEdgeError(f"Duplicate edge {edge}")
        edges.add(edge)
        adjacency[u].append(v)
        adjacency[v].append(u)

    return Graph(
        n=n,
        edges=frozenset(edges),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph relabelled to 0..k-1.

    Returns:
        The subgraph and the label map (new index -> original vertex)
    """
    labels = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in g.induced_edges(labels)]
    return build_graph(len(labels), edges), labels


@dataclass(frozen=True)
class RotationSystem:
    """Combinatorial embedding of a graph.

    ``rotation[v]`` lists the neighbors of ``v`` in counterclockwise order.
    ``outer_face`` is the designated outer boundary walk as a sequence of
    vertices; consecutive entries (cyclically) are the traversed edges. It is
    empty when the graph has no edges.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.rotation)

    def next_ccw(self, v: int, u: int) -> int:
        """Neighbor of ``v`` following ``u`` counterclockwise."""
        nbrs = self.rotation[v]
        return nbrs[(nbrs.index(u) + 1) % len(nbrs)]

    def traverse_face(self, u: int, v: int) -> list[int]:
        """Vertices of the face on the right of the half-edge u -> v."""
        face = [u]
        a, b = u, v
        while True:
            face.append(b)
            a, b = b, self.next_ccw(b, a)
            if (a, b) == (u, v):
                break
        face.pop()
        return face

    def faces(self) -> list[list[int]]:
        """All faces of the embedding, one boundary walk each."""
        seen: set[Edge] = set()
        result = []
        for u in range(self.n):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                face = self.traverse_face(u, v)
                for i, a in enumerate(face):
                    seen.add((a, face[(i + 1) % len(face)]))
                result.append(face)
        return result

    def is_consistent_with(self, g: Graph) -> bool:
        """Every edge appears exactly once in each endpoint's cyclic order."""
        if self.n != g.n:
            return False
        return all(
            len(self.rotation[v]) == g.degree(v) and set(self.rotation[v]) == g.neighbor_sets[v]
            for v in g.vertices
        )
