"""Straight-line drawings: planarity, embedding and outer-face checks."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from storyplan.exceptions import MissingPositionError
from storyplan.geometry.predicates import (
    Point,
    angular_order,
    in_segment_interior,
    point_in_walk,
    segments_cross,
)
from storyplan.graph.models import Edge, Graph, RotationSystem, normalize_edge


@dataclass(frozen=True)
class Drawing:
    """A straight-line drawing of a graph on a subset of its vertices.

    ``vertices`` are the drawn vertices and ``edges`` the drawn edges (both
    endpoints drawn). ``positions`` may hold more points than are drawn, so one
    global position map can serve every frame of a storyplan.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]
    positions: Mapping[int, Point]

    @classmethod
    def of_graph(cls, g: Graph, positions: Mapping[int, Point]) -> "Drawing":
        """Drawing of the whole graph."""
        return cls(frozenset(g.vertices), g.edges, positions)

    @classmethod
    def induced(cls, g: Graph, vertices: Iterable[int], positions: Mapping[int, Point]) -> "Drawing":
        """Drawing of the subgraph induced by ``vertices``."""
        vs = frozenset(vertices)
        return cls(vs, g.induced_edges(vs), positions)

    def point(self, v: int) -> Point:
        try:
            return self.positions[v]
        except KeyError as e:
            raise MissingPositionError(f"Vertex {v} has no position") from e

    def segment(self, edge: Edge) -> tuple[Point, Point]:
        return (self.point(edge[0]), self.point(edge[1]))

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def plane_violation(d: Drawing) -> str | None:
    """Describe the first planarity violation of the drawing, or None if plane.

    Raises:
        MissingPositionError: If a drawn vertex has no position
    """
    seen: dict[Point, int] = {}
    for v in sorted(d.vertices):
        p = d.point(v)
        if p in seen:
            return f"vertices {seen[p]} and {v} share position {p}"
        seen[p] = v

    edges = sorted(d.edges)
    segments = {e: d.segment(e) for e in edges}
    for e in edges:
        a, b = segments[e]
        for v in sorted(d.vertices):
            if v in e:
                continue
            if in_segment_interior(d.point(v), a, b):
                return f"vertex {v} lies on edge {e}"
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if segments_cross(segments[e], segments[f]):
                return f"edges {e} and {f} cross"
    return None


def drawing_is_plane(d: Drawing) -> bool:
    """True iff no two edges cross and no vertex lies on a non-incident edge.

    Raises:
        MissingPositionError: If a drawn vertex has no position
    """
    return plane_violation(d) is None


def extension_is_plane(d: Drawing, v: int, p: Point, new_neighbors: Iterable[int]) -> bool:
    """Check whether adding vertex ``v`` at ``p`` with the given edges keeps ``d`` plane.

    ``d`` itself is assumed plane.
    """
    nbrs = list(new_neighbors)
    points = {u: d.point(u) for u in d.vertices}
    if p in points.values():
        return False
    old_segments = [(e, d.segment(e)) for e in d.edges]
    for _, (a, b) in old_segments:
        if in_segment_interior(p, a, b):
            return False
    for u in nbrs:
        seg = (p, points[u])
        for w, q in points.items():
            if w != u and in_segment_interior(q, p, points[u]):
                return False
        for _, other in old_segments:
            if segments_cross(seg, other):
                return False
    for i, u in enumerate(nbrs):
        for w in nbrs[i + 1 :]:
            if segments_cross((p, points[u]), (p, points[w])):
                return False
    return True


def rotation_map(d: Drawing) -> dict[int, list[int]]:
    """Counterclockwise neighbor order of each drawn vertex."""
    rotation = {}
    for v, nbrs in d.adjacency().items():
        origin = d.point(v)
        rotation[v] = angular_order(origin, {w: d.point(w) for w in nbrs})
    return rotation


def _components(d: Drawing) -> list[list[int]]:
    adj = d.adjacency()
    seen: set[int] = set()
    components = []
    for start in sorted(d.vertices):
        if start in seen:
            continue
        seen.add(start)
        stack, component = [start], [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    component.append(w)
        components.append(component)
    return components


def _lowest_leftmost(d: Drawing, vertices: Iterable[int]) -> int:
    return min(vertices, key=lambda v: (d.point(v).y, d.point(v).x, v))


def outer_walk(d: Drawing, rotation: Mapping[int, list[int]], component: list[int]) -> list[int]:
    """Boundary walk of the unbounded face of one connected component.

    Starts at the lowest-leftmost vertex ``s`` along the edge of smallest
    angle; the unbounded face is then on the right of every traversed
    half-edge.
    """
    s = _lowest_leftmost(d, component)
    if not rotation[s]:
        return [s]
    t = rotation[s][0]
    walk = [s]
    a, b = s, t
    while True:
        walk.append(b)
        nbrs = rotation[b]
        a, b = b, nbrs[(nbrs.index(a) + 1) % len(nbrs)]
        if (a, b) == (s, t):
            break
    walk.pop()
    return walk


def outer_walks(d: Drawing) -> list[list[int]]:
    """Outer boundary walks of the components not nested inside another component."""
    rotation = rotation_map(d)
    walks = [outer_walk(d, rotation, component) for component in _components(d)]
    polygons = [[d.point(v) for v in walk] for walk in walks]
    result = []
    for i, walk in enumerate(walks):
        sample = d.point(walk[0])
        nested = any(
            j != i and len(polygons[j]) >= 3 and point_in_walk(sample, polygons[j])
            for j in range(len(walks))
        )
        if not nested:
            result.append(walk)
    return result


def outer_face_vertices(d: Drawing) -> frozenset[int]:
    """Vertices incident with the unbounded face of a plane drawing."""
    return frozenset(v for walk in outer_walks(d) for v in walk)


def drawing_is_outerplane(d: Drawing) -> bool:
    """True iff every drawn vertex lies on the unbounded face.

    The drawing must be plane; see :func:`drawing_is_plane`.

    Raises:
        MissingPositionError: If a drawn vertex has no position
    """
    return outer_face_vertices(d) == d.vertices


def rotation_from_positions(g: Graph, positions: Mapping[int, Point]) -> RotationSystem:
    """Combinatorial embedding of a straight-line drawing of ``g``.

    The outer face is the boundary walk of the component holding the
    lowest-leftmost vertex.
    """
    d = Drawing.of_graph(g, positions)
    rotation = rotation_map(d)
    outer: tuple[int, ...] = ()
    if g.n:
        s = _lowest_leftmost(d, g.vertices)
        component = next(c for c in _components(d) if s in c)
        walk = outer_walk(d, rotation, component)
        outer = tuple(walk) if len(walk) > 1 else ()
    return RotationSystem(
        rotation=tuple(tuple(rotation[v]) for v in g.vertices),
        outer_face=outer,
    )

