"""Outer-boundary structure, weak dual and half-chord faces of the remaining graph.

All structures are read off the fixed straight-line drawing: the remaining
graph is drawn with the positions of the full graph, so its embedding is
inherited by deleting vertices.
"""

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import replace

import networkx as nx
import structlog

from storyplan.config import settings
from storyplan.exceptions import CactusViolationError, ClaimViolationError
from storyplan.geometry.drawing import Drawing, outer_walks, rotation_map
from storyplan.graph.models import Edge, normalize_edge
from storyplan.planar_forest.models import BoundaryStructure, Face, HalfChord, PlannerState, WeakDual

logger = structlog.get_logger(__name__)


def walk_edges(walk: list[int]) -> list[tuple[int, int]]:
    """Half-edges of a closed walk; empty for a single vertex."""
    if len(walk) < 2:
        return []
    return [(a, walk[(i + 1) % len(walk)]) for i, a in enumerate(walk)]


def outer_boundary(drawing: Drawing) -> tuple[frozenset[int], Counter[Edge]]:
    """Outer vertices of a plane drawing and how often the outer walks traverse each edge."""
    walks = outer_walks(drawing)
    traversals: Counter[Edge] = Counter()
    for walk in walks:
        for a, b in walk_edges(walk):
            traversals[normalize_edge(a, b)] += 1
    return frozenset(v for walk in walks for v in walk), traversals


def _cycle_order(edges: Iterable[Edge]) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    order, seen = [start], {start}
    current = start
    while True:
        nxt = [w for w in sorted(adj[current]) if w not in seen]
        if not nxt:
            break
        current = nxt[0]
        seen.add(current)
        order.append(current)
    return tuple(order)


def _outer_cycles(once: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    graph = nx.Graph(list(once))
    blocks = [sorted(normalize_edge(u, v) for u, v in block) for block in nx.biconnected_component_edges(graph)]
    return tuple(sorted(_cycle_order(block) for block in blocks if len(block) >= 3))


def trace_faces(rotation: Mapping[int, list[int]]) -> list[list[int]]:
    """All faces of a rotation map, each as the walk with the face on its right."""
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = [u]
            a, b = u, v
            while True:
                seen.add((a, b))
                face.append(b)
                nbrs = rotation[b]
                a, b = b, nbrs[(nbrs.index(a) + 1) % len(nbrs)]
                if (a, b) == (u, v):
                    break
            face.pop()
            faces.append(face)
    return faces


def compute_boundary_structure(state: PlannerState) -> BoundaryStructure:
    """Outer cycles, connectors, chords, half-chords and inner faces of the skeleton."""
    g = state.graph
    drawing = Drawing.induced(g, state.remaining, state.positions)
    outer_vertices, traversals = outer_boundary(drawing)

    cycles = _outer_cycles(e for e, count in traversals.items() if count == 1)
    on_cycle = {v for c in cycles for v in c}
    connectors = frozenset(
        e for e, count in traversals.items() if count == 2 and e[0] in on_cycle and e[1] in on_cycle
    )
    chords = frozenset(
        e for e in drawing.edges if e not in traversals and e[0] in on_cycle and e[1] in on_cycle
    )
    half_chords: list[HalfChord] = []
    for x in sorted(state.remaining - outer_vertices):
        ends = sorted(u for u in g.neighbors(x) if u in on_cycle)
        half_chords.extend((a, x, b) for i, a in enumerate(ends) for b in ends[i + 1 :])

    bs = BoundaryStructure(
        vertices=frozenset(state.remaining),
        outer_vertices=outer_vertices,
        outer_edges=frozenset(traversals),
        cycles=cycles,
        connectors=connectors,
        chords=chords,
        half_chords=tuple(half_chords),
    )
    faces, face_of = _inner_faces(bs, state)
    bs = replace(bs, faces=faces, face_of=face_of)
    logger.debug(
        "Boundary structure",
        iteration=state.iteration,
        cycles=len(bs.cycles),
        chords=len(bs.chords),
        half_chords=len(bs.half_chords),
        faces=len(bs.faces),
    )
    return bs


def _inner_faces(bs: BoundaryStructure, state: PlannerState) -> tuple[tuple[Face, ...], dict[tuple[int, int], int]]:
    if not bs.skeleton_edges:
        return (), {}
    skeleton = Drawing(bs.skeleton_vertices, bs.skeleton_edges, state.positions)
    outer_half_edges = {h for walk in outer_walks(skeleton) for h in walk_edges(walk)}
    faces: list[Face] = []
    face_of: dict[tuple[int, int], int] = {}
    for walk in trace_faces(rotation_map(skeleton)):
        half_edges = walk_edges(walk)
        if any(h in outer_half_edges for h in half_edges):
            continue
        face = Face(len(faces), tuple(walk))
        faces.append(face)
        face_of.update((h, face.id) for h in half_edges)
    return tuple(faces), face_of


def inner_edges_of(face: Face, bs: BoundaryStructure) -> frozenset[Edge]:
    """Chords and half-chord edges on the boundary of ``face``."""
    return face.edges & bs.inner_edges


def weak_dual(bs: BoundaryStructure) -> WeakDual:
    """Weak dual of the skeleton.

    Raises:
        CactusViolationError: With debug assertions, if the weak dual has a
            loop or an edge on two cycles
    """
    check = settings.planner.debug_assertions
    graph = nx.MultiGraph()
    graph.add_nodes_from(face.id for face in bs.faces)
    for u, v in sorted(bs.inner_edges):
        left, right = bs.face_of.get((u, v)), bs.face_of.get((v, u))
        if left is None or right is None:
            continue
        if left == right:
            if check:
                raise CactusViolationError(f"Inner edge {(u, v)} has face {left} on both sides")
            continue
        graph.add_edge(left, right, primal=(u, v))
    dual = WeakDual(graph=graph, faces={face.id: face for face in bs.faces})
    if check:
        _check_cactus(graph)
    return dual


def _check_cactus(graph: nx.MultiGraph) -> None:
    simple = nx.Graph(graph)
    for block in nx.biconnected_components(simple):
        edges = graph.subgraph(block).number_of_edges()
        if len(block) == 2 and edges <= 2:
            continue
        if len(block) >= 3 and edges == len(block):
            continue
        raise CactusViolationError(
            f"Weak dual block {sorted(block)} with {edges} edges is not a cycle"
        )


def half_chord_faces(bs: BoundaryStructure, dual: WeakDual) -> frozenset[int]:
    """Inner faces of the skeleton whose only inner edges form one half-chord.

    Raises:
        ClaimViolationError: With debug assertions, if a weak dual component with
            minimum degree two has fewer than two half-chord faces, or a chord
            or half-chord has no half-chord face on one of its sides
    """
    middles = {x for _, x, _ in bs.half_chords}
    result = set()
    for face in bs.faces:
        inner = inner_edges_of(face, bs)
        if len(inner) != 2:
            continue
        (a, b), (c, d) = sorted(inner)
        shared = {a, b} & {c, d}
        if len(shared) == 1 and shared <= middles:
            result.add(face.id)
    hc_faces = frozenset(result)
    if settings.planner.debug_assertions:
        _check_claims(bs, dual, hc_faces)
    return hc_faces


def _check_claims(bs: BoundaryStructure, dual: WeakDual, hc_faces: frozenset[int]) -> None:
    separators = [[e] for e in sorted(bs.chords)] + [
        [normalize_edge(a, x), normalize_edge(x, b)] for a, x, b in bs.half_chords
    ]
    for component in dual.components():
        if len(component) < 2 or any(dual.degree(f) < 2 for f in component):
            continue
        found = hc_faces.intersection(component)
        if len(found) < 2:
            raise ClaimViolationError(
                f"Weak dual component {component} has {len(found)} faces with a single half-chord"
            )
        members = set(component)
        for primal in separators:
            u, v = primal[0]
            side = bs.face_of.get((u, v))
            if side not in members:
                continue
            for part in _split(dual, primal):
                if not part & hc_faces:
                    raise ClaimViolationError(
                        f"No face with a single half-chord on one side of {primal}"
                    )


def _split(dual: WeakDual, primal: list[Edge]) -> list[set[int]]:
    cut = set(primal)
    graph = nx.MultiGraph()
    graph.add_nodes_from(dual.graph)
    graph.add_edges_from(
        (a, b) for a, b, data in dual.graph.edges(data=True) if data["primal"] not in cut
    )
    sides = []
    for a, b, data in dual.graph.edges(data=True):
        if data["primal"] == primal[0]:
            sides = [nx.node_connected_component(graph, a), nx.node_connected_component(graph, b)]
            break
    return sides


def component_tree(components: list[list[int]], bs: BoundaryStructure, dual: WeakDual) -> nx.Graph:
    """Tree of the weak dual components.

    Components are the integer nodes. A vertex shared by several components
    becomes a node ``("cut", v)`` adjacent to each of them, and a connector
    joins the two components it touches directly.

    Raises:
        ClaimViolationError: With debug assertions, if the result has a cycle
    """
    spans = [set().union(*(dual.faces[f].vertices for f in component)) for component in components]
    owners: dict[int, list[int]] = {}
    for i, span in enumerate(spans):
        for v in span:
            owners.setdefault(v, []).append(i)
    tree = nx.Graph()
    tree.add_nodes_from(range(len(components)))
    for v, shared in owners.items():
        if len(shared) > 1:
            tree.add_edges_from((("cut", v), i) for i in shared)
    for a, b in sorted(bs.connectors):
        for i in owners.get(a, []):
            tree.add_edges_from((i, j) for j in owners.get(b, []) if j != i)
    if settings.planner.debug_assertions and not nx.is_forest(tree):
        raise ClaimViolationError("Weak dual components do not form a tree")
    return tree


def _tree_key(node: int | tuple[str, int]) -> tuple[int, int]:
    return (0, node) if isinstance(node, int) else (1, node[1])


def component_walk(tree: nx.Graph) -> list[int]:
    """Components in breadth-first order, starting each tree at its smallest component."""
    walk: list[int] = []
    seen: set = set()
    for root in sorted(v for v in tree if isinstance(v, int)):
        if root in seen:
            continue
        order = list(nx.bfs_tree(tree, root, sort_neighbors=lambda nbrs: sorted(nbrs, key=_tree_key)))
        seen.update(order)
        walk.extend(v for v in order if isinstance(v, int))
    return walk
