"""Rules for good vertices and the search for one.

A vertex on the outer face of the skeleton is good when picking it breaks
none of the rules:

* covers-cycle: its closed neighborhood covers every invisible vertex of an
  outer cycle.
* chord-endpoint: it is an endpoint of a chord.
* near-visible-chord: it is a neighbor of a chord endpoint whose other
  endpoint is visible.
* half-chord-endpoint: it is an endpoint of a half-chord whose other
  endpoint is visible.

Candidates are generated by the case analysis on the weak dual and each one
is confirmed by simulating the pick: every frame stays a forest, and visible
inner vertices and inner edges stay attached to the picked vertex only.
"""

from collections.abc import Iterable
from enum import StrEnum

import networkx as nx
import structlog

from storyplan.exceptions import NoGoodVertexError
from storyplan.graph.models import Edge
from storyplan.graph.recognizers import edges_form_forest
from storyplan.planar_forest.boundary import component_tree, component_walk, inner_edges_of
from storyplan.planar_forest.models import BoundaryStructure, Face, PlannerState, WeakDual

logger = structlog.get_logger(__name__)


class Rule(StrEnum):
    COVERS_CYCLE = "covers-cycle"
    CHORD_ENDPOINT = "chord-endpoint"
    NEAR_VISIBLE_CHORD = "near-visible-chord"
    HALF_CHORD_ENDPOINT = "half-chord-endpoint"


def rule_violation(v: int, state: PlannerState, bs: BoundaryStructure) -> Rule | None:
    """First rule that picking ``v`` breaks, or None."""
    closed = state.closed_neighborhood(v)
    for cycle in bs.cycles:
        if closed.isdisjoint(cycle):
            continue
        invisible = {u for u in cycle if not state.is_visible(u)}
        if invisible <= closed:
            return Rule.COVERS_CYCLE
    if v in bs.chord_endpoints:
        return Rule.CHORD_ENDPOINT
    for a, b in bs.chords:
        if (state.is_visible(b) and a in closed and a != v) or (
            state.is_visible(a) and b in closed and b != v
        ):
            return Rule.NEAR_VISIBLE_CHORD
    for a, _, b in bs.half_chords:
        if (v == a and state.is_visible(b)) or (v == b and state.is_visible(a)):
            return Rule.HALF_CHORD_ENDPOINT
    return None


def is_good(v: int, state: PlannerState, bs: BoundaryStructure) -> bool:
    return rule_violation(v, state, bs) is None


def pick_steps(v: int, state: PlannerState) -> list[int]:
    """Vertices appended when ``v`` is picked: ``v`` unless placed, then its unplaced neighbors."""
    steps = [] if state.is_placed(v) else [v]
    steps.extend(sorted(u for u in state.graph.neighbors(v) if not state.is_placed(u)))
    return steps


def simulate_pick(v: int, state: PlannerState, bs: BoundaryStructure) -> str | None:
    """Replay the pick of ``v`` on a copy of the state.

    Returns a description of the first frame with a cycle or with a visible
    inner vertex or inner edge not attached to ``v`` alone. None if the pick
    is safe.
    """
    g = state.graph
    tracker = state.tracker.copy()
    for w in pick_steps(v, state):
        step = tracker.push(w)
        edges = g.induced_edges(step.frame)
        if not edges_form_forest(step.frame, edges):
            return f"frame at {w} contains a cycle"
        for x in sorted(step.frame - bs.outer_vertices):
            if not g.has_edge(x, v):
                return f"inner vertex {x} is visible but not adjacent to {v}"
            if any(u != v and u in bs.outer_vertices and g.has_edge(x, u) for u in step.frame):
                return f"inner vertex {x} sees a second outer vertex"
        for a, b in sorted(edges - bs.outer_edges):
            if v not in (a, b) or (b if a == v else a) in bs.outer_vertices:
                return f"inner edge {(a, b)} is visible"
    return None


def _rotated(walk: tuple[int, ...], start: int) -> tuple[int, ...]:
    if start not in walk:
        return walk
    i = walk.index(start)
    return walk[i:] + walk[:i]


def _single_face(face: Face, state: PlannerState) -> list[int]:
    invisible = [u for u in face.walk if not state.is_visible(u)]
    if not invisible:
        return list(face.walk)
    blocked = state.closed_neighborhood(invisible[0])
    return [u for u in _rotated(face.walk, invisible[0]) if u not in blocked]


def _chord_face(face: Face, state: PlannerState, bs: BoundaryStructure) -> list[int]:
    a, b = min(inner_edges_of(face, bs))
    if state.is_visible(a) != state.is_visible(b):
        u, w = (a, b) if state.is_visible(a) else (b, a)
        i = face.walk.index(u)
        k = len(face.walk)
        return [x for x in (face.walk[(i - 1) % k], face.walk[(i + 1) % k]) if x != w]
    return [x for x in _rotated(face.walk, a) if x in bs.free_vertices]


def _half_chord_ends(face: Face, bs: BoundaryStructure) -> list[int]:
    return sorted({v for e in inner_edges_of(face, bs) for v in e} & bs.cycle_vertices)


def _half_chord_face(face: Face, state: PlannerState, bs: BoundaryStructure) -> tuple[list[int], list[int]]:
    ends = _half_chord_ends(face, bs)
    free = [x for x in _rotated(face.walk, ends[0]) if x in bs.free_vertices]
    return free, sorted(ends, key=lambda u: (not state.is_visible(u), u))


def _one_sided_chords(
    members: set[int], state: PlannerState, bs: BoundaryStructure, dual: WeakDual
) -> dict[Edge, tuple[int, int]]:
    """Chords between faces of ``members`` with one visible endpoint, as (visible, invisible)."""
    result: dict[Edge, tuple[int, int]] = {}
    for _, _, data in dual.graph.subgraph(members).edges(data=True):
        a, b = edge = data["primal"]
        if edge in bs.chords and state.is_visible(a) != state.is_visible(b):
            result[edge] = (a, b) if state.is_visible(a) else (b, a)
    return result


def leaf_region(
    component: list[int], state: PlannerState, bs: BoundaryStructure, dual: WeakDual
) -> tuple[set[int], int | None, int | None]:
    """Faces of a part cut off by a single chord with one visible endpoint.

    The one-sided chords of the component split its faces into parts that
    form a tree. Returns the faces of the leaf part with the smallest face
    id together with the visible and the invisible endpoint of the chord
    bounding it, or the whole component and no endpoints if it has no such
    chord.
    """
    members = set(component)
    bounding = _one_sided_chords(members, state, bs, dual)
    if not bounding:
        return members, None, None
    cut = nx.MultiGraph()
    cut.add_nodes_from(members)
    cut.add_edges_from(
        (a, b)
        for a, b, data in dual.graph.subgraph(members).edges(data=True)
        if data["primal"] not in bounding
    )
    for part in sorted((sorted(p) for p in nx.connected_components(cut))):
        faces = set(part)
        touching = [
            e for e in sorted(bounding)
            if bs.face_of.get(e) in faces or bs.face_of.get((e[1], e[0])) in faces
        ]
        if len(touching) == 1:
            u, w = bounding[touching[0]]
            return faces, u, w
    return members, None, None


def _chord_component(
    component: list[int], state: PlannerState, bs: BoundaryStructure, dual: WeakDual, hc_set: set[int]
) -> list[int]:
    region, u, w = leaf_region(component, state, bs, dual)
    away: list[Face] = []
    near_w: list[Face] = []
    near_u: list[Face] = []
    for face in (dual.faces[f] for f in sorted(region & hc_set)):
        if u is None or (u not in face.vertices and w not in face.vertices):
            away.append(face)
        elif w in face.vertices:
            near_w.append(face)
        else:
            near_u.append(face)

    ordered: list[int] = []
    endpoints: list[int] = []
    for face in away + near_w:
        free, ends = _half_chord_face(face, state, bs)
        ordered.extend(free)
        endpoints.extend(ends)
    for face in near_u:
        ordered.extend(x for x in _half_chord_ends(face, bs) if x != u)
    if u is None:
        ordered.extend(endpoints)
    return ordered


def _component_candidates(
    component: list[int], state: PlannerState, bs: BoundaryStructure, dual: WeakDual, hc_set: set[int]
) -> list[int]:
    faces = [dual.faces[f] for f in component]
    if len(faces) == 1 and not inner_edges_of(faces[0], bs):
        return _single_face(faces[0], state)
    leaves = [face for face in faces if dual.degree(face.id) == 1]
    if leaves:
        return [x for face in leaves for x in _chord_face(face, state, bs)]
    return _chord_component(component, state, bs, dual, hc_set)


def candidates(state: PlannerState, bs: BoundaryStructure, dual: WeakDual, hc_faces: Iterable[int]) -> list[int]:
    """Candidate vertices in the order the case analysis tries them.

    Components of the weak dual are visited along the tree they form with
    shared vertices and connectors. In each component, a single face without
    inner edges offers the non-neighbors of an invisible vertex and a face of
    dual degree one offers the vertices next to its chord. Otherwise the
    component is narrowed to the leaf part cut off by a chord with one
    visible endpoint, and its faces with a single half-chord offer, in turn:
    free vertices of faces away from the chord, free vertices of faces on its
    invisible endpoint, then the far half-chord endpoint of faces on its
    visible endpoint. The cycle vertices of the skeleton close the list.
    """
    hc_set = set(hc_faces)
    components = dual.components()
    ordered: list[int] = []
    for index in component_walk(component_tree(components, bs, dual)):
        ordered.extend(_component_candidates(components[index], state, bs, dual, hc_set))
    ordered.extend(sorted(bs.cycle_vertices))
    return list(dict.fromkeys(u for u in ordered if u in state.remaining))


def find_good_vertex(
    state: PlannerState, bs: BoundaryStructure, dual: WeakDual, hc_faces: Iterable[int]
) -> int:
    """First candidate that breaks no rule and passes the strict pick simulation.

    Raises:
        NoGoodVertexError: If no candidate qualifies
    """
    pool = candidates(state, bs, dual, hc_faces)
    for v in pool:
        violation = rule_violation(v, state, bs)
        if violation is not None:
            logger.debug("Candidate rejected", iteration=state.iteration, vertex=v, rule=violation)
            continue
        problem = simulate_pick(v, state, bs)
        if problem is None:
            logger.debug("Good vertex", iteration=state.iteration, vertex=v)
            return v
        logger.debug("Candidate rejected", iteration=state.iteration, vertex=v, reason=problem)

    raise NoGoodVertexError(
        f"No good vertex among {len(pool)} candidates at iteration {state.iteration}"
    )
