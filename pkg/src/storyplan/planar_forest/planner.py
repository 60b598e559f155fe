"""Forest storyplans for triangle-free planar graphs.

The planner fixes one plane straight-line drawing and repeatedly picks a
good vertex on the outer face of the remaining graph: the vertex appears
(unless visible already), then each of its unplaced neighbors, and every
completed vertex is deleted. Once the remaining graph is a forest its vertices
are appended in breadth-first order.
"""

from collections import deque
from collections.abc import Mapping

import structlog

from storyplan.config import settings
from storyplan.exceptions import HasTriangleError, InvariantViolationError, NotPlanarError
from storyplan.geometry.drawing import Drawing, plane_violation
from storyplan.geometry.layout import straight_line_draw_planar
from storyplan.geometry.predicates import Point
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import edges_form_forest, find_triangle, is_planar, subgraph_networkx
from storyplan.model.models import PlanMode, Storyplan
from storyplan.planar_forest.boundary import compute_boundary_structure, half_chord_faces, outer_boundary, weak_dual
from storyplan.planar_forest.models import PlannerState
from storyplan.planar_forest.rules import find_good_vertex, pick_steps
from storyplan.planners.base import make_plan, planner

logger = structlog.get_logger(__name__)

ALGORITHM = "planar"


def pick(v: int, state: PlannerState, check_invariants: bool = False) -> list[int]:
    """Pick ``v``: append it and its unplaced neighbors, then drop completed vertices.

    Returns the appended vertices.

    Raises:
        InvariantViolationError: If ``v`` is not completed afterwards, or with
            ``check_invariants`` if a visible vertex or edge of the new remaining
            graph is not incident with its outer face
    """
    steps = pick_steps(v, state)
    for w in steps:
        state.push(w)
    dropped = state.drop_completed()
    if v not in dropped:
        raise InvariantViolationError(f"Picked vertex {v} is not completed")
    if check_invariants:
        _check_outer_visibility(state)
    logger.debug("Picked vertex", iteration=state.iteration, vertex=v, steps=steps, dropped=dropped)
    return steps


def _check_outer_visibility(state: PlannerState) -> None:
    drawing = Drawing.induced(state.graph, state.remaining, state.positions)
    outer_vertices, traversals = outer_boundary(drawing)
    for v in sorted(state.visible):
        if v not in outer_vertices:
            raise InvariantViolationError(f"Visible vertex {v} is not on the outer face")
    for e in sorted(state.graph.induced_edges(state.visible)):
        if e not in traversals:
            raise InvariantViolationError(f"Visible edge {e} is not on the outer face")


def _forest_tail(state: PlannerState) -> list[int]:
    forest = subgraph_networkx(state.remaining, state.remaining_edges())
    tail: list[int] = []
    seen: set[int] = set()
    for root in sorted(state.remaining):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            tail.append(v)
            for u in sorted(forest.neighbors(v)):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return [v for v in tail if not state.is_placed(v)]


def _resolve_positions(g: Graph, positions: Mapping[int, Point] | None) -> dict[int, Point]:
    if positions is None:
        return dict(straight_line_draw_planar(g).positions)
    missing = [v for v in g.vertices if v not in positions]
    if missing:
        raise NotPlanarError(f"Vertices {missing} have no position")
    violation = plane_violation(Drawing.of_graph(g, positions))
    if violation is not None:
        raise NotPlanarError(f"Positions do not give a plane drawing: {violation}")
    return {v: positions[v] for v in g.vertices}


@planner(ALGORITHM)
def plan_planar_forest(g: Graph, positions: Mapping[int, Point] | None = None) -> Storyplan:
    """Forest storyplan of a triangle-free planar graph.

    Args:
        g: Triangle-free planar graph
        positions: Plane straight-line drawing to use; a shift-method layout
            is computed when omitted

    Raises:
        NotPlanarError: If ``g`` is not planar or ``positions`` is not a plane
            drawing of it
        HasTriangleError: If ``g`` contains a triangle
        NoGoodVertexError: If some iteration finds no good vertex
    """
    if not is_planar(g):
        raise NotPlanarError("Graph is not planar")
    triangle = find_triangle(g)
    if triangle is not None:
        raise HasTriangleError(f"Graph contains the triangle {triangle}")

    state = PlannerState(g, _resolve_positions(g, positions))
    check = settings.planner.debug_assertions
    while not edges_form_forest(state.remaining, state.remaining_edges()):
        state.iteration += 1
        bs = compute_boundary_structure(state)
        dual = weak_dual(bs)
        v = find_good_vertex(state, bs, dual, half_chord_faces(bs, dual))
        pick(v, state, check_invariants=check)

    tail = _forest_tail(state)
    for v in tail:
        state.push(v)
    logger.debug("Planar forest order built", iterations=state.iteration, tail=len(tail))
    return make_plan(g, state.order, state.positions, PlanMode.FOREST, ALGORITHM)
