"""Outerplanar storyplans for 2-trees and partial 2-trees."""

from dataclasses import dataclass, field
from fractions import Fraction

import structlog

from storyplan.config import settings
from storyplan.exceptions import InvariantViolationError
from storyplan.geometry.drawing import Drawing, outer_face_vertices
from storyplan.geometry.placement import search_position
from storyplan.geometry.predicates import Point, orient
from storyplan.graph.models import Edge, Graph, normalize_edge
from storyplan.graph.recognizers import StackingOrder, complete_to_two_tree, is_two_tree, stacking_order
from storyplan.model.frames import FrameTracker
from storyplan.model.models import PlanMode, Storyplan
from storyplan.model.verifier import restrict_plan
from storyplan.planners.base import line_plan, make_plan, planner

logger = structlog.get_logger(__name__)

ALGORITHM = "two-tree"

ROOT = -1


@dataclass(frozen=True)
class TwoTreeDecomposition:
    """Tree over the stacked vertices of a 2-tree.

    A vertex stacked onto the edge v_k v_l (k < l in the stacking order) is a
    child of v_l, or of the root when v_l belongs to the root triangle.
    Children are kept in stacking order.
    """

    root: tuple[int, int, int]
    parent: dict[int, int]
    children: dict[int, list[int]] = field(default_factory=dict)
    stacked_on: dict[int, Edge] = field(default_factory=dict)

    def preorder(self) -> list[int]:
        """Root triangle followed by the stacked vertices in depth-first pre-order."""
        order = list(self.root)
        stack = list(reversed(self.children.get(ROOT, [])))
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children.get(v, [])))
        return order


def decompose(stacking: StackingOrder) -> TwoTreeDecomposition:
    """Build the decomposition tree of a stacking order."""
    rank = {v: i for i, v in enumerate(stacking.order)}
    a, b, c = stacking.order[:3]
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {ROOT: []}
    for v in stacking.order[3:]:
        x, y = stacking.stacked_on[v]
        later = x if rank[x] > rank[y] else y
        p = ROOT if rank[later] < 3 else later
        parent[v] = p
        children.setdefault(p, []).append(v)
        children.setdefault(v, [])
    return TwoTreeDecomposition((a, b, c), parent, children, dict(stacking.stacked_on))


def decomposition_order(g: Graph, stacking: StackingOrder | None = None) -> list[int]:
    """Vertex order of the outerplanar storyplan of a 2-tree.

    Raises:
        NotTwoTreeError: If ``stacking`` is omitted and ``g`` is not a 2-tree
    """
    return decompose(stacking or stacking_order(g)).preorder()


def _check_parent(g: Graph, frame: Drawing, v: int, p: int) -> None:
    """The parent of ``v`` is visible, on the outer face and of degree at most two.

    Degree one is legal: the parent's other neighbor in the frame may have
    completed before ``v`` appears.
    """
    if p not in frame.vertices:
        raise InvariantViolationError(f"Parent {p} of vertex {v} is no longer visible")
    degree = sum(1 for u in g.neighbors(p) if u in frame.vertices)
    if degree > 2:
        raise InvariantViolationError(f"Parent {p} of vertex {v} has degree {degree} in the frame")
    if p not in outer_face_vertices(frame):
        raise InvariantViolationError(f"Parent {p} of vertex {v} is not on the outer face")


def _stack_position(frame: Drawing, v: int, edge: Edge, shrink_steps: int) -> Point:
    """Point beyond the stacking edge that keeps the next frame outerplane."""
    x, y = frame.point(edge[0]), frame.point(edge[1])
    direction = y - x
    normal = Point(-direction.y, direction.x)
    # Prefer the side of the edge without a visible common neighbor.
    apexes = [
        frame.point(w)
        for w in frame.vertices
        if normalize_edge(w, edge[0]) in frame.edges and normalize_edge(w, edge[1]) in frame.edges
    ]
    taken = {orient(x, y, q) for q in apexes}
    free_side = next((s for s in (1, -1) if s not in taken), 1)

    def beyond(p: Point) -> bool:
        return orient(x, y, p) == free_side

    anchors = [x + direction.scale(Fraction(k, 4)) for k in (2, 1, 3)]
    point, _ = search_position(
        frame,
        v,
        edge,
        anchors,
        region=beyond,
        shrink_steps=shrink_steps,
        extra_directions=[normal, normal.scale(-1)],
    )
    return point


@planner(ALGORITHM)
def plan_two_tree_outerplanar(g: Graph, stacking: StackingOrder | None = None) -> Storyplan:
    """Outerplanar storyplan of a 2-tree.

    The order is the root triangle followed by a pre-order of the
    decomposition tree. Each stacked vertex is placed next to its stacking
    edge on the outer face of the current frame.

    Args:
        g: A 2-tree
        stacking: Stacking order to decompose; recognized from ``g`` if omitted

    Raises:
        NotTwoTreeError: If ``g`` is not a 2-tree
    """
    decomposition = decompose(stacking or stacking_order(g))
    order = decomposition.preorder()
    shrink_steps = settings.planner.shrink_steps
    check = settings.planner.debug_assertions

    a, b, c = decomposition.root
    positions: dict[int, Point] = {a: Point(0, 0), b: Point(2, 0), c: Point(1, 2)}
    tracker = FrameTracker(g)
    for v in order[:3]:
        tracker.push(v)

    for v in order[3:]:
        frame = Drawing.induced(g, tracker.visible, positions)
        edge = decomposition.stacked_on[v]
        p = decomposition.parent[v]
        if check and p != ROOT:
            _check_parent(g, frame, v, p)
        positions[v] = _stack_position(frame, v, edge, shrink_steps)
        tracker.push(v)

    logger.debug("Stacked vertices placed", n=g.n, root=decomposition.root)
    return make_plan(g, order, positions, PlanMode.OUTERPLANAR, ALGORITHM)


def plan_partial_two_tree_outerplanar(g: Graph) -> Storyplan:
    """Outerplanar storyplan of a partial 2-tree.

    Plans a 2-tree containing ``g`` on the same vertex set and restricts the
    plan to the edges of ``g``.

    Raises:
        NotPartialTwoTreeError: If ``g`` has treewidth greater than two
    """
    if g.n < 3:
        return line_plan(g, PlanMode.OUTERPLANAR, ALGORITHM)
    if is_two_tree(g):
        return plan_two_tree_outerplanar(g)
    supergraph, stacking = complete_to_two_tree(g)
    logger.debug("Completed to a 2-tree", n=g.n, fill_edges=supergraph.m - g.m)
    return restrict_plan(plan_two_tree_outerplanar(supergraph, stacking), g)
