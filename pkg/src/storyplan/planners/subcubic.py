"""Storyplans for graphs of maximum degree three.

Both planners share one ordering engine. The next vertex is always an
unplaced neighbor of the visible vertex that is closest to disappearing:
the one with the most placed neighbors, counting missing degree as placed,
then with the most visible neighbors, then with the smallest index. This
keeps at most two edges between consecutive frames and at most five edges
in every frame.
"""

from collections import defaultdict

import structlog

from storyplan.config import settings
from storyplan.exceptions import (
    BoundViolationError,
    DegreeTooHighError,
    HasTriangleError,
    IsK4Error,
)
from storyplan.geometry.drawing import Drawing
from storyplan.geometry.placement import PlacementContext, place_cubic_vertex
from storyplan.geometry.predicates import Point
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import connected_components, find_triangle, max_degree
from storyplan.model.frames import FrameTracker, StepResult
from storyplan.model.models import PlanMode, Storyplan
from storyplan.planners.base import make_plan, planner

logger = structlog.get_logger(__name__)

ALGORITHM = "subcubic"

MAX_DEGREE = 3
MAX_FRAME_EDGES = 5
MAX_PRIME_EDGES = 2


class DegreeBuckets:
    """Visible uncompleted vertices bucketed by (saturation, degree in the kept part).

    The saturation of a vertex is its number of placed neighbors plus its
    missing degree, i.e. three minus its number of unplaced neighbors.
    """

    def __init__(self):
        self._keys: dict[int, tuple[int, int]] = {}
        self._buckets: dict[tuple[int, int], set[int]] = defaultdict(set)

    def __len__(self) -> int:
        return len(self._keys)

    def __contains__(self, v: int) -> bool:
        return v in self._keys

    def key(self, v: int) -> tuple[int, int]:
        return self._keys[v]

    def update(self, v: int, key: tuple[int, int]) -> None:
        old = self._keys.get(v)
        if old == key:
            return
        if old is not None:
            self._discard(v, old)
        self._keys[v] = key
        self._buckets[key].add(v)

    def remove(self, v: int) -> None:
        old = self._keys.pop(v, None)
        if old is not None:
            self._discard(v, old)

    def _discard(self, v: int, key: tuple[int, int]) -> None:
        bucket = self._buckets[key]
        bucket.discard(v)
        if not bucket:
            del self._buckets[key]

    def select(self) -> int:
        """Smallest vertex of the highest non-empty bucket."""
        return min(self._buckets[max(self._buckets)])

    def items(self) -> list[tuple[int, tuple[int, int]]]:
        return sorted(self._keys.items())


class SubcubicEngine:
    """Ordering and placement for one subcubic input."""

    def __init__(self, g: Graph, mode: PlanMode):
        self.graph = g
        self.mode = mode
        self.tracker = FrameTracker(g)
        self.buckets = DegreeBuckets()
        self.order: list[int] = []
        self.positions: dict[int, Point] = {}
        self.check = settings.planner.debug_assertions
        self.shrink_steps = settings.planner.shrink_steps
        self._component_size = 0
        self._local_step = 0
        self._component_of = {v: len(c) for c in connected_components(g) for v in c}

    def visible_degree(self, v: int) -> int:
        return sum(1 for u in self.graph.neighbors(v) if u in self.tracker.visible)

    def _key(self, v: int) -> tuple[int, int]:
        return (MAX_DEGREE - self.tracker.pending(v), self.visible_degree(v))

    def next_vertex(self) -> int:
        """Choose the next vertex of the order."""
        if not self.buckets:
            start = min(v for v in self.graph.vertices if v not in self.tracker.placed)
            self._component_size = self._component_of[start]
            self._local_step = 0
            return start

        hub = self.buckets.select()
        if self.mode == PlanMode.FOREST:
            shared = [v for v, (_, gdeg) in self.buckets.items() if gdeg == 2]
            if shared:
                hub = shared[0]
        return min(u for u in self.graph.neighbors(hub) if u not in self.tracker.placed)

    def _fresh_origin(self) -> Point:
        if not self.positions:
            return Point(0, 0)
        return Point(max(p.x for p in self.positions.values()) + 2, 0)

    def place(self, v: int) -> Point:
        if not self.tracker.visible:
            return self._fresh_origin()
        frame = Drawing.induced(self.graph, self.tracker.visible, self.positions)
        neighbors = tuple(sorted(u for u in self.graph.neighbors(v) if u in self.tracker.visible))
        ctx = PlacementContext(
            frame=frame,
            new_vertex=v,
            neighbors=neighbors,
            fallback_origin=self._fresh_origin(),
        )
        return place_cubic_vertex(ctx, self.shrink_steps)

    def push(self, v: int) -> StepResult:
        self.positions[v] = self.place(v)
        step = self.tracker.push(v)
        self.order.append(v)
        self._local_step += 1

        for c in step.completed:
            self.buckets.remove(c)
        affected = {v, *self.graph.neighbors(v)}
        for c in step.completed:
            affected.update(self.graph.neighbors(c))
        for u in affected:
            if u in self.tracker.visible:
                self.buckets.update(u, self._key(u))

        if self.check:
            self._check_bounds(step)
        return step

    def _check_bounds(self, step: StepResult) -> None:
        frame_edges = self.graph.induced_edges(step.frame)
        if len(frame_edges) > MAX_FRAME_EDGES:
            raise BoundViolationError(f"Frame {step.step} has {len(frame_edges)} edges")

        i, n_c = self._local_step, self._component_size
        bounded = i <= n_c - 1 and (i >= 4 or self.mode == PlanMode.FOREST)
        if not bounded:
            return
        prime_edges = self.graph.induced_edges(step.prime)
        if len(prime_edges) > MAX_PRIME_EDGES:
            raise BoundViolationError(
                f"Step {step.step} keeps {len(prime_edges)} edges for the next frame"
            )
        if i >= 4 and len(prime_edges) == 2 and not all(step.vertex in e for e in prime_edges):
            raise BoundViolationError(
                f"Step {step.step} keeps two edges not both incident with vertex {step.vertex}"
            )

    def run(self) -> Storyplan:
        while len(self.order) < self.graph.n:
            self.push(self.next_vertex())
        logger.debug("Subcubic order built", mode=self.mode.value, n=self.graph.n)
        return make_plan(self.graph, self.order, self.positions, self.mode, ALGORITHM)


def _check_degree(g: Graph) -> None:
    degree = max_degree(g)
    if degree > MAX_DEGREE:
        raise DegreeTooHighError(f"Maximum degree is {degree}, at most {MAX_DEGREE} is supported")


def k4_component(g: Graph) -> list[int] | None:
    for component in connected_components(g):
        if len(component) == 4 and len(g.induced_edges(component)) == 6:
            return component
    return None


@planner(ALGORITHM)
def plan_subcubic_outerplanar(g: Graph) -> Storyplan:
    """Outerplanar storyplan with at most five edges per frame.

    Raises:
        DegreeTooHighError: If a vertex has degree greater than three
        IsK4Error: If a connected component is K4
    """
    _check_degree(g)
    k4 = k4_component(g)
    if k4 is not None:
        raise IsK4Error(f"Component {k4} is K4, which has no outerplanar storyplan")
    return SubcubicEngine(g, PlanMode.OUTERPLANAR).run()


@planner(ALGORITHM)
def plan_subcubic_forest(g: Graph) -> Storyplan:
    """Forest storyplan with at most five edges per frame for triangle-free inputs.

    Raises:
        DegreeTooHighError: If a vertex has degree greater than three
        HasTriangleError: If the graph contains a triangle
    """
    _check_degree(g)
    triangle = find_triangle(g)
    if triangle is not None:
        raise HasTriangleError(f"Graph contains the triangle {triangle}")
    return SubcubicEngine(g, PlanMode.FOREST).run()
