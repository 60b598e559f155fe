"""Placing a new vertex so that the next frame stays plane and outerplane.

The subcubic planners add one vertex at a time next to at most two leftover
edges sharing a hub vertex ``v``. The case analysis below decides where the
new vertex should go; the exact search then looks for a point in that region
and falls back to any feasible point.

Every candidate lies on a dyadic grid whose spacing depends only on the
search radius and the halving depth, never on earlier coordinates.
"""

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from math import ceil, gcd

import structlog

from storyplan.config import settings
from storyplan.exceptions import NoFeasibleRegionError
from storyplan.geometry.drawing import Drawing, drawing_is_outerplane, extension_is_plane
from storyplan.geometry.predicates import Point, angular_order, orient, segments_intersect
from storyplan.graph.models import Edge, normalize_edge
from storyplan.utils.metrics import metrics

logger = structlog.get_logger(__name__)

Region = Callable[[Point], bool]

BASE_DIRECTIONS: tuple[Point, ...] = tuple(
    Point(dx, dy)
    for dx in range(-3, 4)
    for dy in range(-3, 4)
    if (dx, dy) != (0, 0) and gcd(dx, dy) == 1
)

# Grid refinements tried for each offset t: candidates snap to spacing t / 2^s.
SNAP_REFINEMENTS: tuple[int, ...] = (2, 5, 9)


class PlacementCase(StrEnum):
    """Configurations of the leftover edges around the hub vertex."""

    FREE = "free"
    UNION = "union"
    INTERSECTION = "intersection"
    ONE_RAY_UNION = "one_ray_union"
    ONE_RAY_INTERSECTION = "one_ray_intersection"
    VICINITY = "vicinity"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PlacementContext:
    """Everything needed to place the next vertex.

    ``frame`` is the drawing of the vertices that stay visible (D'_{i-1});
    ``neighbors`` are the already visible neighbors of the new vertex.
    """

    frame: Drawing
    new_vertex: int
    neighbors: tuple[int, ...]
    fallback_origin: Point = field(default_factory=lambda: Point(0, 0))

    @property
    def leftover_edges(self) -> list[Edge]:
        return sorted(self.frame.edges)

    def hub(self) -> int | None:
        """Shared endpoint of the leftover edges (or an endpoint of the single one)."""
        edges = self.leftover_edges
        if not edges:
            return None
        if len(edges) >= 2:
            common = set(edges[0]).intersection(*edges[1:])
            if common:
                return min(common)
            return None
        a, b = edges[0]
        if a in self.neighbors:
            return a
        return b if b in self.neighbors else a

    def leftovers(self) -> tuple[int, ...]:
        """Far endpoints v', v'' of the leftover edges at the hub."""
        hub = self.hub()
        if hub is None:
            return ()
        return tuple(b if a == hub else a for a, b in self.leftover_edges if hub in (a, b))


@dataclass(frozen=True)
class PlacementPlan:
    """Case and preferred region for one placement."""

    case: PlacementCase
    region: Region
    anchors: tuple[int, ...]


def _everywhere(_: Point) -> bool:
    return True


def _side_without(a: Point, b: Point, avoid: Iterable[Point]) -> int | None:
    """Open side (+1/-1) of line ab containing none of ``avoid``; None if both sides do."""
    sides = {orient(a, b, p) for p in avoid}
    free = [s for s in (1, -1) if s not in sides]
    return free[0] if free else None


def _ray_enters_angle(v: Point, u: Point, w: Point, x: Point) -> bool:
    """True iff the ray from v through x passes through the interior of triangle vuw."""
    turn = orient(v, u, w)
    if turn == 0:
        return False
    return orient(v, u, x) == turn and orient(v, x, w) == turn


def _on_ray(p: Point, origin: Point, through: Point) -> bool:
    if orient(origin, through, p) != 0:
        return False
    d = through - origin
    q = p - origin
    return d.x * q.x + d.y * q.y >= 0


def classify_placement(ctx: PlacementContext) -> PlacementPlan:
    """Decide the placement case and the region the new vertex should go to."""
    hub = ctx.hub()
    pos = ctx.frame.positions
    if hub is None:
        anchors = ctx.neighbors or tuple(sorted(ctx.frame.vertices))
        return PlacementPlan(PlacementCase.FREE, _everywhere, anchors)

    leftovers = ctx.leftovers()
    others = tuple(u for u in ctx.neighbors if u != hub)
    if any(u in leftovers for u in others):
        return PlacementPlan(PlacementCase.VICINITY, _everywhere, (hub,))
    if hub not in ctx.neighbors or len(others) != 2 or len(leftovers) != 2:
        return PlacementPlan(PlacementCase.DEGENERATE, _everywhere, (hub, *others))

    v, u, w = pos[hub], pos[others[0]], pos[others[1]]
    v1, v2 = pos[leftovers[0]], pos[leftovers[1]]
    hits1 = _ray_enters_angle(v, u, w, v1)
    hits2 = _ray_enters_angle(v, u, w, v2)

    if hits1 == hits2:
        su = _side_without(v, u, (v1, v2))
        sw = _side_without(v, w, (v1, v2))
        halfplanes = [(a, s) for a, s in ((u, su), (w, sw)) if s is not None]

        if not hits1:

            def union(p: Point) -> bool:
                return any(orient(v, a, p) == s for a, s in halfplanes)

            return PlacementPlan(PlacementCase.UNION, union, (hub, *others))

        def intersection(p: Point) -> bool:
            return bool(halfplanes) and all(orient(v, a, p) == s for a, s in halfplanes)

        return PlacementPlan(PlacementCase.INTERSECTION, intersection, (hub, *others))

    # Exactly one ray is hit; call it the ray through v1.
    if hits2:
        v1, v2 = v2, v1
    side_u = -orient(u, v1, v)
    side_w = -orient(w, v1, v)
    side_v2 = orient(v, v2, v1)
    crossing = segments_intersect((u, w), (v, v1))

    def in_h(p: Point, a: Point, side: int) -> bool:
        return side != 0 and orient(a, v1, p) == side

    if not crossing:

        def one_ray_union(p: Point) -> bool:
            return (
                (in_h(p, u, side_u) or in_h(p, w, side_w))
                and orient(v, v2, p) == side_v2
                and not _on_ray(p, v, v1)
            )

        return PlacementPlan(PlacementCase.ONE_RAY_UNION, one_ray_union, (hub, *others))

    def one_ray_intersection(p: Point) -> bool:
        return (
            in_h(p, u, side_u)
            and in_h(p, w, side_w)
            and orient(v, v2, p) == side_v2
            and not _on_ray(p, v, v1)
        )

    return PlacementPlan(PlacementCase.ONE_RAY_INTERSECTION, one_ray_intersection, (hub, *others))


def _l1_normalized(d: Point) -> Point:
    return d.scale(Fraction(1, abs(d.x) + abs(d.y)))


def gap_directions(origin: Point, targets: Iterable[Point]) -> list[Point]:
    """One direction inside every angular gap between the rays to ``targets``.

    Opposite rays are included, so that every sector cut out by a line
    through ``origin`` and a target gets a direction.
    """
    dirs: dict[int, Point] = {}
    for p in targets:
        if p == origin:
            continue
        d = _l1_normalized(p - origin)
        dirs[len(dirs)] = d
        dirs[len(dirs)] = d.scale(-1)
    if not dirs:
        return []
    ordered = [dirs[k] for k in angular_order(Point(0, 0), dirs)]
    result = []
    for i, d1 in enumerate(ordered):
        d2 = ordered[(i + 1) % len(ordered)]
        turn = d1.x * d2.y - d1.y * d2.x
        if d1 == d2:
            continue
        if turn > 0:
            result.append(d1 + d2)
        else:
            result.append(Point(-d1.y, d1.x))
    return result


def _collinear_with_pair(p: Point, points: list[Point]) -> bool:
    for i, a in enumerate(points):
        for b in points[i + 1 :]:
            if orient(a, b, p) == 0:
                return True
    return False


def _extent(points: Iterable[Point]) -> Fraction:
    pts = list(points)
    if not pts:
        return Fraction(1)
    width = max(p.x for p in pts) - min(p.x for p in pts)
    height = max(p.y for p in pts) - min(p.y for p in pts)
    return max(width, height, Fraction(1))


def radius_exponent(extent: Fraction) -> int:
    """Smallest e with 2^e >= extent."""
    return (ceil(extent) - 1).bit_length()


def snap(p: Point, step: Fraction) -> Point:
    """Nearest point of the grid ``step * Z^2``."""
    return Point(round(p.x / step) * step, round(p.y / step) * step)


def candidate_points(
    anchors: Iterable[Point],
    directions_for: Callable[[Point], list[Point]],
    exponent: int,
    shrink_steps: int,
) -> Iterator[Point]:
    """Candidates near ``a + t * d`` for shrinking t = 2^(exponent - k), larger t first.

    Each ideal point is snapped to the grid of spacing t / 2^s for the
    refinements in ``SNAP_REFINEMENTS``, so every candidate has dyadic
    coordinates whose denominator depends on k and s only.
    """
    anchor_list = list(dict.fromkeys(anchors))
    direction_lists = {a: directions_for(a) for a in anchor_list}
    seen: set[Point] = set()
    for k in range(-1, shrink_steps + 1):
        t = Fraction(2) ** (exponent - k)
        for s in SNAP_REFINEMENTS:
            step = t / 2**s
            for a in anchor_list:
                for d in direction_lists[a]:
                    p = snap(a + d.scale(t), step)
                    if p not in seen:
                        seen.add(p)
                        yield p


def search_position(
    frame: Drawing,
    new_vertex: int,
    neighbors: Iterable[int],
    anchors: Iterable[Point],
    region: Region = _everywhere,
    shrink_steps: int = 64,
    outerplane: bool = True,
    extra_directions: Iterable[Point] = (),
) -> tuple[Point, bool]:
    """Exact search for a point keeping the extended frame plane (and outerplane).

    Candidates in ``region`` and in general position with the frame's points
    are preferred, in that order.

    Returns:
        The chosen point and whether it lies in ``region``

    Raises:
        NoFeasibleRegionError: If no candidate keeps the frame plane
    """
    nbrs = tuple(neighbors)
    visible_points = [frame.point(v) for v in sorted(frame.vertices)]
    taken = set(visible_points)
    extra = list(extra_directions)

    def directions_for(a: Point) -> list[Point]:
        return extra + gap_directions(a, visible_points) + list(BASE_DIRECTIONS)

    anchor_points = list(anchors) or [Point(0, 0)]
    exponent = radius_exponent(_extent(visible_points + anchor_points))
    extended_vertices = frame.vertices | {new_vertex}
    extended_edges = frame.edges | {normalize_edge(new_vertex, u) for u in nbrs}

    best: tuple[int, Point] | None = None
    for p in candidate_points(anchor_points, directions_for, exponent, shrink_steps):
        if p in taken:
            continue
        tier = 0 if region(p) else 2
        if best is not None and tier >= best[0]:
            continue
        tier += 1 if _collinear_with_pair(p, visible_points) else 0
        if best is not None and tier >= best[0]:
            continue
        if not extension_is_plane(frame, new_vertex, p, nbrs):
            continue
        if outerplane:
            positions: Mapping[int, Point] = {**frame.positions, new_vertex: p}
            if not drawing_is_outerplane(Drawing(extended_vertices, extended_edges, positions)):
                continue
        best = (tier, p)
        if tier == 0:
            break

    if best is None:
        raise NoFeasibleRegionError(
            f"No position for vertex {new_vertex} keeps the frame "
            f"{'outerplane' if outerplane else 'plane'}"
        )
    return best[1], best[0] < 2


def place_cubic_vertex(ctx: PlacementContext, shrink_steps: int = 64) -> Point:
    """Position for the new vertex of a subcubic storyplan step.

    Follows the case analysis of :func:`classify_placement`; the returned
    point always keeps the new frame plane and outerplane. A point outside the
    preferred region is used only when the region has no feasible candidate.

    Raises:
        NoFeasibleRegionError: If no feasible point exists at all
    """
    plan = classify_placement(ctx)
    pos = ctx.frame.positions
    anchors = [pos[a] for a in plan.anchors if a in ctx.frame.vertices]
    anchors += [pos[a] for a in ctx.leftovers()]
    if not anchors:
        anchors = [ctx.fallback_origin]

    point, in_region = search_position(
        ctx.frame,
        ctx.new_vertex,
        ctx.neighbors,
        anchors,
        region=plan.region,
        shrink_steps=shrink_steps,
    )
    if not in_region:
        if settings.monitoring.metrics_enabled:
            metrics.placement_fallbacks_total.labels(planner="subcubic").inc()
        logger.warning(
            "Placed vertex outside the preferred region",
            vertex=ctx.new_vertex,
            case=plan.case.value,
        )
    else:
        logger.debug("Placed vertex", vertex=ctx.new_vertex, case=plan.case.value)
    return point
