"""Exhaustive search for vertex orders whose frames all lie in a graph class.

The frame at step i depends only on the set of vertices placed before step i
and on the vertex placed at step i. A set of placed vertices from which no
completion exists is therefore dead no matter in which order it was placed,
and is remembered.
"""

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor

import structlog

from storyplan.config import settings
from storyplan.exceptions import InvariantViolationError, TooLargeError
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import edges_form_forest, is_outerplanar_edges, is_planar_edges
from storyplan.model.frames import FrameTracker, bits
from storyplan.model.models import PlanMode
from storyplan.oracle.models import SearchOptions, Verdict, VerdictStatus
from storyplan.oracle.symmetry import orbit_representatives
from storyplan.utils.metrics import metrics

logger = structlog.get_logger(__name__)


def frame_in_class(g: Graph, vertices: list[int], graph_class: PlanMode) -> bool:
    """Whether the subgraph of ``g`` induced by ``vertices`` is in ``graph_class``."""
    k = len(vertices)
    edges = g.induced_edges(vertices)
    if graph_class == PlanMode.FOREST:
        return len(edges) < max(k, 1) and edges_form_forest(vertices, edges)
    if graph_class == PlanMode.OUTERPLANAR:
        return k < 3 or (len(edges) <= 2 * k - 3 and is_outerplanar_edges(vertices, edges))
    return k < 5 or (len(edges) <= 3 * k - 6 and is_planar_edges(vertices, edges))


class BudgetExhausted(Exception):
    """Raised inside a search when the node budget runs out."""


class OrderSearch:
    """Depth-first search over prefixes of the vertex order, with dead-set memo."""

    def __init__(self, g: Graph, graph_class: PlanMode, node_budget: int | None = None):
        self.graph = g
        self.graph_class = graph_class
        self.node_budget = node_budget
        self.nodes = 0
        self._masks = FrameTracker.neighbor_masks(g)
        self._full = (1 << g.n) - 1
        self._dead: set[int] = set()
        self._frames: dict[int, bool] = {}

    def _frame_ok(self, frame: int) -> bool:
        ok = self._frames.get(frame)
        if ok is None:
            ok = frame_in_class(self.graph, bits(frame), self.graph_class)
            self._frames[frame] = ok
        return ok

    def _extensions(self, placed: int) -> Iterator[int]:
        for v in bits(self._full & ~placed):
            self.nodes += 1
            if self.node_budget is not None and self.nodes > self.node_budget:
                raise BudgetExhausted
            if self._frame_ok(FrameTracker.frame_mask(self._masks, placed, v)):
                yield v

    def complete(self, placed: int, order: list[int]) -> bool:
        """Extend ``order`` in place to a full feasible order; False if none exists."""
        if placed == self._full:
            return True
        if placed in self._dead:
            return False
        for v in self._extensions(placed):
            order.append(v)
            if self.complete(placed | 1 << v, order):
                return True
            order.pop()
        self._dead.add(placed)
        return False

    def enumerate(self, placed: int, order: list[int]) -> Iterator[list[int]]:
        """Every feasible completion of ``order``."""
        if placed == self._full:
            yield list(order)
            return
        if placed in self._dead:
            return
        found = False
        for v in self._extensions(placed):
            order.append(v)
            for result in self.enumerate(placed | 1 << v, order):
                found = True
                yield result
            order.pop()
        if not found:
            self._dead.add(placed)


def _search_root(
    g: Graph, graph_class: PlanMode, root: int, node_budget: int
) -> tuple[VerdictStatus, list[int] | None, int]:
    search = OrderSearch(g, graph_class, node_budget)
    order = [root]
    try:
        found = search.complete(1 << root, order)
    except BudgetExhausted:
        return VerdictStatus.BUDGET_EXHAUSTED, None, search.nodes
    if found:
        return VerdictStatus.FEASIBLE, order, search.nodes
    return VerdictStatus.INFEASIBLE, None, search.nodes


def _check_witness(g: Graph, order: list[int], graph_class: PlanMode) -> None:
    tracker = FrameTracker(g)
    for v in order:
        step = tracker.push(v)
        if not frame_in_class(g, sorted(step.frame), graph_class):
            raise InvariantViolationError(f"Witness frame {step.step} is not {graph_class.value}")


def decide_storyplan(
    g: Graph, graph_class: PlanMode | str, options: SearchOptions | None = None
) -> Verdict:
    """Decide whether some vertex order keeps every frame of ``g`` in ``graph_class``.

    With ``options.symmetry`` only one vertex per automorphism orbit is tried
    first. With ``options.jobs > 1`` the first-vertex branches run in worker
    processes, each with its own node budget.

    Raises:
        TooLargeError: If ``g`` has more than ``options.max_n`` vertices
    """
    graph_class = PlanMode(graph_class)
    options = options or SearchOptions.from_settings()
    if g.n > options.max_n:
        raise TooLargeError(f"Graph has {g.n} vertices, the search accepts at most {options.max_n}")
    if g.n == 0:
        return Verdict(graph_class=graph_class, status=VerdictStatus.FEASIBLE, witness=[])

    roots = orbit_representatives(g) if options.symmetry else list(g.vertices)
    logger.info("Searching orders", graph_class=graph_class.value, n=g.n, roots=len(roots))

    if options.jobs > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            results = list(
                pool.map(
                    _search_root,
                    [g] * len(roots),
                    [graph_class] * len(roots),
                    roots,
                    [options.node_budget] * len(roots),
                )
            )
    else:
        results = []
        budget = options.node_budget
        for root in roots:
            status, witness, nodes = _search_root(g, graph_class, root, budget)
            results.append((status, witness, nodes))
            budget -= nodes
            if status == VerdictStatus.FEASIBLE or budget <= 0:
                break

    nodes = sum(r[2] for r in results)
    if settings.monitoring.metrics_enabled:
        metrics.oracle_nodes_total.labels(graph_class=graph_class.value).inc(nodes)
    statuses = [r[0] for r in results]
    if VerdictStatus.FEASIBLE in statuses:
        _, witness, _ = results[statuses.index(VerdictStatus.FEASIBLE)]
        if settings.planner.debug_assertions:
            _check_witness(g, witness, graph_class)
        verdict = Verdict(graph_class=graph_class, status=VerdictStatus.FEASIBLE, witness=witness, nodes_explored=nodes)
    elif VerdictStatus.BUDGET_EXHAUSTED in statuses or len(results) < len(roots):
        verdict = Verdict(graph_class=graph_class, status=VerdictStatus.BUDGET_EXHAUSTED, nodes_explored=nodes)
    else:
        verdict = Verdict(graph_class=graph_class, status=VerdictStatus.INFEASIBLE, nodes_explored=nodes)
    logger.info("Search finished", graph_class=graph_class.value, status=verdict.status.value, nodes=nodes)
    return verdict


def enumerate_feasible_orders(
    g: Graph, graph_class: PlanMode | str, max_n: int | None = None
) -> Iterator[list[int]]:
    """All vertex orders of ``g`` whose frames lie in ``graph_class``.

    Raises:
        TooLargeError: If ``g`` has more than ``max_n`` vertices
    """
    graph_class = PlanMode(graph_class)
    limit = max_n or settings.oracle.max_n
    if g.n > limit:
        raise TooLargeError(f"Graph has {g.n} vertices, the search accepts at most {limit}")
    search = OrderSearch(g, graph_class)
    for root in g.vertices:
        yield from search.enumerate(1 << root, [root])
