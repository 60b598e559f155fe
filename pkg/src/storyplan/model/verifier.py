"""Full storyplan verification."""

import structlog

from storyplan.config import settings
from storyplan.exceptions import NotBijectiveError, PreconditionError
from storyplan.geometry.drawing import Drawing, drawing_is_outerplane, plane_violation
from storyplan.graph.models import Edge, Graph
from storyplan.graph.recognizers import edges_form_forest, is_outerplanar_edges
from storyplan.model.frames import check_order, frames, lifespans
from storyplan.model.models import FrameCheck, PlanMode, Storyplan, VerifyReport
from storyplan.utils.metrics import metrics

logger = structlog.get_logger(__name__)


def _class_violation(
    drawing: Drawing, mode: PlanMode, plane: bool
) -> str | None:
    if mode == PlanMode.FOREST:
        if not edges_form_forest(drawing.vertices, drawing.edges):
            return "contains cycle"
    elif mode == PlanMode.OUTERPLANAR:
        if plane:
            if not drawing_is_outerplane(drawing):
                return "has a vertex off the outer face"
        elif not is_outerplanar_edges(drawing.vertices, drawing.edges):
            return "is not outerplanar"
    return None


def verify_storyplan(g: Graph, plan: Storyplan, mode: PlanMode | str | None = None) -> VerifyReport:
    """Check every requirement of a storyplan and report per frame.

    Checks the order is a bijection, every vertex has a position, every frame
    drawing (and its restriction to the vertices kept for the next frame) is
    plane and in the mode's class, lifespans are contiguous, and every edge
    shows up in some frame.

    Args:
        g: The graph the plan is meant for
        plan: Plan to check
        mode: Graph class for the frames; defaults to the plan's own mode

    Returns:
        Report with one entry per frame and the first violation, if any
    """
    check_mode = PlanMode(mode) if mode is not None else plan.mode
    violations: list[str] = []

    if plan.graph.n != g.n or plan.graph.edges != g.edges:
        violations.append("plan was built for a different graph")
    try:
        check_order(g, plan.order)
    except NotBijectiveError as e:
        return _finish(VerifyReport(ok=False, mode=check_mode, first_violation=str(e)))

    missing = [v for v in g.vertices if v not in plan.positions]
    if missing:
        violations.append(f"vertices without position: {missing}")
        return _finish(VerifyReport(ok=False, mode=check_mode, first_violation=violations[0]))

    spans = lifespans(g, plan.order)
    covered: set[Edge] = set()
    per_frame = []
    max_edges = 0
    for frame in frames(g, plan.order):
        for v in frame.visible:
            if not spans[v].contains(frame.step):
                violations.append(f"frame {frame.step}: vertex {v} visible outside its lifespan")
        drawing = Drawing.induced(g, frame.visible, plan.positions)
        covered |= drawing.edges
        max_edges = max(max_edges, len(drawing.edges))

        problem = plane_violation(drawing)
        plane_ok = problem is None
        if problem is not None:
            violations.append(f"frame {frame.step}: {problem}")

        class_problem = _class_violation(drawing, check_mode, plane_ok)
        if class_problem is not None:
            violations.append(f"frame {frame.step} {class_problem}")

        prime_edges = None
        if frame.prime is not None:
            prime = Drawing.induced(g, frame.prime, plan.positions)
            prime_edges = len(prime.edges)
            prime_problem = plane_violation(prime)
            if prime_problem is not None:
                violations.append(f"frame {frame.step} prime: {prime_problem}")

        per_frame.append(
            FrameCheck(
                step=frame.step,
                plane_ok=plane_ok,
                class_ok=class_problem is None,
                edges=len(drawing.edges),
                prime_edges=prime_edges,
                violation=problem or class_problem,
            )
        )

    uncovered = sorted(g.edges - covered)
    if uncovered:
        violations.append(f"edges never visible: {uncovered}")

    report = VerifyReport(
        ok=not violations,
        mode=check_mode,
        per_frame=per_frame,
        first_violation=violations[0] if violations else None,
        max_edges=max_edges,
    )
    return _finish(report)


def _finish(report: VerifyReport) -> VerifyReport:
    if settings.monitoring.metrics_enabled:
        metrics.verify_total.labels(mode=report.mode.value, result="ok" if report.ok else "violation").inc()
    if report.ok:
        logger.info("Storyplan verified", mode=report.mode.value, max_edges=report.max_edges)
    else:
        logger.info("Storyplan rejected", mode=report.mode.value, violation=report.first_violation)
    return report


def restrict_plan(plan: Storyplan, subgraph: Graph) -> Storyplan:
    """Restrict a plan to a spanning subgraph of its graph.

    Frames of the restricted plan are subgraphs of the original frames, so
    the restriction keeps the plan's mode.

    Raises:
        PreconditionError: If ``subgraph`` is not a spanning subgraph
    """
    if subgraph.n != plan.graph.n or not subgraph.edges <= plan.graph.edges:
        raise PreconditionError("Restriction target must be a spanning subgraph of the plan's graph")
    return Storyplan(
        graph=subgraph,
        order=plan.order,
        positions=plan.positions,
        mode=plan.mode,
        algorithm=plan.algorithm,
    )
