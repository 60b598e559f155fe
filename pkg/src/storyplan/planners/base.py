"""Shared plumbing for the constructive planners."""

import functools
import time
from collections.abc import Callable, Mapping, Sequence
from typing import ParamSpec

import structlog

from storyplan.config import settings
from storyplan.exceptions import InvariantViolationError
from storyplan.geometry.predicates import Point
from storyplan.graph.models import Graph
from storyplan.model.models import PlanMode, Storyplan
from storyplan.model.verifier import verify_storyplan
from storyplan.utils.metrics import metrics

logger = structlog.get_logger(__name__)

P = ParamSpec("P")


def make_plan(
    g: Graph,
    order: Sequence[int],
    positions: Mapping[int, Point],
    mode: PlanMode,
    algorithm: str,
) -> Storyplan:
    return Storyplan(
        graph=g,
        order=tuple(order),
        positions=dict(positions),
        mode=mode,
        algorithm=algorithm,
    )


def line_plan(g: Graph, mode: PlanMode, algorithm: str) -> Storyplan:
    """Plan for graphs too small to need a construction: index order on a line."""
    return make_plan(g, list(g.vertices), {v: Point(v, 0) for v in g.vertices}, mode, algorithm)


def planner(algorithm: str) -> Callable[[Callable[P, Storyplan]], Callable[P, Storyplan]]:
    """Decorate a planner function with logging, metrics and the postcondition check.

    With ``settings.planner.debug_assertions`` the produced plan is verified in
    its own mode and a failure raises :class:`InvariantViolationError`.
    """

    def decorator(func: Callable[P, Storyplan]) -> Callable[P, Storyplan]:
        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> Storyplan:
            start = time.perf_counter()
            plan = func(*args, **kwargs)
            duration = time.perf_counter() - start

            if settings.planner.debug_assertions:
                report = verify_storyplan(plan.graph, plan)
                if not report.ok:
                    raise InvariantViolationError(
                        f"{algorithm} produced an invalid {plan.mode.value} plan: "
                        f"{report.first_violation}"
                    )

            if settings.monitoring.metrics_enabled:
                metrics.plan_duration_seconds.labels(algorithm=algorithm).observe(duration)
                metrics.plans_total.labels(algorithm=algorithm, mode=plan.mode.value).inc()
            logger.info(
                "Storyplan built", algorithm=algorithm, mode=plan.mode.value, n=plan.n, duration=round(duration, 3)
            )
            return plan

        return wrapper

    return decorator
