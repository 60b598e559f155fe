"""Forest storyplans for bipartite graphs: one side first, then the other."""

import structlog

from storyplan.exceptions import NotBipartiteError
from storyplan.geometry.predicates import Point
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import bipartition
from storyplan.model.models import PlanMode, Storyplan
from storyplan.planners.base import make_plan, planner

logger = structlog.get_logger(__name__)

ALGORITHM = "bipartite"


@planner(ALGORITHM)
def plan_bipartite_forest(g: Graph) -> Storyplan:
    """Forest storyplan listing one colour class and then the other.

    Every vertex of the second side sees all its neighbors already placed, so
    it is completed at its own step and each frame is a star around it plus
    isolated vertices. The first side lies on the x-axis and the k-th vertex
    of the second side at (k, 1), which keeps every star plane.

    Raises:
        NotBipartiteError: If ``g`` has an odd cycle
    """
    sides = bipartition(g)
    if sides is None:
        raise NotBipartiteError("Graph has an odd cycle")
    first, second = sides

    positions = {v: Point(k, 0) for k, v in enumerate(first)}
    positions.update({v: Point(k, 1) for k, v in enumerate(second)})
    logger.debug("Bipartition", first=len(first), second=len(second))
    return make_plan(g, first + second, positions, PlanMode.FOREST, ALGORITHM)
