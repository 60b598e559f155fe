"""Forest storyplans for triangle-free outerplanar graphs."""

import structlog

from storyplan.exceptions import HasTriangleError, NotOuterplanarError
from storyplan.geometry.layout import convex_positions
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import find_triangle, is_outerplanar, outerplanar_boundary_order
from storyplan.model.models import PlanMode, Storyplan
from storyplan.planners.base import make_plan, planner

logger = structlog.get_logger(__name__)

ALGORITHM = "outer-face"


@planner(ALGORITHM)
def plan_outerplanar_forest(g: Graph) -> Storyplan:
    """Forest storyplan following the order of the vertices along the outer face.

    The vertices are placed on a convex curve in the boundary order of an
    outerplane embedding. In this order the second vertex of any inner face
    disappears before its fourth vertex appears, so no face, and hence no
    cycle, is ever fully visible.

    Raises:
        NotOuterplanarError: If ``g`` is not outerplanar
        HasTriangleError: If ``g`` contains a triangle
    """
    if not is_outerplanar(g):
        raise NotOuterplanarError("Graph is not outerplanar")
    triangle = find_triangle(g)
    if triangle is not None:
        raise HasTriangleError(f"Graph contains the triangle {triangle}")

    order = outerplanar_boundary_order(g)
    logger.debug("Boundary order", order=order)
    return make_plan(g, order, convex_positions(order), PlanMode.FOREST, ALGORITHM)
