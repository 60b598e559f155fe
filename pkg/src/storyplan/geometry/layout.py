"""Planar straight-line layouts."""

from collections.abc import Sequence

import networkx as nx
import structlog

from storyplan.exceptions import GeometryError, NotPlanarError
from storyplan.geometry.drawing import Drawing, plane_violation
from storyplan.geometry.predicates import Point
from storyplan.graph.models import Graph, RotationSystem
from storyplan.graph.recognizers import planarity, rotation_to_embedding

logger = structlog.get_logger(__name__)


def straight_line_draw_planar(g: Graph, rs: RotationSystem | None = None) -> Drawing:
    """Crossing-free straight-line drawing on an integer grid.

    Uses the shift method on a triangulation of the embedding (networkx
    ``combinatorial_embedding_to_pos``); dummy edges are dropped afterwards.

    Args:
        g: Planar graph
        rs: Embedding to respect; computed by :func:`planarity` when omitted

    Raises:
        NotPlanarError: If ``g`` is not planar or ``rs`` does not embed ``g``
    """
    if rs is None:
        rs = planarity(g)
        if rs is None:
            raise NotPlanarError("Graph is not planar")
    elif not rs.is_consistent_with(g):
        raise NotPlanarError("Rotation system does not match the graph")

    embedding = rotation_to_embedding(rs)
    try:
        embedding.check_structure()
    except nx.NetworkXException as e:
        raise NotPlanarError(f"Rotation system is not a planar embedding: {e}") from e
    raw = nx.combinatorial_embedding_to_pos(embedding, fully_triangulate=False)
    positions = {v: Point(int(x), int(y)) for v, (x, y) in raw.items()}
    drawing = Drawing.of_graph(g, positions)

    violation = plane_violation(drawing)
    if violation is not None:
        raise GeometryError(f"Shift-method layout is not plane: {violation}")
    logger.debug("Computed planar layout", n=g.n, m=g.m)
    return drawing


def convex_positions(order: Sequence[int]) -> dict[int, Point]:
    """Place the k-th vertex of ``order`` at (k, k^2).

    The points are in strictly convex position, so edges between vertices that
    do not interleave in ``order`` never cross.
    """
    return {v: Point(k, k * k) for k, v in enumerate(order)}
