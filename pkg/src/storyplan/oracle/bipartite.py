"""Which side of a complete bipartite graph is ever fully visible."""

from collections.abc import Sequence
from dataclasses import dataclass

import structlog

from storyplan.exceptions import FramesNotPlanarError, NotBipartiteError
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import bipartition, is_planar_edges
from storyplan.model.frames import frames

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SideVisibility:
    """First step at which each side is entirely visible, or None.

    Side ``a`` is the smaller side; on a tie, the side holding vertex 0.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    a_step: int | None
    b_step: int | None

    @property
    def exactly_one(self) -> bool:
        return (self.a_step is None) != (self.b_step is None)


def complete_bipartite_sides(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two sides of a complete bipartite graph, smaller first.

    Raises:
        NotBipartiteError: If ``g`` is not complete bipartite
    """
    sides = bipartition(g)
    if sides is None:
        raise NotBipartiteError("Graph is not bipartite")
    first, second = sides
    if g.m != len(first) * len(second):
        raise NotBipartiteError("Graph is bipartite but not complete bipartite")
    if len(second) < len(first) or (len(second) == len(first) and 0 in second):
        first, second = second, first
    return tuple(sorted(first)), tuple(sorted(second))


def check_bipartite_visibility(g: Graph, order: Sequence[int]) -> SideVisibility:
    """Report for each side whether all its vertices are visible at one step.

    Raises:
        NotBipartiteError: If ``g`` is not complete bipartite
        FramesNotPlanarError: If some frame of ``order`` is not planar
        NotBijectiveError: If ``order`` is not a permutation of the vertices
    """
    a, b = complete_bipartite_sides(g)
    a_step = b_step = None
    for frame in frames(g, order):
        vertices = frame.visible
        if not is_planar_edges(vertices, g.induced_edges(vertices)):
            raise FramesNotPlanarError(f"Frame {frame.step} is not planar")
        if a_step is None and vertices.issuperset(a):
            a_step = frame.step
        if b_step is None and vertices.issuperset(b):
            b_step = frame.step
    result = SideVisibility(a=a, b=b, a_step=a_step, b_step=b_step)
    logger.debug("Side visibility", a_step=a_step, b_step=b_step)
    return result
