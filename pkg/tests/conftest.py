"""Test configuration and fixtures."""

import pytest

from storyplan.config import settings
from storyplan.geometry.predicates import Point
from storyplan.graph.generators import cycle, generate_from_spec
from storyplan.graph.models import Graph, build_graph


@pytest.fixture(autouse=True)
def debug_assertions():
    """Run every test with the structural checks switched on."""
    previous = settings.planner.debug_assertions
    settings.planner.debug_assertions = True
    yield
    settings.planner.debug_assertions = previous


@pytest.fixture
def petersen() -> Graph:
    return generate_from_spec("petersen")


@pytest.fixture
def cube() -> Graph:
    return generate_from_spec("cube")


@pytest.fixture
def k4() -> Graph:
    return generate_from_spec("k4")


@pytest.fixture
def k33() -> Graph:
    return generate_from_spec("k3,3")


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def grid4x4() -> Graph:
    return generate_from_spec("grid4x4")


@pytest.fixture
def square_positions() -> dict[int, Point]:
    """Unit square, counterclockwise from the origin."""
    return {0: Point(0, 0), 1: Point(1, 0), 2: Point(1, 1), 3: Point(0, 1)}


@pytest.fixture
def octagon_with_inner_vertex() -> tuple[Graph, dict[int, Point]]:
    """C8 on 0..7 with vertex 8 inside, adjacent to 0 and 4.

    Vertex 8 sits on the segment-free middle of the octagon, so 0-8-4 is a
    half-chord splitting the octagon into two faces.
    """
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (4, 8)]
    g = build_graph(9, edges)
    positions = {
        0: Point(2, 0),
        1: Point(4, 0),
        2: Point(6, 2),
        3: Point(6, 4),
        4: Point(4, 6),
        5: Point(2, 6),
        6: Point(0, 4),
        7: Point(0, 2),
        8: Point(3, 3),
    }
    return g, positions
