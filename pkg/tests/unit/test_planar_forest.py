"""Unit tests for the planar forest planner: boundary structure, rules and picks."""

import networkx as nx
import pytest

from storyplan.exceptions import CactusViolationError, HasTriangleError, NoGoodVertexError, NotPlanarError
from storyplan.geometry.layout import convex_positions
from storyplan.geometry.predicates import Point
from storyplan.graph.generators import cycle
from storyplan.graph.models import Graph, build_graph
from storyplan.model.models import PlanMode
from storyplan.model.verifier import verify_storyplan
from storyplan.planar_forest import (
    PlannerState,
    Rule,
    candidates,
    component_tree,
    component_walk,
    compute_boundary_structure,
    find_good_vertex,
    half_chord_faces,
    is_good,
    leaf_region,
    pick,
    plan_planar_forest,
    rule_violation,
    weak_dual,
)
from storyplan.planar_forest.boundary import _check_cactus, trace_faces


def analyse(state: PlannerState):
    bs = compute_boundary_structure(state)
    dual = weak_dual(bs)
    return bs, dual, half_chord_faces(bs, dual)


@pytest.fixture
def hexagon_state(c6) -> PlannerState:
    return PlannerState(c6, convex_positions(range(6)))


@pytest.fixture
def chord_state() -> PlannerState:
    g = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    return PlannerState(g, convex_positions(range(6)))


@pytest.fixture
def split_dodecagon() -> tuple[Graph, dict[int, Point]]:
    """Dodecagon with the chord (0, 6) and an inner vertex on each side.

    Vertex 12 is adjacent to 2 and 4, vertex 13 to 8 and 10, so every face of
    the skeleton has at least two inner edges.
    """
    edges = [(i, (i + 1) % 12) for i in range(12)] + [(0, 6), (2, 12), (4, 12), (8, 13), (10, 13)]
    positions = convex_positions(range(12))
    positions[12] = Point(3, 10)
    positions[13] = Point(9, 82)
    return build_graph(14, edges), positions


@pytest.fixture
def octagon_state(octagon_with_inner_vertex) -> PlannerState:
    g, positions = octagon_with_inner_vertex
    return PlannerState(g, positions)


class TestBoundaryStructure:
    """Test outer cycles, chords, half-chords and the weak dual."""

    def test_cycle(self, hexagon_state):
        """Test a hexagon is one outer cycle with one inner face."""
        bs, dual, hc_faces = analyse(hexagon_state)

        assert bs.cycles == ((0, 1, 2, 3, 4, 5),)
        assert not bs.chords
        assert not bs.half_chords
        assert not bs.connectors
        assert bs.free_vertices == frozenset(range(6))
        assert len(bs.faces) == 1
        assert dual.graph.number_of_edges() == 0
        assert hc_faces == frozenset()

    def test_chord(self, chord_state):
        """Test a chord splits the hexagon into two faces joined in the weak dual."""
        bs, dual, hc_faces = analyse(chord_state)

        assert bs.chords == frozenset({(0, 3)})
        assert bs.chord_endpoints == frozenset({0, 3})
        assert bs.free_vertices == frozenset({1, 2, 4, 5})
        assert len(bs.faces) == 2
        assert dual.graph.number_of_edges() == 1
        assert all(dual.degree(face.id) == 1 for face in bs.faces)
        assert hc_faces == frozenset()

    def test_half_chord(self, octagon_state):
        """Test an inner vertex on two cycle vertices forms a half-chord."""
        bs, dual, hc_faces = analyse(octagon_state)

        assert bs.cycles == ((0, 1, 2, 3, 4, 5, 6, 7),)
        assert bs.half_chords == ((0, 8, 4),)
        assert bs.outer_vertices == frozenset(range(8))
        assert bs.skeleton_vertices == frozenset(range(9))
        assert bs.free_vertices == frozenset({1, 2, 3, 5, 6, 7})
        assert [face.walk for face in bs.faces] == [(0, 8, 4, 3, 2, 1), (0, 7, 6, 5, 4, 8)]
        assert dual.graph.number_of_nodes() == 2
        assert dual.graph.number_of_edges() == 2
        assert hc_faces == frozenset({0, 1})

    def test_inner_vertex_off_the_cycle_is_excluded(self):
        """Test a pendant tree vertex is neither on a cycle nor a half-chord middle."""
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])
        positions = {0: Point(0, 0), 1: Point(2, 0), 2: Point(2, 2), 3: Point(0, 2), 4: Point(-1, -1)}
        bs = compute_boundary_structure(PlannerState(g, positions))

        assert bs.cycles == ((0, 1, 2, 3),)
        assert 4 in bs.outer_vertices
        assert 4 not in bs.skeleton_vertices
        assert not bs.half_chords

    def test_trace_faces_of_a_square(self):
        """Test a square has an inner and an outer face."""
        rotation = {0: [1, 3], 1: [2, 0], 2: [3, 1], 3: [0, 2]}
        faces = trace_faces(rotation)

        assert sorted(len(f) for f in faces) == [4, 4]
        assert [0, 1, 2, 3] in faces

    def test_cactus_check(self):
        """Test blocks of the weak dual must be cycles or double edges."""
        triangle = nx.MultiGraph([(0, 1), (1, 2), (0, 2)])
        double = nx.MultiGraph([(0, 1), (0, 1), (1, 2)])
        _check_cactus(triangle)
        _check_cactus(double)

        with pytest.raises(CactusViolationError):
            _check_cactus(nx.MultiGraph([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]))
        with pytest.raises(CactusViolationError):
            _check_cactus(nx.MultiGraph([(0, 1), (0, 1), (0, 1)]))

    def test_component_tree_through_shared_vertex(self):
        """Test two squares sharing a vertex hang off a cut node of the component tree."""
        g = build_graph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (3, 6)])
        positions = {
            0: Point(0, 0), 1: Point(2, 0), 2: Point(2, 2), 3: Point(0, 2),
            4: Point(0, 4), 5: Point(-2, 4), 6: Point(-2, 2),
        }
        bs, dual, _ = analyse(PlannerState(g, positions))
        tree = component_tree(dual.components(), bs, dual)

        assert len(bs.cycles) == 2
        assert nx.is_tree(tree)
        assert tree.has_edge(("cut", 3), 0)
        assert tree.has_edge(("cut", 3), 1)
        assert component_walk(tree) == [0, 1]

    def test_leaf_region_of_one_sided_chord(self, split_dodecagon):
        """Test a chord with one visible endpoint cuts off a leaf part of the weak dual."""
        g, positions = split_dodecagon
        state = PlannerState(g, positions)
        state.push(0)
        bs, dual, _ = analyse(state)
        component = dual.components()[0]
        region, u, w = leaf_region(component, state, bs, dual)
        spanned = set().union(*(dual.faces[f].vertices for f in region))

        assert bs.chords == frozenset({(0, 6)})
        assert min(dual.degree(f) for f in component) == 2
        assert (u, w) == (0, 6)
        assert spanned in ({0, 1, 2, 3, 4, 5, 6, 12}, {0, 6, 7, 8, 9, 10, 11, 13})

    def test_leaf_region_without_one_sided_chord(self, split_dodecagon):
        """Test the whole component is kept while no chord has exactly one visible endpoint."""
        g, positions = split_dodecagon
        state = PlannerState(g, positions)
        bs, dual, _ = analyse(state)
        component = dual.components()[0]

        assert leaf_region(component, state, bs, dual) == (set(component), None, None)


class TestRules:
    """Test the rules for good vertices."""

    def test_covers_cycle(self, square_positions):
        """Test a vertex whose neighborhood covers the rest of its cycle."""
        state = PlannerState(cycle(4), square_positions)
        state.push(2)
        bs = compute_boundary_structure(state)

        assert rule_violation(0, state, bs) == Rule.COVERS_CYCLE
        assert rule_violation(1, state, bs) is None

    def test_chord_rules(self, chord_state):
        """Test chord endpoints, and neighbors of a chord with a visible end."""
        bs = compute_boundary_structure(chord_state)

        assert rule_violation(0, chord_state, bs) == Rule.CHORD_ENDPOINT
        assert rule_violation(1, chord_state, bs) is None

        chord_state.push(3)
        assert rule_violation(1, chord_state, bs) == Rule.NEAR_VISIBLE_CHORD
        assert rule_violation(5, chord_state, bs) == Rule.NEAR_VISIBLE_CHORD

    def test_half_chord_endpoint(self, octagon_state):
        """Test a half-chord endpoint whose other endpoint is visible."""
        bs = compute_boundary_structure(octagon_state)
        assert is_good(0, octagon_state, bs)

        octagon_state.push(4)
        assert rule_violation(0, octagon_state, bs) == Rule.HALF_CHORD_ENDPOINT
        assert is_good(2, octagon_state, bs)


class TestGoodVertex:
    """Test candidate generation and the choice of a good vertex."""

    def test_single_face_candidates(self, hexagon_state):
        """Test a face without inner edges offers the non-neighbors of its first vertex."""
        bs, dual, hc_faces = analyse(hexagon_state)

        assert candidates(hexagon_state, bs, dual, hc_faces)[:3] == [4, 3, 2]
        assert find_good_vertex(hexagon_state, bs, dual, hc_faces) == 4

    def test_chord_face_candidates(self, chord_state):
        """Test faces on a chord offer their free vertices first."""
        bs, dual, hc_faces = analyse(chord_state)
        pool = candidates(chord_state, bs, dual, hc_faces)

        assert set(pool[:4]) == {1, 2, 4, 5}
        assert find_good_vertex(chord_state, bs, dual, hc_faces) in {1, 2, 4, 5}

    def test_half_chord_face_candidates(self, octagon_state):
        """Test faces with one half-chord offer free vertices, then half-chord ends."""
        bs, dual, hc_faces = analyse(octagon_state)

        assert candidates(octagon_state, bs, dual, hc_faces) == [3, 2, 1, 7, 6, 5, 0, 4]
        assert find_good_vertex(octagon_state, bs, dual, hc_faces) == 3

    def test_leaf_part_away_from_the_chord(self, split_dodecagon):
        """Test the leaf part offers the free vertex of its face away from the chord."""
        g, positions = split_dodecagon
        state = PlannerState(g, positions)
        state.push(0)
        bs, dual, hc_faces = analyse(state)
        region, _, _ = leaf_region(dual.components()[0], state, bs, dual)
        expected = 3 if 12 in set().union(*(dual.faces[f].vertices for f in region)) else 9

        assert candidates(state, bs, dual, hc_faces)[0] == expected
        assert find_good_vertex(state, bs, dual, hc_faces) == expected

    def test_neighbor_of_chord_with_visible_end_is_skipped(self, split_dodecagon):
        """Test a vertex next to the far end of a chord with a visible end is never picked."""
        g, positions = split_dodecagon
        state = PlannerState(g, positions)
        state.push(0)
        bs, dual, hc_faces = analyse(state)

        assert rule_violation(5, state, bs) == Rule.NEAR_VISIBLE_CHORD
        assert rule_violation(7, state, bs) == Rule.NEAR_VISIBLE_CHORD
        assert find_good_vertex(state, bs, dual, hc_faces) not in {5, 7}

    def test_no_good_vertex(self, chord_state):
        """Test both chord ends visible leaves no vertex to pick."""
        chord_state.push(0)
        chord_state.push(3)
        bs, dual, hc_faces = analyse(chord_state)

        with pytest.raises(NoGoodVertexError):
            find_good_vertex(chord_state, bs, dual, hc_faces)


class TestPick:
    """Test picking a vertex."""

    def test_pick_appends_vertex_and_neighbors(self, hexagon_state):
        """Test the picked vertex is completed and dropped."""
        steps = pick(4, hexagon_state, check_invariants=True)

        assert steps == [4, 3, 5]
        assert hexagon_state.order == [4, 3, 5]
        assert hexagon_state.remaining == {0, 1, 2, 3, 5}
        assert hexagon_state.visible == {3, 5}

    def test_pick_visible_vertex(self, hexagon_state):
        """Test a visible vertex is not appended again."""
        pick(4, hexagon_state)
        assert pick(3, hexagon_state) == [2]
        assert 3 not in hexagon_state.remaining


class TestPlanarForestPlanner:
    """Test whole runs of the planner."""

    def test_hexagon(self, c6):
        """Test one pick, then the remaining path in breadth-first order."""
        plan = plan_planar_forest(c6, convex_positions(range(6)))

        assert plan.order == (4, 3, 5, 0, 1, 2)
        assert plan.mode == PlanMode.FOREST
        assert plan.algorithm == "planar"

    def test_half_chord_instance(self, octagon_with_inner_vertex):
        """Test the octagon with an inner vertex on two cycle vertices."""
        g, positions = octagon_with_inner_vertex
        plan = plan_planar_forest(g, positions)

        assert plan.order[:3] == (3, 2, 4)
        assert verify_storyplan(g, plan).ok

    def test_chord_between_two_half_chords(self, split_dodecagon):
        """Test a plan for a dodecagon whose chord separates two half-chords."""
        g, positions = split_dodecagon
        plan = plan_planar_forest(g, positions)
        report = verify_storyplan(g, plan)

        assert report.ok, report.first_violation
        assert sorted(plan.order) == list(range(14))

    @pytest.mark.parametrize("fixture", ["cube", "grid4x4", "c6"])
    def test_shift_method_layout(self, fixture, request):
        """Test planning on the computed layout."""
        g = request.getfixturevalue(fixture)
        plan = plan_planar_forest(g)
        report = verify_storyplan(g, plan)

        assert report.ok, report.first_violation
        assert sorted(plan.order) == list(g.vertices)

    def test_forest_input(self):
        """Test a forest is emitted breadth-first from its smallest vertex."""
        g = build_graph(4, [(0, 2), (2, 1), (2, 3)])
        plan = plan_planar_forest(g, {0: Point(0, 0), 1: Point(1, 0), 2: Point(1, 1), 3: Point(2, 1)})
        assert plan.order == (0, 2, 1, 3)

    def test_non_planar(self, k33):
        """Test K3,3 is rejected."""
        with pytest.raises(NotPlanarError):
            plan_planar_forest(k33)

    def test_triangle(self, k4):
        """Test triangles are rejected."""
        with pytest.raises(HasTriangleError):
            plan_planar_forest(k4)

    def test_crossing_positions(self, square_positions):
        """Test supplied positions must form a plane drawing."""
        g = build_graph(4, [(0, 2), (1, 3), (0, 1)])
        with pytest.raises(NotPlanarError, match="plane drawing"):
            plan_planar_forest(g, square_positions)

    def test_missing_positions(self, c6):
        """Test supplied positions must cover every vertex."""
        with pytest.raises(NotPlanarError, match="no position"):
            plan_planar_forest(c6, {0: Point(0, 0)})
