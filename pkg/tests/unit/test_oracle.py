"""Unit tests for the exhaustive storyplan search."""

import pytest

from storyplan.exceptions import FramesNotPlanarError, NotBipartiteError, TooLargeError
from storyplan.graph.generators import blown_cycle, cycle, generate_from_spec, path
from storyplan.graph.models import build_graph
from storyplan.model.frames import frames
from storyplan.model.models import PlanMode
from storyplan.oracle import (
    SearchOptions,
    Verdict,
    VerdictStatus,
    check_bipartite_visibility,
    complete_bipartite_sides,
    decide_storyplan,
    enumerate_feasible_orders,
    frame_in_class,
    orbit_representatives,
    same_orbit,
)


def test_frame_in_class(k4):
    """Test frame classes of induced subgraphs."""
    assert frame_in_class(k4, [], PlanMode.FOREST)
    assert frame_in_class(k4, [0, 1], PlanMode.FOREST)
    assert not frame_in_class(k4, [0, 1, 2], PlanMode.FOREST)
    assert frame_in_class(k4, [0, 1, 2], PlanMode.OUTERPLANAR)
    assert not frame_in_class(k4, [0, 1, 2, 3], PlanMode.OUTERPLANAR)
    assert frame_in_class(k4, [0, 1, 2, 3], PlanMode.PLANAR)


class TestDecide:
    """Test verdicts of the search."""

    def test_k4_outerplanar(self, k4):
        """Test the last frame of K4 is always K4."""
        verdict = decide_storyplan(k4, "outerplanar")

        assert verdict.status == VerdictStatus.INFEASIBLE
        assert verdict.witness is None
        assert verdict.nodes_explored > 0

    def test_k4_planar(self, k4):
        """Test every order of K4 has planar frames."""
        verdict = decide_storyplan(k4, PlanMode.PLANAR)
        assert verdict.feasible
        assert sorted(verdict.witness) == [0, 1, 2, 3]

    def test_octahedron_outerplanar(self):
        """Test the octahedron has no outerplanar storyplan."""
        verdict = decide_storyplan(generate_from_spec("octahedron"), "outerplanar")
        assert verdict.status == VerdictStatus.INFEASIBLE

    def test_blown_cycle_separates_forest_and_outerplanar(self):
        """Test the 4-regular blown 5-cycle."""
        g = blown_cycle(5, 2)

        assert decide_storyplan(g, "forest").status == VerdictStatus.INFEASIBLE
        verdict = decide_storyplan(g, "outerplanar")
        assert verdict.feasible
        assert all(frame_in_class(g, sorted(f.visible), PlanMode.OUTERPLANAR) for f in frames(g, verdict.witness))

    def test_cube_forest(self, cube):
        """Test the cube has a forest storyplan."""
        verdict = decide_storyplan(cube, "forest")
        assert verdict.feasible
        assert len(verdict.witness) == 8

    def test_without_symmetry(self, c6):
        """Test every first vertex is tried when symmetry reduction is off."""
        verdict = decide_storyplan(c6, "forest", SearchOptions(symmetry=False))
        assert verdict.feasible

    def test_parallel_roots(self):
        """Test first-vertex branches in worker processes."""
        verdict = decide_storyplan(path(4), "outerplanar", SearchOptions(jobs=2))
        assert verdict.feasible

    def test_empty_graph(self):
        """Test the empty order is a witness for the empty graph."""
        verdict = decide_storyplan(build_graph(0, []), "forest")
        assert verdict.feasible
        assert verdict.witness == []

    def test_too_large(self, c6):
        """Test graphs above the vertex limit are refused."""
        with pytest.raises(TooLargeError, match="at most 5"):
            decide_storyplan(c6, "forest", SearchOptions(max_n=5))

    def test_budget_exhausted(self, k4):
        """Test a search stopped by its node budget has no verdict."""
        verdict = decide_storyplan(k4, "outerplanar", SearchOptions(node_budget=1))

        assert verdict.status == VerdictStatus.BUDGET_EXHAUSTED
        assert not verdict.feasible
        assert "budget_exhausted" in verdict.summary()


class TestEnumerate:
    """Test enumeration of feasible orders."""

    def test_every_order_of_a_path(self):
        """Test a path never shows a cycle."""
        assert len(list(enumerate_feasible_orders(path(3), "forest"))) == 6

    def test_no_order_of_a_triangle(self):
        """Test a triangle always shows a cycle."""
        assert list(enumerate_feasible_orders(cycle(3), "forest")) == []

    def test_limit(self, c6):
        """Test the vertex limit."""
        with pytest.raises(TooLargeError):
            list(enumerate_feasible_orders(c6, "forest", max_n=4))


class TestSymmetry:
    """Test automorphism orbits."""

    @pytest.mark.parametrize(
        "spec,expected",
        [("petersen", [0]), ("cube", [0]), ("path:4", [0, 1]), ("k3,4", [0, 3])],
    )
    def test_orbit_representatives(self, spec, expected):
        """Test one vertex per orbit."""
        assert orbit_representatives(generate_from_spec(spec)) == expected

    def test_same_orbit(self):
        """Test the ends of a path are swapped by its reflection."""
        g = path(3)
        assert same_orbit(g, 0, 2)
        assert not same_orbit(g, 0, 1)


class TestOptions:
    """Test search options and verdicts."""

    def test_from_settings_ignores_none(self):
        """Test only given overrides replace settings."""
        options = SearchOptions.from_settings(max_n=None, jobs=2)

        assert options.jobs == 2
        assert options.max_n == 12
        assert options.symmetry

    def test_summary(self):
        """Test the one-line verdict."""
        verdict = Verdict(
            graph_class=PlanMode.FOREST, status=VerdictStatus.FEASIBLE, witness=[2, 0, 1], nodes_explored=7
        )
        assert verdict.summary() == "forest: feasible (7 nodes) witness=2 0 1"


class TestBipartiteVisibility:
    """Test which side of a complete bipartite graph is fully visible."""

    def test_sides(self):
        """Test the smaller side comes first."""
        assert complete_bipartite_sides(generate_from_spec("k3,4")) == ((0, 1, 2), (3, 4, 5, 6))

    def test_one_side_then_the_other(self, k33):
        """Test placing one side first shows it completely."""
        result = check_bipartite_visibility(k33, [0, 1, 2, 3, 4, 5])

        assert result.a == (0, 1, 2)
        assert result.a_step == 3
        assert result.b_step is None
        assert result.exactly_one

    def test_non_planar_frame(self):
        """Test an order that shows K3,3 inside K3,4."""
        g = generate_from_spec("k3,4")
        with pytest.raises(FramesNotPlanarError, match="Frame 6"):
            check_bipartite_visibility(g, [3, 4, 0, 1, 5, 2, 6])

    def test_not_complete_bipartite(self, c6):
        """Test a hexagon is bipartite but not complete bipartite."""
        with pytest.raises(NotBipartiteError, match="not complete bipartite"):
            complete_bipartite_sides(c6)

    def test_not_bipartite(self):
        """Test odd cycles are rejected."""
        with pytest.raises(NotBipartiteError, match="not bipartite"):
            complete_bipartite_sides(cycle(5))
