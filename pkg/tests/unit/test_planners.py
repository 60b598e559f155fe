"""Unit tests for the constructive planners and the planner registry."""

import pytest

from storyplan.config import settings
from storyplan.exceptions import (
    DegreeTooHighError,
    HasTriangleError,
    IsK4Error,
    NoApplicablePlannerError,
    NotBipartiteError,
    NotOuterplanarError,
    NotPartialTwoTreeError,
    NotTwoTreeError,
)
from storyplan.graph.generators import cycle, generate_from_spec, stacked_example, stacked_example_order
from storyplan.graph.models import build_graph
from storyplan.graph.recognizers import StackingOrder
from storyplan.model.frames import FrameTracker
from storyplan.model.models import PlanMode
from storyplan.model.verifier import verify_storyplan
from storyplan.planners.base import line_plan
from storyplan.planners.bipartite import plan_bipartite_forest
from storyplan.planners.factory import AUTO_ORDER, PlannerFactory, create_plan
from storyplan.planners.outerplanar import plan_outerplanar_forest
from storyplan.planners.subcubic import DegreeBuckets, plan_subcubic_forest, plan_subcubic_outerplanar
from storyplan.planners.two_tree import (
    ROOT,
    decompose,
    decomposition_order,
    plan_partial_two_tree_outerplanar,
    plan_two_tree_outerplanar,
)
from storyplan.utils.metrics import metrics


def assert_valid(plan, mode: PlanMode | None = None) -> None:
    report = verify_storyplan(plan.graph, plan, mode)
    assert report.ok, report.first_violation


class TestBipartitePlanner:
    """Test the one-side-then-the-other planner."""

    def test_k33(self, k33):
        """Test each vertex of the second side sees a star with three edges."""
        plan = plan_bipartite_forest(k33)
        report = verify_storyplan(k33, plan)

        assert plan.order == (0, 1, 2, 3, 4, 5)
        assert plan.mode == PlanMode.FOREST
        assert plan.algorithm == "bipartite"
        assert report.ok
        assert [c.edges for c in report.per_frame[3:]] == [3, 3, 3]

    def test_grid(self, grid4x4):
        """Test a grid is planned as a forest."""
        assert_valid(plan_bipartite_forest(grid4x4))

    def test_odd_cycle(self):
        """Test odd cycles are rejected."""
        with pytest.raises(NotBipartiteError):
            plan_bipartite_forest(cycle(5))


class TestTwoTreePlanner:
    """Test the 2-tree and partial 2-tree planners."""

    def test_decomposition_tree(self):
        """Test parents and children of the example 2-tree."""
        decomposition = decompose(stacked_example_order())

        assert decomposition.root == (0, 1, 2)
        assert decomposition.children[ROOT] == [3, 4, 6]
        assert decomposition.parent == {3: ROOT, 4: ROOT, 5: 4, 6: ROOT, 7: 3, 8: 6}

    def test_preorder(self):
        """Test the root triangle is followed by a depth-first pre-order."""
        order = decomposition_order(stacked_example(), stacked_example_order())
        assert order == [0, 1, 2, 3, 7, 4, 5, 6, 8]

    def test_example_plan(self):
        """Test the example 2-tree gets a valid outerplanar plan in pre-order."""
        plan = plan_two_tree_outerplanar(stacked_example(), stacked_example_order())

        assert plan.order == (0, 1, 2, 3, 7, 4, 5, 6, 8)
        assert plan.mode == PlanMode.OUTERPLANAR
        assert_valid(plan)

    def test_parent_with_one_visible_neighbor(self):
        """Test stacking onto an edge whose later end lost its other frame neighbor."""
        g = build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (0, 4), (3, 4)])
        stacking = StackingOrder(order=(0, 1, 2, 3, 4), stacked_on={3: (0, 1), 4: (0, 3)})
        tracker = FrameTracker(g)
        for v in (0, 1, 2, 3):
            tracker.push(v)

        assert {u for u in g.neighbors(3) if u in tracker.visible} == {0}
        plan = plan_two_tree_outerplanar(g, stacking)
        assert plan.order == (0, 1, 2, 3, 4)
        assert_valid(plan)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_two_trees(self, seed):
        """Test random 2-trees."""
        g = generate_from_spec(f"random-2tree:15,{seed}")
        assert_valid(plan_two_tree_outerplanar(g))

    def test_not_a_two_tree(self, c6):
        """Test a cycle is not a 2-tree."""
        with pytest.raises(NotTwoTreeError):
            plan_two_tree_outerplanar(c6)

    def test_partial_two_tree(self, c6):
        """Test a cycle is planned through its 2-tree completion."""
        plan = plan_partial_two_tree_outerplanar(c6)

        assert plan.graph == c6
        assert plan.mode == PlanMode.OUTERPLANAR
        assert_valid(plan)

    def test_small_partial_two_tree(self):
        """Test graphs on fewer than three vertices get a line plan."""
        g = generate_from_spec("path:2")
        plan = plan_partial_two_tree_outerplanar(g)

        assert plan.order == (0, 1)
        assert_valid(plan)

    def test_treewidth_three(self, cube):
        """Test the cube is rejected."""
        with pytest.raises(NotPartialTwoTreeError):
            plan_partial_two_tree_outerplanar(cube)


class TestSubcubicPlanners:
    """Test the planners for maximum degree three."""

    def test_petersen_forest(self, petersen):
        """Test the Petersen graph gets a forest plan with at most five edges per frame."""
        plan = plan_subcubic_forest(petersen)
        report = verify_storyplan(petersen, plan)

        assert report.ok, report.first_violation
        assert report.max_edges <= 5
        assert plan.order[0] == 0

    def test_cube_outerplanar(self, cube):
        """Test the cube gets an outerplanar plan."""
        plan = plan_subcubic_outerplanar(cube)
        report = verify_storyplan(cube, plan)

        assert plan.mode == PlanMode.OUTERPLANAR
        assert report.ok, report.first_violation
        assert report.max_edges <= 5

    def test_disconnected_input(self):
        """Test each component is started at its smallest vertex."""
        g = build_graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
        plan = plan_subcubic_forest(g)

        assert_valid(plan)
        assert plan.order[plan.order.index(4) - 1] in {0, 1, 2, 3}

    def test_k4_outerplanar(self, k4):
        """Test K4 has no outerplanar plan."""
        with pytest.raises(IsK4Error):
            plan_subcubic_outerplanar(k4)

    def test_triangle_forest(self, k4):
        """Test forest plans need triangle-free input."""
        with pytest.raises(HasTriangleError):
            plan_subcubic_forest(k4)

    def test_degree_four(self):
        """Test vertices of degree four are rejected."""
        with pytest.raises(DegreeTooHighError, match="Maximum degree is 4"):
            plan_subcubic_outerplanar(generate_from_spec("k5"))

    def test_degree_buckets(self):
        """Test selection takes the smallest vertex of the highest bucket."""
        buckets = DegreeBuckets()
        buckets.update(5, (2, 1))
        buckets.update(3, (2, 1))
        buckets.update(1, (1, 2))

        assert buckets.select() == 3
        buckets.update(3, (0, 0))
        assert buckets.select() == 5
        buckets.remove(5)
        assert buckets.select() == 1
        assert len(buckets) == 2
        assert 5 not in buckets


class TestOuterFacePlanner:
    """Test the forest planner for triangle-free outerplanar graphs."""

    def test_cycle(self, c6):
        """Test a cycle in boundary order."""
        plan = plan_outerplanar_forest(c6)

        assert plan.order[0] == 0
        assert plan.algorithm == "outer-face"
        assert_valid(plan)

    def test_cycle_with_chord(self):
        """Test an octagon split by a chord into two pentagons."""
        g = build_graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(0, 4)])
        assert_valid(plan_outerplanar_forest(g))

    def test_triangle(self):
        """Test triangles are rejected."""
        with pytest.raises(HasTriangleError):
            plan_outerplanar_forest(stacked_example())

    def test_not_outerplanar(self, k33):
        """Test K3,3 is rejected."""
        with pytest.raises(NotOuterplanarError):
            plan_outerplanar_forest(k33)


class TestPlannerFactory:
    """Test planner selection."""

    def test_auto_prefers_bipartite_for_forests(self, k33):
        """Test the first applicable planner wins."""
        plan = create_plan(k33, "forest")
        assert plan.algorithm == "bipartite"
        assert AUTO_ORDER[PlanMode.FOREST][0] == "bipartite"

    def test_auto_falls_through_to_subcubic(self, petersen):
        """Test the Petersen graph is neither bipartite nor outerplanar."""
        plan = create_plan(petersen, PlanMode.FOREST)
        assert plan.algorithm == "subcubic"
        assert plan.mode == PlanMode.FOREST

    def test_planar_request_records_produced_mode(self, c6):
        """Test a planar request served by an outerplanar planner."""
        plan = create_plan(c6, "planar")

        assert plan.algorithm == "two-tree"
        assert plan.mode == PlanMode.OUTERPLANAR
        assert_valid(plan, PlanMode.PLANAR)

    def test_explicit_algorithm(self, cube):
        """Test a named planner is used even when another would be chosen."""
        plan = create_plan(cube, "forest", "planar")
        assert plan.algorithm == "planar"
        assert_valid(plan)

    def test_no_planner_applies(self, k4):
        """Test K4 in outerplanar mode reports why each planner declined."""
        with pytest.raises(NoApplicablePlannerError) as exc_info:
            create_plan(k4, "outerplanar")

        diagnostics = exc_info.value.diagnostics
        assert set(diagnostics) == {"two-tree", "subcubic"}
        assert "K4" in diagnostics["subcubic"]

    def test_algorithm_of_the_wrong_class(self, c6):
        """Test an outerplanar planner cannot serve a forest request."""
        with pytest.raises(NoApplicablePlannerError, match="does not produce forest"):
            create_plan(c6, "forest", "two-tree")

    def test_unknown_algorithm(self, c6):
        """Test an unknown algorithm name."""
        with pytest.raises(ValueError, match="Unknown algorithm"):
            create_plan(c6, "forest", "spring")

    def test_registry(self):
        """Test every built-in planner is registered."""
        create_plan(cycle(4), "forest")
        assert set(PlannerFactory.list_types()) == {"bipartite", "two-tree", "subcubic", "outer-face", "planar"}

    def test_line_plan(self):
        """Test the trivial plan for tiny graphs."""
        g = generate_from_spec("path:2")
        plan = line_plan(g, PlanMode.FOREST, "test")
        assert plan.order == (0, 1)
        assert_valid(plan)

    def test_plans_are_counted(self, c6):
        """Test every built plan is recorded per algorithm and mode."""
        labels = {"algorithm": "outer-face", "mode": "forest"}
        before = metrics.registry.get_sample_value("storyplan_plans_total", labels) or 0
        plan_outerplanar_forest(c6)
        assert metrics.registry.get_sample_value("storyplan_plans_total", labels) == before + 1

    def test_plans_not_counted_with_metrics_disabled(self, c6, monkeypatch):
        """Test switching metrics off leaves the registry untouched."""
        monkeypatch.setattr(settings.monitoring, "metrics_enabled", False)
        labels = {"algorithm": "outer-face", "mode": "forest"}
        before = metrics.registry.get_sample_value("storyplan_plans_total", labels)
        plan_outerplanar_forest(c6)
        assert metrics.registry.get_sample_value("storyplan_plans_total", labels) == before
