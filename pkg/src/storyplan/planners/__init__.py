"""Constructive storyplan planners."""

from storyplan.planners.bipartite import plan_bipartite_forest
from storyplan.planners.factory import AUTO_ORDER, PlannerEntry, PlannerFactory, create_plan, register_all_planners
from storyplan.planners.outerplanar import plan_outerplanar_forest
from storyplan.planners.subcubic import DegreeBuckets, plan_subcubic_forest, plan_subcubic_outerplanar
from storyplan.planners.two_tree import (
    TwoTreeDecomposition,
    decompose,
    decomposition_order,
    plan_partial_two_tree_outerplanar,
    plan_two_tree_outerplanar,
)

__all__ = [
    "AUTO_ORDER",
    "DegreeBuckets",
    "PlannerEntry",
    "PlannerFactory",
    "TwoTreeDecomposition",
    "create_plan",
    "decompose",
    "decomposition_order",
    "plan_bipartite_forest",
    "plan_outerplanar_forest",
    "plan_partial_two_tree_outerplanar",
    "plan_subcubic_forest",
    "plan_subcubic_outerplanar",
    "plan_two_tree_outerplanar",
    "register_all_planners",
]
