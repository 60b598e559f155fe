"""Forest storyplans for triangle-free planar graphs."""

from storyplan.planar_forest.boundary import (
    component_tree,
    component_walk,
    compute_boundary_structure,
    half_chord_faces,
    weak_dual,
)
from storyplan.planar_forest.models import BoundaryStructure, Face, PlannerState, WeakDual
from storyplan.planar_forest.planner import pick, plan_planar_forest
from storyplan.planar_forest.rules import Rule, candidates, find_good_vertex, is_good, leaf_region, rule_violation

__all__ = [
    "BoundaryStructure",
    "Face",
    "PlannerState",
    "Rule",
    "WeakDual",
    "candidates",
    "component_tree",
    "component_walk",
    "compute_boundary_structure",
    "find_good_vertex",
    "half_chord_faces",
    "is_good",
    "leaf_region",
    "pick",
    "plan_planar_forest",
    "rule_violation",
    "weak_dual",
]
