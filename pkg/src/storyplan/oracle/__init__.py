"""Exhaustive decision of storyplan feasibility on small graphs."""

from storyplan.oracle.bipartite import SideVisibility, check_bipartite_visibility, complete_bipartite_sides
from storyplan.oracle.models import SearchOptions, Verdict, VerdictStatus
from storyplan.oracle.search import OrderSearch, decide_storyplan, enumerate_feasible_orders, frame_in_class
from storyplan.oracle.symmetry import orbit_representatives, same_orbit

__all__ = [
    "OrderSearch",
    "SearchOptions",
    "SideVisibility",
    "Verdict",
    "VerdictStatus",
    "check_bipartite_visibility",
    "complete_bipartite_sides",
    "decide_storyplan",
    "enumerate_feasible_orders",
    "frame_in_class",
    "orbit_representatives",
    "same_orbit",
]
