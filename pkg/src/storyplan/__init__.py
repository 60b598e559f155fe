"""
Storyplan - outerplanar and forest storyplans of graphs

Builds, verifies, decides and renders storyplans: vertex orders with
fixed straight-line positions in which every frame is outerplanar or a forest.
"""

__version__ = "0.1.0"
__author__ = "Storyplan Team"
__all__ = [
    "cli",
    "config",
    "geometry",
    "graph",
    "model",
    "oracle",
    "planar_forest",
    "planners",
    "utils",
]
