"""Exact predicates, straight-line drawings and vertex placement."""

from storyplan.geometry.drawing import (
    Drawing,
    drawing_is_outerplane,
    drawing_is_plane,
    outer_face_vertices,
    rotation_from_positions,
)
from storyplan.geometry.layout import convex_positions, straight_line_draw_planar
from storyplan.geometry.placement import PlacementCase, PlacementContext, place_cubic_vertex
from storyplan.geometry.predicates import Point, orient, segments_cross

__all__ = [
    "Drawing",
    "PlacementCase",
    "PlacementContext",
    "Point",
    "convex_positions",
    "drawing_is_outerplane",
    "drawing_is_plane",
    "orient",
    "outer_face_vertices",
    "place_cubic_vertex",
    "rotation_from_positions",
    "segments_cross",
    "straight_line_draw_planar",
]
