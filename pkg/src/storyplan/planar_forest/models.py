"""State and boundary structures of the planar forest planner."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from storyplan.geometry.predicates import Point
from storyplan.graph.models import Edge, Graph, normalize_edge
from storyplan.model.frames import FrameTracker

HalfChord = tuple[int, int, int]


@dataclass(frozen=True)
class Face:
    """Inner face of the skeleton as a boundary walk (face on the right of each step)."""

    id: int
    walk: tuple[int, ...]

    @cached_property
    def edges(self) -> frozenset[Edge]:
        k = len(self.walk)
        return frozenset(
            normalize_edge(self.walk[i], self.walk[(i + 1) % k]) for i in range(k)
        )

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.walk)


@dataclass(frozen=True)
class BoundaryStructure:
    """Outer-boundary structure of the remaining graph.

    ``outer_vertices`` and ``outer_edges`` are incident with its outer face.
    The skeleton consists of the outer cycles, the connectors between them,
    the chords and the half-chords.
    """

    vertices: frozenset[int]
    outer_vertices: frozenset[int]
    outer_edges: frozenset[Edge]
    cycles: tuple[tuple[int, ...], ...]
    connectors: frozenset[Edge]
    chords: frozenset[Edge]
    half_chords: tuple[HalfChord, ...]
    faces: tuple[Face, ...] = ()
    face_of: Mapping[tuple[int, int], int] = field(default_factory=dict)

    @cached_property
    def cycle_vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.cycles for v in c)

    @cached_property
    def half_chord_edges(self) -> frozenset[Edge]:
        return frozenset(
            normalize_edge(y, x) for a, x, b in self.half_chords for y in (a, b)
        )

    @cached_property
    def inner_edges(self) -> frozenset[Edge]:
        """Chords and half-chord edges."""
        return self.chords | self.half_chord_edges

    @cached_property
    def skeleton_edges(self) -> frozenset[Edge]:
        k_edges = set()
        for c in self.cycles:
            for i, a in enumerate(c):
                b = c[(i + 1) % len(c)]
                k_edges.add(normalize_edge(a, b))
        return frozenset(k_edges) | self.connectors | self.inner_edges

    @cached_property
    def skeleton_vertices(self) -> frozenset[int]:
        return self.cycle_vertices | frozenset(x for _, x, _ in self.half_chords)

    @cached_property
    def chord_endpoints(self) -> frozenset[int]:
        return frozenset(v for e in self.chords for v in e)

    @cached_property
    def half_chord_endpoints(self) -> frozenset[int]:
        return frozenset(v for a, _, b in self.half_chords for v in (a, b))

    @cached_property
    def free_vertices(self) -> frozenset[int]:
        """Cycle vertices of the skeleton on no chord and no half-chord."""
        return self.cycle_vertices - self.chord_endpoints - self.half_chord_endpoints


@dataclass
class WeakDual:
    """Multigraph on the inner faces of the skeleton; one edge per shared inner edge.

    Each edge carries the primal edge it crosses as its ``primal`` attribute.
    """

    graph: nx.MultiGraph
    faces: dict[int, Face]

    def components(self) -> list[list[int]]:
        return sorted(sorted(c) for c in nx.connected_components(self.graph))

    def degree(self, face_id: int) -> int:
        return self.graph.degree(face_id)


class PlannerState:
    """Mutable state of one planar forest planning run.

    ``remaining`` holds every vertex not completed yet.
    Positions are the fixed drawing every frame is taken from.
    """

    def __init__(self, g: Graph, positions: Mapping[int, Point]):
        self.graph = g
        self.positions = dict(positions)
        self.tracker = FrameTracker(g)
        self.order: list[int] = []
        self.remaining: set[int] = set(g.vertices)
        self.iteration = 0

    @property
    def visible(self) -> set[int]:
        return self.tracker.visible

    def is_visible(self, v: int) -> bool:
        return v in self.tracker.visible

    def is_placed(self, v: int) -> bool:
        return v in self.tracker.placed

    def remaining_edges(self) -> frozenset[Edge]:
        return self.graph.induced_edges(self.remaining)

    def closed_neighborhood(self, v: int) -> set[int]:
        """N[v] in the remaining graph."""
        return {v} | {u for u in self.graph.neighbors(v) if u in self.remaining}

    def push(self, v: int) -> None:
        self.tracker.push(v)
        self.order.append(v)

    def drop_completed(self) -> list[int]:
        """Remove completed vertices from the remaining graph."""
        done = sorted(v for v in self.remaining if self.tracker.is_completed(v))
        self.remaining.difference_update(done)
        return done
