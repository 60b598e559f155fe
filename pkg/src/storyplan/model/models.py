"""Storyplan data model."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property

from pydantic import BaseModel, Field, field_validator

from storyplan.geometry.predicates import Point
from storyplan.graph.models import Edge, Graph

MAX_COORDINATE_BITS = 4096


class PlanMode(StrEnum):
    """Graph class every frame must belong to."""

    PLANAR = "planar"
    OUTERPLANAR = "outerplanar"
    FOREST = "forest"


@dataclass(frozen=True)
class Lifespan:
    """Steps during which a vertex is visible (1-based, inclusive)."""

    appear: int
    disappear_after: int

    def contains(self, step: int) -> bool:
        return self.appear <= step <= self.disappear_after


@dataclass(frozen=True)
class FrameGraph:
    """Vertex and edge set of a frame, in original vertex labels."""

    vertices: frozenset[int]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class Frame:
    """Visible vertices at one step.

    ``prime`` holds the vertices still visible at the next step; it is None
    for the last step.
    """

    step: int
    visible: frozenset[int]
    new_vertex: int
    prime: frozenset[int] | None


@dataclass(frozen=True)
class Storyplan:
    """A vertex order with one fixed position per vertex.

    ``order[i - 1]`` is the vertex appearing at step ``i``. Frames are always
    derived from the order and never stored.
    """

    graph: Graph
    order: tuple[int, ...]
    positions: Mapping[int, Point] = field(hash=False)
    mode: PlanMode = PlanMode.PLANAR
    algorithm: str = ""

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def tau(self) -> dict[int, int]:
        """Step at which each vertex appears."""
        return {v: i + 1 for i, v in enumerate(self.order)}

    @cached_property
    def frames(self) -> list[Frame]:
        from storyplan.model.frames import frames

        return frames(self.graph, self.order)


class FrameCheck(BaseModel):
    """Verification result for one frame."""

    step: int = Field(..., description="Step index, 1-based")
    plane_ok: bool = Field(..., description="The frame drawing has no crossing")
    class_ok: bool = Field(..., description="The frame belongs to the plan's graph class")
    edges: int = Field(..., description="Number of edges in the frame")
    prime_edges: int | None = Field(default=None, description="Edges kept for the next frame")
    violation: str | None = Field(default=None, description="First problem found in the frame")


class VerifyReport(BaseModel):
    """Outcome of checking a storyplan."""

    ok: bool = Field(..., description="True iff no violation was found")
    mode: PlanMode = Field(..., description="Checked graph class")
    per_frame: list[FrameCheck] = Field(default_factory=list)
    first_violation: str | None = Field(default=None)
    max_edges: int = Field(default=0, description="Largest number of edges in a frame")

    def table(self) -> str:
        """Per-frame table for terminal output."""
        lines = ["step  edges  prime  plane  class"]
        for check in self.per_frame:
            prime = "-" if check.prime_edges is None else str(check.prime_edges)
            lines.append(
                f"{check.step:>4}  {check.edges:>5}  {prime:>5}  "
                f"{'ok' if check.plane_ok else 'FAIL':>5}  {'ok' if check.class_ok else 'FAIL':>5}"
            )
        return "\n".join(lines)


class PlanDocument(BaseModel):
    """JSON form of a storyplan; positions are ``[xn, xd, yn, yd]``."""

    n: int = Field(..., ge=0)
    order: list[int] = Field(..., description="Vertex appearing at each step")
    positions: dict[str, list[int]] = Field(default_factory=dict)
    mode: PlanMode = Field(default=PlanMode.PLANAR)
    algorithm: str | None = Field(default=None)

    @field_validator("positions")
    @classmethod
    def coordinates_fit(cls, positions: dict[str, list[int]]) -> dict[str, list[int]]:
        for key, values in positions.items():
            if any(abs(value).bit_length() > MAX_COORDINATE_BITS for value in values):
                raise ValueError(f"coordinate of vertex {key} exceeds {MAX_COORDINATE_BITS} bits")
        return positions
