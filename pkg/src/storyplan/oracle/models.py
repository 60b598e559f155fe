"""Oracle verdicts and search options."""

from enum import StrEnum

from pydantic import BaseModel, Field

from storyplan.config import settings
from storyplan.model.models import PlanMode


class VerdictStatus(StrEnum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget_exhausted"


class SearchOptions(BaseModel):
    """Limits of one exhaustive search."""

    max_n: int = Field(default=12, description="Largest vertex count accepted", ge=1)
    symmetry: bool = Field(
        default=True, description="Restrict the first vertex to automorphism orbit representatives"
    )
    node_budget: int = Field(default=10**9, description="Search nodes explored before giving up", ge=1)
    jobs: int = Field(default=1, description="Worker processes, one search root each", ge=1)

    @classmethod
    def from_settings(cls, **overrides: int | bool | None) -> "SearchOptions":
        """Options from the global settings; ``None`` overrides are ignored."""
        values = settings.oracle.model_dump()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class Verdict(BaseModel):
    """Outcome of deciding whether some vertex order keeps every frame in a class.

    The decision concerns frame graphs only; a witness is an order, not a
    drawing.
    """

    graph_class: PlanMode = Field(..., description="Class every frame must belong to")
    status: VerdictStatus = Field(..., description="Search outcome")
    witness: list[int] | None = Field(default=None, description="Feasible vertex order")
    nodes_explored: int = Field(default=0, description="Search nodes explored", ge=0)

    @property
    def feasible(self) -> bool:
        return self.status == VerdictStatus.FEASIBLE

    def summary(self) -> str:
        line = f"{self.graph_class.value}: {self.status.value} ({self.nodes_explored} nodes)"
        if self.witness is not None:
            line += f" witness={' '.join(map(str, self.witness))}"
        return line
