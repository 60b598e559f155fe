"""Plan JSON documents."""

from pathlib import Path

from pydantic import ValidationError

from storyplan.exceptions import PlanFormatError
from storyplan.geometry.predicates import Point
from storyplan.graph.models import Graph
from storyplan.model.models import PlanDocument, Storyplan


def plan_to_document(plan: Storyplan) -> PlanDocument:
    return PlanDocument(
        n=plan.n,
        order=list(plan.order),
        positions={str(v): plan.positions[v].to_list() for v in sorted(plan.positions)},
        mode=plan.mode,
        algorithm=plan.algorithm or None,
    )


def plan_from_document(doc: PlanDocument, g: Graph) -> Storyplan:
    """Rebuild a plan for ``g``; frames are recomputed from the order.

    Raises:
        PlanFormatError: If the document does not fit the graph
    """
    if doc.n != g.n:
        raise PlanFormatError(f"Plan is for {doc.n} vertices, graph has {g.n}")
    positions = {}
    for key, values in doc.positions.items():
        try:
            vertex = int(key)
            if len(values) != 4 or values[1] <= 0 or values[3] <= 0:
                raise ValueError(values)
            positions[vertex] = Point.from_list(values)
        except (ValueError, ZeroDivisionError) as e:
            raise PlanFormatError(f"Bad position for vertex {key!r}: {values}") from e
    return Storyplan(
        graph=g,
        order=tuple(doc.order),
        positions=positions,
        mode=doc.mode,
        algorithm=doc.algorithm or "",
    )


def dump_plan(plan: Storyplan) -> str:
    return plan_to_document(plan).model_dump_json(indent=2)


def save_plan(plan: Storyplan, path: str | Path) -> None:
    Path(path).write_text(dump_plan(plan) + "\n")


def load_plan(path: str | Path, g: Graph) -> Storyplan:
    """Read a plan file written by :func:`save_plan`.

    Raises:
        PlanFormatError: If the file is missing or malformed
    """
    file_path = Path(path)
    if not file_path.exists():
        raise PlanFormatError(f"Plan file not found: {file_path}")
    try:
        doc = PlanDocument.model_validate_json(file_path.read_text())
    except (ValidationError, ValueError) as e:
        raise PlanFormatError(f"Malformed plan file {file_path}: {e}") from e
    return plan_from_document(doc, g)
