"""Plain-text graph format: a header line ``n m`` followed by ``m`` lines ``u v``."""

from pathlib import Path

from storyplan.exceptions import PlanFormatError
from storyplan.graph.models import Graph, build_graph


def parse_graph(text: str) -> Graph:
    """Parse the text format.

    Raises:
        PlanFormatError: If the text is malformed
        GraphError: If the edges are invalid (out of range, loops, duplicates)
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise PlanFormatError("Empty graph file")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError as e:
        raise PlanFormatError(f"Bad header line: {lines[0]!r}") from e
    if len(lines) - 1 != m:
        raise PlanFormatError(f"Header announces {m} edges, found {len(lines) - 1}")

    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise PlanFormatError(f"Bad edge line: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as e:
            raise PlanFormatError(f"Bad edge line: {line!r}") from e
    return build_graph(n, edges)


def format_graph(g: Graph) -> str:
    """Serialize with edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    """Read a graph file.

    Raises:
        PlanFormatError: If the file is missing or malformed
    """
    file_path = Path(path)
    if not file_path.exists():
        raise PlanFormatError(f"Graph file not found: {file_path}")
    try:
        return parse_graph(file_path.read_text())
    except UnicodeDecodeError as e:
        raise PlanFormatError(f"Graph file is not text: {file_path}") from e


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
