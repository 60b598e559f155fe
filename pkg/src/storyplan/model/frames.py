"""Lifespans and frames derived from a vertex order."""

from collections.abc import Sequence
from dataclasses import dataclass

from storyplan.exceptions import NotBijectiveError
from storyplan.graph.models import Graph
from storyplan.model.models import Frame, FrameGraph, Lifespan


def check_order(g: Graph, order: Sequence[int]) -> None:
    """Raise NotBijectiveError unless ``order`` lists every vertex exactly once."""
    if len(order) != g.n or sorted(order) != list(range(g.n)):
        raise NotBijectiveError(f"Order is not a permutation of 0..{g.n - 1}: {list(order)}")


def lifespans(g: Graph, order: Sequence[int]) -> dict[int, Lifespan]:
    """Lifespan of every vertex.

    A vertex appears at its own step and disappears after the step at which
    the last vertex of its closed neighborhood appears.

    Raises:
        NotBijectiveError: If ``order`` is not a permutation of the vertices
    """
    check_order(g, order)
    tau = {v: i + 1 for i, v in enumerate(order)}
    return {
        v: Lifespan(tau[v], max([tau[v]] + [tau[u] for u in g.neighbors(v)]))
        for v in g.vertices
    }


@dataclass(frozen=True)
class StepResult:
    """What happens when one vertex is appended to the order."""

    step: int
    vertex: int
    frame: frozenset[int]
    prime: frozenset[int]
    completed: frozenset[int]


class FrameTracker:
    """Incremental frame computation for a growing prefix of an order.

    The frame at step i depends only on the set of vertices placed before
    step i and on the new vertex: it consists of the new vertex and every
    earlier vertex that still has an unplaced neighbor.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.step = 0
        self.placed: set[int] = set()
        self.visible: set[int] = set()
        self._pending = [g.degree(v) for v in g.vertices]

    def copy(self) -> "FrameTracker":
        clone = FrameTracker.__new__(FrameTracker)
        clone.graph = self.graph
        clone.step = self.step
        clone.placed = set(self.placed)
        clone.visible = set(self.visible)
        clone._pending = list(self._pending)
        return clone

    def pending(self, v: int) -> int:
        """Number of neighbors of ``v`` not placed yet."""
        return self._pending[v]

    def is_completed(self, v: int) -> bool:
        return v in self.placed and self._pending[v] == 0

    def push(self, v: int) -> StepResult:
        """Append ``v`` to the order.

        Raises:
            NotBijectiveError: If ``v`` was already placed or is not a vertex
        """
        if v in self.placed or not 0 <= v < self.graph.n:
            raise NotBijectiveError(f"Vertex {v} cannot be placed twice or is out of range")
        self.step += 1
        self.placed.add(v)
        for u in self.graph.neighbors(v):
            self._pending[u] -= 1
        frame = frozenset(self.visible | {v})
        completed = frozenset(u for u in frame if self._pending[u] == 0)
        self.visible = set(frame - completed)
        return StepResult(self.step, v, frame, frozenset(self.visible), completed)

    def peek(self, v: int) -> StepResult:
        """Result of pushing ``v`` without changing the tracker."""
        return self.copy().push(v)

    @staticmethod
    def neighbor_masks(g: Graph) -> list[int]:
        """Bitmask of the neighbors of each vertex."""
        masks = []
        for v in g.vertices:
            mask = 0
            for u in g.neighbors(v):
                mask |= 1 << u
            masks.append(mask)
        return masks

    @staticmethod
    def frame_mask(neighbor_masks: Sequence[int], placed: int, v: int) -> int:
        """Frame at the step placing ``v`` after the vertex set ``placed`` (bitmasks)."""
        frame = 1 << v
        for u in bits(placed):
            if neighbor_masks[u] & ~placed:
                frame |= 1 << u
        return frame


def bits(mask: int) -> list[int]:
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


def frames(g: Graph, order: Sequence[int]) -> list[Frame]:
    """Frame of every step.

    Raises:
        NotBijectiveError: If ``order`` is not a permutation of the vertices
    """
    check_order(g, order)
    tracker = FrameTracker(g)
    result = []
    for i, v in enumerate(order):
        step = tracker.push(v)
        prime = step.prime if i < len(order) - 1 else None
        result.append(Frame(step.step, step.frame, v, prime))
    return result


def frame_graphs(g: Graph, order: Sequence[int]) -> list[tuple[FrameGraph, FrameGraph | None]]:
    """Induced frame graphs, each with the graph of its kept part (None at the last step).

    Raises:
        NotBijectiveError: If ``order`` is not a permutation of the vertices
    """
    result = []
    for frame in frames(g, order):
        current = FrameGraph(frame.visible, g.induced_edges(frame.visible))
        prime = None
        if frame.prime is not None:
            prime = FrameGraph(frame.prime, g.induced_edges(frame.prime))
        result.append((current, prime))
    return result
