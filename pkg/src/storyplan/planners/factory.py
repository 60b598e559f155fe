"""Planner registry and automatic planner selection."""

from collections.abc import Callable
from dataclasses import dataclass

import structlog

from storyplan.exceptions import NoApplicablePlannerError, NotPartialTwoTreeError
from storyplan.graph.models import Graph
from storyplan.graph.recognizers import (
    complete_to_two_tree,
    find_triangle,
    is_bipartite,
    is_outerplanar,
    is_planar,
    is_two_tree,
    max_degree,
)
from storyplan.model.models import PlanMode, Storyplan
from storyplan.planners.subcubic import MAX_DEGREE, k4_component

logger = structlog.get_logger(__name__)

Applicability = Callable[[Graph, PlanMode], str | None]
Builder = Callable[[Graph, PlanMode], Storyplan]

FRAME_CLASSES = {
    PlanMode.FOREST: (PlanMode.FOREST,),
    PlanMode.OUTERPLANAR: (PlanMode.FOREST, PlanMode.OUTERPLANAR),
    PlanMode.PLANAR: (PlanMode.FOREST, PlanMode.OUTERPLANAR, PlanMode.PLANAR),
}

AUTO_ORDER = {
    PlanMode.FOREST: ("bipartite", "outer-face", "subcubic", "planar"),
    PlanMode.OUTERPLANAR: ("two-tree", "subcubic"),
    PlanMode.PLANAR: ("two-tree", "subcubic", "bipartite", "outer-face", "planar"),
}


@dataclass(frozen=True)
class PlannerEntry:
    """A registered planner.

    ``applicable`` returns None when the planner can handle the graph in the
    requested mode, else a one-line reason.
    """

    name: str
    produces: tuple[PlanMode, ...]
    applicable: Applicability
    build: Builder


class PlannerFactory:
    """Registry of the constructive planners."""

    _registry: dict[str, PlannerEntry] = {}

    @classmethod
    def register(cls, entry: PlannerEntry) -> None:
        cls._registry[entry.name.lower()] = entry

    @classmethod
    def get(cls, name: str) -> PlannerEntry:
        """Look up a planner by name.

        Raises:
            ValueError: If no planner of that name is registered
        """
        entry = cls._registry.get(name.lower())
        if entry is None:
            available = ", ".join(cls._registry)
            raise ValueError(f"Unknown algorithm: {name}. Available algorithms: {available}")
        return entry

    @classmethod
    def list_types(cls) -> list[str]:
        return list(cls._registry.keys())

    @classmethod
    def create(cls, g: Graph, mode: PlanMode | str, algorithm: str = "auto") -> Storyplan:
        """Build a storyplan of ``g`` in ``mode`` with the named planner.

        With ``algorithm="auto"`` the first applicable planner in
        :data:`AUTO_ORDER` is used.

        Raises:
            NoApplicablePlannerError: If no planner applies, or the named one
                does not produce plans of the requested mode
            PreconditionError: If the named planner rejects the graph
        """
        mode = PlanMode(mode)
        if algorithm != "auto":
            entry = cls.get(algorithm)
            if not set(entry.produces) & set(FRAME_CLASSES[mode]):
                raise NoApplicablePlannerError(
                    f"Algorithm {entry.name} does not produce {mode.value} storyplans",
                    {entry.name: f"produces {', '.join(m.value for m in entry.produces)}"},
                )
            return entry.build(g, mode)

        diagnostics: dict[str, str] = {}
        for name in AUTO_ORDER[mode]:
            entry = cls.get(name)
            reason = entry.applicable(g, mode)
            if reason is None:
                logger.info("Selected planner", algorithm=name, mode=mode.value)
                return entry.build(g, mode)
            diagnostics[name] = reason
        raise NoApplicablePlannerError(f"No planner applies to this graph in {mode.value} mode", diagnostics)


def _bipartite_applicable(g: Graph, _: PlanMode) -> str | None:
    return None if is_bipartite(g) else "graph is not bipartite"


def _two_tree_applicable(g: Graph, _: PlanMode) -> str | None:
    if g.n < 3 or is_two_tree(g):
        return None
    try:
        complete_to_two_tree(g)
    except NotPartialTwoTreeError as e:
        return f"graph is not a partial 2-tree ({e})"
    return None


def _triangle_reason(g: Graph) -> str | None:
    triangle = find_triangle(g)
    return None if triangle is None else f"graph contains the triangle {triangle}"


def _subcubic_applicable(g: Graph, mode: PlanMode) -> str | None:
    if max_degree(g) > MAX_DEGREE:
        return f"maximum degree {max_degree(g)} exceeds {MAX_DEGREE}"
    if mode == PlanMode.FOREST:
        return _triangle_reason(g)
    if k4_component(g) is not None:
        return "graph has a K4 component"
    return None


def _outer_face_applicable(g: Graph, _: PlanMode) -> str | None:
    if not is_outerplanar(g):
        return "graph is not outerplanar"
    return _triangle_reason(g)


def _planar_applicable(g: Graph, _: PlanMode) -> str | None:
    if not is_planar(g):
        return "graph is not planar"
    return _triangle_reason(g)


def register_all_planners() -> None:
    """Register the built-in planners."""
    from storyplan.planar_forest.planner import plan_planar_forest
    from storyplan.planners.bipartite import plan_bipartite_forest
    from storyplan.planners.outerplanar import plan_outerplanar_forest
    from storyplan.planners.subcubic import plan_subcubic_forest, plan_subcubic_outerplanar
    from storyplan.planners.two_tree import plan_partial_two_tree_outerplanar

    def subcubic(g: Graph, mode: PlanMode) -> Storyplan:
        if mode == PlanMode.FOREST:
            return plan_subcubic_forest(g)
        return plan_subcubic_outerplanar(g)

    PlannerFactory.register(
        PlannerEntry(
            "bipartite",
            (PlanMode.FOREST,),
            _bipartite_applicable,
            lambda g, _: plan_bipartite_forest(g),
        )
    )
    PlannerFactory.register(
        PlannerEntry(
            "two-tree",
            (PlanMode.OUTERPLANAR,),
            _two_tree_applicable,
            lambda g, _: plan_partial_two_tree_outerplanar(g),
        )
    )
    PlannerFactory.register(
        PlannerEntry("subcubic", (PlanMode.FOREST, PlanMode.OUTERPLANAR), _subcubic_applicable, subcubic)
    )
    PlannerFactory.register(
        PlannerEntry(
            "outer-face",
            (PlanMode.FOREST,),
            _outer_face_applicable,
            lambda g, _: plan_outerplanar_forest(g),
        )
    )
    PlannerFactory.register(
        PlannerEntry(
            "planar",
            (PlanMode.FOREST,),
            _planar_applicable,
            lambda g, _: plan_planar_forest(g),
        )
    )
    logger.debug("Registered planners", planners=PlannerFactory.list_types())


def create_plan(g: Graph, mode: PlanMode | str, algorithm: str = "auto") -> Storyplan:
    """Register the built-in planners and build a storyplan.

    Raises:
        NoApplicablePlannerError: If no planner applies
        PreconditionError: If the named planner rejects the graph
    """
    if not PlannerFactory.list_types():
        register_all_planners()
    return PlannerFactory.create(g, mode, algorithm)

