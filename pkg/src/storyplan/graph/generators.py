"""Named graph families used by the planners, the oracle and the tests."""

import random
import re
from collections.abc import Callable, Sequence
from enum import StrEnum

import networkx as nx
import structlog

from storyplan.exceptions import BadParamsError
from storyplan.graph.models import Graph, build_graph
from storyplan.graph.recognizers import StackingOrder, from_networkx

logger = structlog.get_logger(__name__)

MAX_RANDOM_ATTEMPTS = 1000


class GraphFamily(StrEnum):
    """Graph families accepted by :func:`generate_named`."""

    PETERSEN = "petersen"
    PLATONIC = "platonic"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    BLOWN_CYCLE = "blown_cycle"
    GRID = "grid"
    CYCLE = "cycle"
    PATH = "path"
    RANDOM_CUBIC = "random_cubic"
    RANDOM_2TREE = "random_2tree"
    STACKED_EXAMPLE = "stacked_example"


PLATONIC_SOLIDS: dict[str, Callable[[], nx.Graph]] = {
    "tetra": nx.tetrahedral_graph,
    "cube": nx.cubical_graph,
    "octa": nx.octahedral_graph,
    "dodeca": nx.dodecahedral_graph,
    "icosa": nx.icosahedral_graph,
}

# Stacking edges of the nine-vertex example 2-tree, vertices 0..8.
STACKED_EXAMPLE_EDGES: dict[int, tuple[int, int]] = {
    3: (0, 1),
    4: (1, 2),
    5: (2, 4),
    6: (0, 2),
    7: (1, 3),
    8: (0, 6),
}


def _int_params(family: str, params: Sequence[str | int], count: int) -> list[int]:
    if len(params) != count:
        raise BadParamsError(f"{family} takes {count} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except (TypeError, ValueError) as e:
        raise BadParamsError(f"{family} parameters must be integers: {list(params)}") from e


def blown_cycle(k: int, s: int) -> Graph:
    """Cycle of k independent sets of size s, consecutive sets completely joined.

    Vertex ``i * s + j`` is the j-th vertex of part i.
    """
    if k < 3 or s < 1:
        raise BadParamsError(f"blown_cycle needs k >= 3 and s >= 1, got k={k}, s={s}")
    edges = []
    for i in range(k):
        nxt = (i + 1) % k
        for a in range(s):
            for b in range(s):
                edges.append((i * s + a, nxt * s + b))
    return build_graph(k * s, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParamsError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParamsError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def random_cubic(n: int, seed: int, exclude_k4: bool = False) -> Graph:
    """Connected random cubic graph, deterministic per seed.

    Samples random 3-regular graphs (configuration model with rejection until
    simple) and rejects disconnected samples.
    """
    if n < 4 or n % 2:
        raise BadParamsError(f"random_cubic needs an even n >= 4, got {n}")
    if n == 4 and exclude_k4:
        raise BadParamsError("The only cubic graph on 4 vertices is K4")
    rng = random.Random(seed)
    for _ in range(MAX_RANDOM_ATTEMPTS):
        sample = nx.random_regular_graph(3, n, seed=rng.randrange(2**32))
        if nx.is_connected(sample):
            return from_networkx(sample)
    raise BadParamsError(f"No connected cubic graph sampled for n={n}, seed={seed}")


def random_two_tree(n: int, seed: int) -> Graph:
    """Random 2-tree: a triangle, then each vertex stacked on a uniformly chosen edge."""
    if n < 3:
        raise BadParamsError(f"random_2tree needs n >= 3, got {n}")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        x, y = rng.choice(edges)
        edges.extend([(x, v), (y, v)])
    return build_graph(n, edges)


def stacked_example() -> Graph:
    """Nine-vertex 2-tree whose stacking order is 0..8."""
    edges = [(0, 1), (1, 2), (0, 2)]
    for v, (x, y) in STACKED_EXAMPLE_EDGES.items():
        edges.extend([(x, v), (y, v)])
    return build_graph(9, edges)


def stacked_example_order() -> StackingOrder:
    """The stacking order 0..8 of :func:`stacked_example`."""
    return StackingOrder(order=tuple(range(9)), stacked_on=dict(STACKED_EXAMPLE_EDGES))


def generate_named(family: str, params: Sequence[str | int] = (), exclude_k4: bool = False) -> Graph:
    """Generate a graph of a named family.

    Args:
        family: Family name (see :class:`GraphFamily`; dashes are accepted)
        params: Family parameters
        exclude_k4: For random_cubic, reject K4 outputs

    Returns:
        The generated graph

    Raises:
        BadParamsError: If the family is unknown or its parameters are invalid
    """
    try:
        kind = GraphFamily(family.lower().replace("-", "_"))
    except ValueError as e:
        available = ", ".join(f.value for f in GraphFamily)
        raise BadParamsError(f"Unknown graph family: {family}. Available: {available}") from e

    match kind:
        case GraphFamily.PETERSEN:
            _int_params(kind, params, 0)
            return from_networkx(nx.petersen_graph())
        case GraphFamily.PLATONIC:
            if len(params) != 1 or str(params[0]) not in PLATONIC_SOLIDS:
                raise BadParamsError(f"platonic takes one of {', '.join(PLATONIC_SOLIDS)}")
            return from_networkx(PLATONIC_SOLIDS[str(params[0])]())
        case GraphFamily.COMPLETE:
            (n,) = _int_params(kind, params, 1)
            if n < 1:
                raise BadParamsError(f"complete needs n >= 1, got {n}")
            return from_networkx(nx.complete_graph(n))
        case GraphFamily.COMPLETE_BIPARTITE:
            a, b = _int_params(kind, params, 2)
            if a < 1 or b < 1:
                raise BadParamsError(f"complete_bipartite needs a, b >= 1, got {a}, {b}")
            return from_networkx(nx.complete_bipartite_graph(a, b))
        case GraphFamily.BLOWN_CYCLE:
            k, s = _int_params(kind, params, 2)
            return blown_cycle(k, s)
        case GraphFamily.GRID:
            w, h = _int_params(kind, params, 2)
            if w < 1 or h < 1:
                raise BadParamsError(f"grid needs w, h >= 1, got {w}, {h}")
            return from_networkx(nx.grid_2d_graph(w, h))
        case GraphFamily.CYCLE:
            return cycle(*_int_params(kind, params, 1))
        case GraphFamily.PATH:
            return path(*_int_params(kind, params, 1))
        case GraphFamily.RANDOM_CUBIC:
            n, seed = _int_params(kind, params, 2)
            return random_cubic(n, seed, exclude_k4=exclude_k4)
        case GraphFamily.RANDOM_2TREE:
            n, seed = _int_params(kind, params, 2)
            return random_two_tree(n, seed)
        case GraphFamily.STACKED_EXAMPLE:
            _int_params(kind, params, 0)
            return stacked_example()


_ALIASES = [
    (re.compile(r"^k(\d+)$"), lambda m: ("complete", [m.group(1)])),
    (re.compile(r"^k(\d+),(\d+)$"), lambda m: ("complete_bipartite", [m.group(1), m.group(2)])),
    (re.compile(r"^c(\d+)$"), lambda m: ("cycle", [m.group(1)])),
    (re.compile(r"^grid(\d+)x(\d+)$"), lambda m: ("grid", [m.group(1), m.group(2)])),
    (re.compile(r"^(tetra|cube|octa|dodeca|icosa)(hedron)?$"), lambda m: ("platonic", [m.group(1)])),
]


def parse_family_spec(spec: str, default_seed: int = 0) -> tuple[str, list[str]]:
    """Split a family spec ``name[:p1,p2,...]`` into name and parameters.

    Short aliases such as ``k4``, ``c6``, ``grid4x4`` and ``cube`` are
    expanded. Random families get ``default_seed`` when no seed is given.

    Example:
        >>> parse_family_spec("blown-cycle:5,2")
        ('blown_cycle', ['5', '2'])
    """
    text = spec.strip().lower()
    if ":" in text:
        name, _, raw = text.partition(":")
        params = [p.strip() for p in raw.split(",") if p.strip()]
    else:
        name, params = text, []
        for pattern, expand in _ALIASES:
            match = pattern.match(text)
            if match:
                name, params = expand(match)
                break
    name = name.replace("-", "_")
    if name in (GraphFamily.RANDOM_CUBIC, GraphFamily.RANDOM_2TREE) and len(params) == 1:
        params.append(str(default_seed))
    return name, params


def generate_from_spec(spec: str, default_seed: int = 0, exclude_k4: bool = False) -> Graph:
    """Generate a graph from a family spec string."""
    name, params = parse_family_spec(spec, default_seed)
    logger.debug("Generating graph", family=name, params=params)
    return generate_named(name, params, exclude_k4=exclude_k4)
