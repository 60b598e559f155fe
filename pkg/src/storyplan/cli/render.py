"""SVG frames of a storyplan."""

from pathlib import Path

import drawsvg as draw
import structlog

from storyplan.cli.models import RenderConfig
from storyplan.geometry.predicates import Point
from storyplan.model.models import Storyplan

logger = structlog.get_logger(__name__)

EDGE_COLOR = "#333333"
VERTEX_COLOR = "#1f77b4"
NEW_VERTEX_COLOR = "#d62728"
LABEL_COLOR = "#ffffff"


class CanvasMap:
    """Affine map from plan coordinates to the canvas; y grows upward in the plan."""

    def __init__(self, points: list[Point], config: RenderConfig):
        self.config = config
        xs = [float(p.x) for p in points] or [0.0]
        ys = [float(p.y) for p in points] or [0.0]
        self.min_x, self.min_y = min(xs), min(ys)
        span = max(max(xs) - self.min_x, max(ys) - self.min_y)
        inner = config.canvas - 2 * config.margin
        self.scale = inner / span if span > 0 else 0.0
        self.offset_x = config.margin + (inner - (max(xs) - self.min_x) * self.scale) / 2
        self.offset_y = config.margin + (inner - (max(ys) - self.min_y) * self.scale) / 2

    def __call__(self, p: Point) -> tuple[float, float]:
        x = self.offset_x + (float(p.x) - self.min_x) * self.scale
        y = self.offset_y + (float(p.y) - self.min_y) * self.scale
        return x, self.config.canvas - y


def render_frame(
    plan: Storyplan,
    vertices: frozenset[int],
    canvas_map: CanvasMap,
    new_vertex: int | None = None,
) -> draw.Drawing:
    """Drawing of the subgraph induced by ``vertices`` at the plan's positions."""
    config = canvas_map.config
    drawing = draw.Drawing(config.canvas, config.canvas)
    drawing.append(draw.Rectangle(0, 0, config.canvas, config.canvas, fill="white"))
    for u, v in sorted(plan.graph.induced_edges(vertices)):
        (x1, y1), (x2, y2) = canvas_map(plan.positions[u]), canvas_map(plan.positions[v])
        drawing.append(draw.Line(x1, y1, x2, y2, stroke=EDGE_COLOR, stroke_width=config.stroke_width))
    for v in sorted(vertices):
        x, y = canvas_map(plan.positions[v])
        fill = NEW_VERTEX_COLOR if config.highlight_new and v == new_vertex else VERTEX_COLOR
        drawing.append(draw.Circle(x, y, config.vertex_radius, fill=fill))
        if config.show_labels:
            drawing.append(
                draw.Text(
                    str(v),
                    config.vertex_radius * 1.4,
                    x,
                    y,
                    fill=LABEL_COLOR,
                    text_anchor="middle",
                    dominant_baseline="central",
                )
            )
    return drawing


def render_plan(plan: Storyplan, out_dir: str | Path, config: RenderConfig | None = None) -> list[Path]:
    """Write ``frame_<i>.svg`` for every frame and ``frame_<i>_prime.svg`` for every kept part.

    Returns:
        Written paths in step order
    """
    config = config or RenderConfig()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    canvas_map = CanvasMap([plan.positions[v] for v in plan.graph.vertices], config)

    written = []
    for frame in plan.frames:
        path = out / f"frame_{frame.step}.svg"
        render_frame(plan, frame.visible, canvas_map, frame.new_vertex).save_svg(str(path))
        written.append(path)
        if frame.prime is not None:
            prime_path = out / f"frame_{frame.step}_prime.svg"
            render_frame(plan, frame.prime, canvas_map).save_svg(str(prime_path))
            written.append(prime_path)
    logger.info("Rendered frames", files=len(written), out_dir=str(out))
    return written
