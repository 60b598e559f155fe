"""Command-line interface."""

from storyplan.cli.main import build_parser, main
from storyplan.cli.models import RenderConfig
from storyplan.cli.render import render_plan

__all__ = ["RenderConfig", "build_parser", "main", "render_plan"]
