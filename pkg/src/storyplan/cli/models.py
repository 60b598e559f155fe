"""Render configuration."""

import json
from pathlib import Path
from typing import Self

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from storyplan.config import settings
from storyplan.exceptions import ConfigurationError


class RenderConfig(BaseModel):
    """SVG rendering options."""

    canvas: int = Field(default_factory=lambda: settings.render.canvas, gt=0, description="Canvas size in px")
    margin: int = Field(default_factory=lambda: settings.render.margin, ge=0, description="Margin in px")
    vertex_radius: float = Field(default_factory=lambda: settings.render.vertex_radius, gt=0)
    stroke_width: float = Field(default_factory=lambda: settings.render.stroke_width, gt=0)
    show_labels: bool = Field(default_factory=lambda: settings.render.show_labels)
    highlight_new: bool = Field(default_factory=lambda: settings.render.highlight_new)

    @model_validator(mode="after")
    def _margin_fits(self) -> Self:
        if 2 * self.margin >= self.canvas:
            raise ValueError(f"margin {self.margin} must be less than half the canvas {self.canvas}")
        return self

    @classmethod
    def from_file(cls, file_path: str | Path) -> "RenderConfig":
        """Load options from a YAML or JSON file.

        Raises:
            ConfigurationError: If the file is missing, has an unknown suffix
                or holds invalid options
        """
        path = Path(file_path)
        if not path.exists():
            raise ConfigurationError(f"Render config file not found: {file_path}")
        content = path.read_text()
        try:
            if path.suffix in [".yaml", ".yml"]:
                values = yaml.safe_load(content) or {}
            elif path.suffix == ".json":
                values = json.loads(content)
            else:
                raise ConfigurationError(f"Unsupported config format: {path.suffix}")
            return cls(**values)
        except (yaml.YAMLError, json.JSONDecodeError, ValidationError, TypeError) as e:
            raise ConfigurationError(f"Invalid render config {file_path}: {e}") from e
