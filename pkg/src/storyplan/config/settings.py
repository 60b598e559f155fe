"""Application settings and configuration."""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class OracleSettings(BaseSettings):
    """Exhaustive search configuration."""

    max_n: int = Field(default=12, description="Largest vertex count accepted by the search", ge=1)
    symmetry: bool = Field(
        default=True, description="Restrict the first vertex to automorphism orbit representatives"
    )
    node_budget: int = Field(
        default=10**9, description="Search nodes explored before giving up", ge=1
    )
    jobs: int = Field(default=1, description="Parallel search workers", ge=1)


class PlannerSettings(BaseSettings):
    """Planner configuration."""

    debug_assertions: bool = Field(
        default=True, description="Check structural claims and invariants while planning"
    )
    shrink_steps: int = Field(
        default=64, description="Maximum halvings when placing a vertex near another", ge=1
    )


class RenderSettings(BaseSettings):
    """Default SVG rendering options."""

    canvas: int = Field(default=480, description="Canvas width and height in px", gt=0)
    margin: int = Field(default=24, description="Canvas margin in px", ge=0)
    vertex_radius: float = Field(default=6.0, description="Vertex disk radius in px", gt=0)
    stroke_width: float = Field(default=2.0, description="Edge stroke width in px", gt=0)
    show_labels: bool = Field(default=True, description="Draw vertex indices")
    highlight_new: bool = Field(default=True, description="Highlight the vertex added at the step")


class MonitoringSettings(BaseSettings):
    """Monitoring and observability configuration."""

    metrics_enabled: bool = Field(default=True, description="Record Prometheus metrics")
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: Literal["json", "text"] = Field(default="text", description="Log format")


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_prefix="STORYPLAN_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
    )

    seed: int = Field(default=0, description="Default seed for random graph families")
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    planner: PlannerSettings = Field(default_factory=PlannerSettings)
    render: RenderSettings = Field(default_factory=RenderSettings)
    monitoring: MonitoringSettings = Field(default_factory=MonitoringSettings)


# Global settings instance
settings = Settings()
