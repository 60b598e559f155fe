"""Configuration management for storyplan."""

from storyplan.config.settings import settings

__all__ = ["settings"]
