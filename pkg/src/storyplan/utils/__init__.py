"""Utility functions and helpers."""

from storyplan.utils.logging import setup_logging
from storyplan.utils.metrics import metrics

__all__ = ["setup_logging", "metrics"]
