"""Structured logging configuration."""

import logging
import sys
from collections.abc import MutableMapping
from fractions import Fraction
from typing import Any

import structlog


def _plain(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def plain_values(_: Any, __: str, event_dict: MutableMapping[str, Any]) -> MutableMapping[str, Any]:
    """Render vertex sets as sorted lists and rationals as ``p/q`` strings."""
    for key, value in event_dict.items():
        event_dict[key] = _plain(value)
    return event_dict


def setup_logging(level: str | None = None) -> None:
    """Configure structlog for the command line.

    Log records go to stderr; stdout is left to reports, plans and verdicts.

    Args:
        level: Override for ``monitoring.log_level``
    """
    # Import here to avoid circular dependency
    from storyplan.config.settings import settings

    level_name = (level or settings.monitoring.log_level).upper()
    log_level = getattr(logging, level_name, logging.INFO)
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level, force=True)

    processors: list[Any] = [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        plain_values,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
    ]
    if settings.monitoring.log_format == "json":
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )
