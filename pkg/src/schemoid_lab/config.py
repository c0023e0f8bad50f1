"""
Module for runtime configuration read from the environment.
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Optional

from dotenv import load_dotenv

from schemoid_lab.exceptions import StructuralError

# Load environment variables
load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class CompletionCaps:
    """Bounds for rewriting completion and normal-form enumeration."""

    max_rule_length: int = 12
    max_pairs: int = 10000
    max_elements: int = 10000

    def __post_init__(self):
        for field in fields(self):
            if getattr(self, field.name) <= 0:
                raise StructuralError(f"{field.name} must be positive", pointer=field.name)

    def override(self, spec: Optional[str]) -> "CompletionCaps":
        """
        Apply ``key=value,key=value`` overrides.

        Args:
            spec: Override string, e.g. ``"max_rule_length=8,max_pairs=500"``

        Returns:
            New caps with the overrides applied
        """
        if not spec:
            return self
        known = {field.name for field in fields(self)}
        updates = {}
        for item in spec.split(','):
            item = item.strip()
            if not item:
                continue
            key, sep, value = item.partition('=')
            key = key.strip()
            if not sep or key not in known:
                raise StructuralError(f"Unknown cap override '{item}'", pointer=key or item)
            try:
                updates[key] = int(value)
            except ValueError as e:
                raise StructuralError(f"Cap '{key}' needs an integer value", pointer=key) from e
        return replace(self, **updates)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise StructuralError(f"{name} must be an integer", pointer=name) from e


def default_caps() -> CompletionCaps:
    """Completion caps with ``SCHEMOID_LAB_CAPS`` applied."""
    return CompletionCaps().override(os.getenv('SCHEMOID_LAB_CAPS'))


def default_max_degree() -> int:
    """Default cohomology degree bound (``SCHEMOID_LAB_MAX_DEGREE``)."""
    return _int_env('SCHEMOID_LAB_MAX_DEGREE', 5)


def max_points() -> int:
    """Largest point set the scheme generators will build (``SCHEMOID_LAB_MAX_POINTS``)."""
    return _int_env('SCHEMOID_LAB_MAX_POINTS', 4096)


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure root logging once for command-line use.

    Args:
        level: Level name; falls back to ``SCHEMOID_LAB_LOG_LEVEL`` then WARNING
    """
    level = (level or os.getenv('SCHEMOID_LAB_LOG_LEVEL') or 'WARNING').upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT)
