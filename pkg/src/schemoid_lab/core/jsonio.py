"""
Module for byte-stable JSON fixture input and output.
"""

import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Optional, Tuple

import numpy as np

from schemoid_lab.exceptions import StructuralError


def _fallback(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


def dumps(payload: Any) -> str:
    """Serialize with sorted keys so identical inputs give identical bytes."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, default=_fallback) + "\n"


def digest(text: str) -> str:
    """SHA-256 of fixture text, used to echo inputs in reports."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def read_text(path: Optional[str]) -> str:
    """Read a fixture path, treating ``-`` or ``None`` as stdin."""
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise StructuralError(f"Cannot read fixture: {e}", pointer=str(path)) from e


def load(path: Optional[str]) -> Tuple[Any, str]:
    """
    Load a JSON fixture.

    Args:
        path: File path, ``-`` or ``None`` for stdin

    Returns:
        Tuple of (parsed payload, hex digest of the raw text)
    """
    text = read_text(path)
    try:
        return json.loads(text), digest(text)
    except json.JSONDecodeError as e:
        raise StructuralError(f"Invalid JSON: {e.msg}", pointer=f"line {e.lineno}") from e


def require(payload: Any, key: str, kind: type, pointer: str = "") -> Any:
    """Fetch ``payload[key]`` and check its type, raising StructuralError otherwise."""
    where = f"{pointer}.{key}" if pointer else key
    if not isinstance(payload, dict) or key not in payload:
        raise StructuralError(f"Missing field '{key}'", pointer=where)
    value = payload[key]
    if kind is int and isinstance(value, bool):
        raise StructuralError(f"Field '{key}' must be int", pointer=where)
    if not isinstance(value, kind):
        raise StructuralError(f"Field '{key}' must be {kind.__name__}", pointer=where)
    return value


def require_int(value: Any, pointer: str) -> int:
    """Return ``value`` if it is a JSON integer (not a bool), else raise StructuralError."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise StructuralError(f"Expected an integer, got {value!r}", pointer=pointer)
    return value


def require_label(value: Any, pointer: str) -> str:
    """Element labels are strings or integers; integers are read as their decimal text."""
    if isinstance(value, str):
        return value
    return str(require_int(value, pointer))
