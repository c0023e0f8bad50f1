#!/usr/bin/env python3
"""
Script to rewrite the generated fixtures under data/fixtures from the builders.

z2_swap_functor.json is written by hand and left alone.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict

from schemoid_lab.cli.fixtures import generate
from schemoid_lab.config import configure_logging
from schemoid_lab.core import jsonio
from schemoid_lab.scheme.association import hamming

logger = logging.getLogger(__name__)

ARROW_CATEGORY = {
    "objects": 2,
    "morphisms": [{"src": 0, "tgt": 0}, {"src": 0, "tgt": 1}, {"src": 1, "tgt": 1}],
    "identity": [0, 2],
    "compose": [[0, 0, 0], [1, 0, 1], [2, 1, 1], [2, 2, 2]],
}

FIXTURES: Dict[str, Callable[[], Any]] = {
    "arrow_discrete.json": lambda: generate("discrete", [], ARROW_CATEGORY),
    "z2_group.json": lambda: generate("group", ["Z2"]),
    "h12_scheme.json": lambda: hamming(1, 2).to_json(),
}


def regenerate(output_dir: Path) -> None:
    """
    Write every generated fixture.

    Args:
        output_dir: Directory receiving the JSON files
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURES.items():
        (output_dir / name).write_text(jsonio.dumps(build()), encoding="utf-8")
        logger.info(f"Wrote {name}")


if __name__ == "__main__":
    configure_logging("INFO")
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "data" / "fixtures"
    regenerate(target)
