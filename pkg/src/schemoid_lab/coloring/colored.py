"""
Module for colored categories and the object relation generated by colors.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from schemoid_lab.core.category import FiniteCategory
from schemoid_lab.core.jsonio import require
from schemoid_lab.exceptions import StructuralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate with a counterexample when it fails."""

    holds: bool
    witness: Optional[Any] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ColoredCategory:
    """A finite category together with a partition of its morphisms into colors."""

    base: FiniteCategory
    color_of: Tuple[int, ...]
    color_count: int
    color_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.base.morphism_count == 0:
            raise StructuralError("A colored category needs at least one morphism", pointer="morphisms")
        if len(self.color_of) != self.base.morphism_count:
            raise StructuralError("Every morphism needs exactly one color", pointer="colors")
        used = set(self.color_of)
        if used != set(range(self.color_count)):
            missing = sorted(set(range(self.color_count)) - used)
            raise StructuralError(f"Colors must be onto 0..{self.color_count - 1}; empty: {missing}", pointer="colors")
        if self.color_names is not None and len(self.color_names) != self.color_count:
            raise StructuralError("One name per color required", pointer="color_names")

    @classmethod
    def from_colors(cls, base: FiniteCategory, colors: Sequence[int],
                    names: Optional[Sequence[str]] = None) -> "ColoredCategory":
        return cls(base, tuple(colors), max(colors) + 1 if colors else 0,
                   tuple(names) if names is not None else None)

    def color_name(self, sigma: int) -> str:
        return self.color_names[sigma] if self.color_names else f"c{sigma}"

    def members(self, sigma: int) -> List[int]:
        return [f for f, c in enumerate(self.color_of) if c == sigma]

    def identity_color(self, x: int) -> int:
        return self.color_of[self.base.identity_of[x]]

    def to_json(self) -> Dict[str, Any]:
        payload = self.base.to_json()
        payload["colors"] = list(self.color_of)
        if self.color_names:
            payload["color_names"] = list(self.color_names)
        return payload

    @classmethod
    def from_json(cls, payload: Any) -> "ColoredCategory":
        base = FiniteCategory.from_json(payload)
        colors = require(payload, "colors", list)
        if not all(isinstance(c, int) and c >= 0 for c in colors):
            raise StructuralError("Colors are nonnegative integers", pointer="colors")
        names = payload.get("color_names")
        return cls.from_colors(base, colors, names)


def color_members(X: ColoredCategory) -> List[List[int]]:
    """Morphisms of each color, in index order."""
    groups: List[List[int]] = [[] for _ in range(X.color_count)]
    for f, c in enumerate(X.color_of):
        groups[c].append(f)
    return groups


def identity_colors(X: ColoredCategory) -> List[int]:
    """Colors containing at least one identity, ascending."""
    return sorted({X.color_of[i] for i in X.base.identity_of})


def object_classes(X: ColoredCategory) -> List[List[int]]:
    """
    Partition objects by the relation generated from ``s(f) ~ s(g)`` and
    ``t(f) ~ t(g)`` for every pair of equally colored morphisms.

    Returns:
        Classes as sorted lists, ordered by their least object
    """
    C = X.base
    uf = UnionFind(range(C.object_count))
    for group in color_members(X):
        first = group[0]
        for f in group[1:]:
            uf.union(C.src(first), C.src(f))
            uf.union(C.tgt(first), C.tgt(f))
    classes = sorted(sorted(block) for block in uf.to_sets())
    logger.debug(f"{len(classes)} object class(es) over {C.object_count} object(s)")
    return classes


def class_index(X: ColoredCategory) -> Tuple[int, ...]:
    """Index of the object class of every object."""
    index = [0] * X.base.object_count
    for k, block in enumerate(object_classes(X)):
        for x in block:
            index[x] = k
    return tuple(index)
