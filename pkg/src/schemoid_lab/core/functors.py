"""
Module for finite Set-valued functors and natural transformations.

Element labels are opaque strings. A functor stores one tuple of labels per
object and one label map per morphism.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.core.jsonio import require, require_label
from schemoid_lab.core.report import ValidationReport
from schemoid_lab.exceptions import StructuralError

logger = logging.getLogger(__name__)

LabelMap = Mapping[str, str]


@dataclass(frozen=True)
class SetFunctor:
    """A functor from a finite category to finite sets."""

    object_sets: Tuple[Tuple[str, ...], ...]
    morphism_maps: Tuple[LabelMap, ...]

    @classmethod
    def constant(cls, C: FiniteCategory, labels: Sequence[str]) -> "SetFunctor":
        """Constant functor with value ``labels`` and identity maps."""
        value = tuple(labels)
        ident = {a: a for a in value}
        return cls(tuple(value for _ in range(C.object_count)), tuple(dict(ident) for _ in range(C.morphism_count)))

    def apply(self, f: int, a: str) -> str:
        return self.morphism_maps[f][a]

    def to_json(self) -> Dict[str, Any]:
        return {
            "object_sets": [list(labels) for labels in self.object_sets],
            "morphism_maps": [dict(m) for m in self.morphism_maps],
        }

    @classmethod
    def from_json(cls, payload: Any, C: FiniteCategory) -> "SetFunctor":
        """
        Parse ``functor.json``. Morphism maps are either label dictionaries or
        lists of images aligned with the source object's label order.
        """
        raw_sets = require(payload, "object_sets", list)
        raw_maps = require(payload, "morphism_maps", list)
        if len(raw_sets) != C.object_count:
            raise StructuralError("One label list per object required", pointer="object_sets")
        if len(raw_maps) != C.morphism_count:
            raise StructuralError("One map per morphism required", pointer="morphism_maps")
        for x, labels in enumerate(raw_sets):
            if not isinstance(labels, list):
                raise StructuralError("Object set must be a list of labels", pointer=f"object_sets/{x}")
        object_sets = tuple(
            tuple(require_label(a, f"object_sets/{x}/{i}") for i, a in enumerate(labels))
            for x, labels in enumerate(raw_sets)
        )
        maps: List[Dict[str, str]] = []
        for f, entry in enumerate(raw_maps):
            domain = object_sets[C.src(f)]
            if isinstance(entry, dict):
                maps.append({k: require_label(v, f"morphism_maps/{f}/{k}") for k, v in entry.items()})
            elif isinstance(entry, list) and len(entry) == len(domain):
                maps.append({a: require_label(b, f"morphism_maps/{f}/{i}")
                             for i, (a, b) in enumerate(zip(domain, entry))})
            else:
                raise StructuralError("Map must match the source label list", pointer=f"morphism_maps/{f}")
        return cls(object_sets, tuple(maps))


@dataclass(frozen=True)
class NaturalTransformation:
    """Components ``η_x : F(x) → G(x)`` indexed by object."""

    components: Tuple[LabelMap, ...]

    @classmethod
    def identity(cls, F: SetFunctor) -> "NaturalTransformation":
        return cls(tuple({a: a for a in labels} for labels in F.object_sets))


def check_functor(C: FiniteCategory, F: SetFunctor) -> ValidationReport:
    """
    Check functoriality of ``F`` on ``C``.

    Raises:
        StructuralError: if an object set or morphism map is missing
    """
    if len(F.object_sets) != C.object_count:
        raise StructuralError("Functor is missing an object set", pointer="object_sets")
    if len(F.morphism_maps) != C.morphism_count:
        raise StructuralError("Functor is missing a morphism map", pointer="morphism_maps")
    report = ValidationReport("set functor")
    for f, (s, t) in enumerate(C.morphisms):
        fmap = F.morphism_maps[f]
        if set(fmap) != set(F.object_sets[s]):
            report.add(f"map of morphism {f} is not defined on F({s})")
        elif not set(fmap.values()) <= set(F.object_sets[t]):
            report.add(f"map of morphism {f} leaves F({t})")
    if not report.ok:
        return report
    for x, i in enumerate(C.identity_of):
        if any(F.morphism_maps[i][a] != a for a in F.object_sets[x]):
            report.add(f"identity of object {x} is not sent to the identity map")
    for (g, f), gf in C.compose_table.items():
        fg_map, f_map, g_map = F.morphism_maps[gf], F.morphism_maps[f], F.morphism_maps[g]
        for a in F.object_sets[C.src(f)]:
            if fg_map[a] != g_map[f_map[a]]:
                report.add(f"F({g}∘{f}) differs from F({g})∘F({f}) at {a}")
                break
    return report


def check_natural(C: FiniteCategory, F: SetFunctor, G: SetFunctor, eta: NaturalTransformation) -> ValidationReport:
    """
    Check that every naturality square of ``eta : F ⇒ G`` commutes.

    Raises:
        StructuralError: if a component is missing
    """
    if len(eta.components) != C.object_count:
        raise StructuralError("Transformation is missing a component", pointer="components")
    report = ValidationReport("natural transformation")
    for x in range(C.object_count):
        comp = eta.components[x]
        if set(comp) != set(F.object_sets[x]):
            raise StructuralError(f"Component at {x} is not defined on F({x})", pointer=f"components[{x}]")
        if not set(comp.values()) <= set(G.object_sets[x]):
            report.add(f"component at {x} leaves G({x})")
    if not report.ok:
        return report
    for f, (s, t) in enumerate(C.morphisms):
        for a in F.object_sets[s]:
            if G.apply(f, eta.components[s][a]) != eta.components[t][F.apply(f, a)]:
                report.add(f"square of morphism {f} fails at {a}")
                break
    return report


def restrict_functor(C: FiniteCategory, u: CategoryFunctor, F: SetFunctor) -> SetFunctor:
    """
    Inverse image ``u*F = F∘u`` of a functor on the codomain of ``u``.

    Args:
        C: Domain category of ``u``
        u: Functor ``C → D``
        F: Set-valued functor on ``D``

    Returns:
        Set-valued functor on ``C``
    """
    return SetFunctor(
        tuple(F.object_sets[u.object_map[x]] for x in range(C.object_count)),
        tuple(F.morphism_maps[u.morphism_map[f]] for f in range(C.morphism_count)),
    )


def restrict_transformation(C: FiniteCategory, u: CategoryFunctor, eta: NaturalTransformation) -> NaturalTransformation:
    """Whiskering ``eta∘u``."""
    return NaturalTransformation(tuple(eta.components[u.object_map[x]] for x in range(C.object_count)))
