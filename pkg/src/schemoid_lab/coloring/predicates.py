"""
Module for structure constants and the schemoid, naturality and tameness
predicates of colored categories, plus colored morphisms between them.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import pandas as pd

from schemoid_lab.coloring.colored import (
    ColoredCategory,
    Verdict,
    class_index,
    color_members,
    identity_colors,
)
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory, check_category_functor
from schemoid_lab.exceptions import PreconditionError

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass
class StructureConstantTable:
    """
    Fiber sizes of the composition map.

    ``p[(sigma, tau, mu)]`` counts pairs ``(f, g)`` with ``f`` in ``sigma``,
    ``g`` in ``tau`` and ``f∘g = h`` for a fixed ``h`` in ``mu``. Only nonzero
    values of consistent triples are stored.
    """

    color_count: int
    p: Dict[Triple, int]
    schemoid: bool
    witness: Optional[Tuple[int, int, int, int, int]] = None
    inconsistent: List[Triple] = field(default_factory=list)

    def value(self, sigma: int, tau: int, mu: int) -> int:
        return self.p.get((sigma, tau, mu), 0)

    def to_frame(self) -> pd.DataFrame:
        rows = [{"sigma": s, "tau": t, "mu": m, "p": v} for (s, t, m), v in sorted(self.p.items())]
        return pd.DataFrame(rows, columns=["sigma", "tau", "mu", "p"])

    def to_json(self) -> Dict[str, Any]:
        return {
            "schemoid": self.schemoid,
            "witness": list(self.witness) if self.witness else None,
            "p": [[s, t, m, v] for (s, t, m), v in sorted(self.p.items())],
        }


@dataclass(frozen=True)
class Tameness:
    unital: bool
    tii: bool
    tiii: Optional[bool]
    witness: Optional[Any] = None

    @property
    def tame(self) -> bool:
        return self.unital and self.tiii is True

    def to_json(self) -> Dict[str, Any]:
        return {"unital": self.unital, "tii": self.tii, "tiii": self.tiii, "tame": self.tame,
                "witness": self.witness}


@dataclass(frozen=True)
class ColorQuiver:
    """Object colors, morphism colors and the source/target maps between them."""

    I0: Tuple[int, ...]
    I1: Tuple[int, ...]
    sbar: Tuple[int, ...]
    tbar: Tuple[int, ...]

    def to_json(self) -> Dict[str, Any]:
        return {"I0": list(self.I0), "I1": list(self.I1), "sbar": list(self.sbar), "tbar": list(self.tbar)}


def structure_constants(X: ColoredCategory) -> StructureConstantTable:
    """
    Count composition fibers for every color triple.

    Args:
        X: Colored category

    Returns:
        Table with the schemoid flag and, if it fails, a witness
        ``(sigma, tau, mu, f, g)`` with ``f, g`` in ``mu`` having different fibers
    """
    C = X.base
    fibers: Counter = Counter()
    for g, f in C.composable_pairs():
        fibers[(X.color_of[g], X.color_of[f], C.compose_table[(g, f)])] += 1
    pairs = sorted({(s, t) for s, t, _ in fibers})
    members = color_members(X)

    p: Dict[Triple, int] = {}
    inconsistent: List[Triple] = []
    witness = None
    for sigma, tau in pairs:
        for mu, group in enumerate(members):
            counts = [fibers.get((sigma, tau, h), 0) for h in group]
            if any(c != counts[0] for c in counts):
                inconsistent.append((sigma, tau, mu))
                if witness is None:
                    k = next(i for i, c in enumerate(counts) if c != counts[0])
                    witness = (sigma, tau, mu, group[0], group[k])
            elif counts[0]:
                p[(sigma, tau, mu)] = counts[0]
    table = StructureConstantTable(X.color_count, p, not inconsistent, witness, inconsistent)
    if inconsistent:
        logger.info(f"Not a schemoid: {len(inconsistent)} inconsistent triple(s), first {inconsistent[0]}")
    return table


def complex_product(table: StructureConstantTable, sigma: int, tau: int) -> Set[int]:
    """Colors ``mu`` with ``p(sigma, tau, mu) ≥ 1``."""
    return {m for (s, t, m) in table.p if s == sigma and t == tau}


def is_naturally_colored(X: ColoredCategory) -> Verdict:
    """
    Check that equally colored morphisms have equally colored endpoint identities.

    Returns:
        Verdict with witness ``(f, g)`` of two equally colored morphisms whose
        source or target identities carry different colors
    """
    C = X.base
    for group in color_members(X):
        first = group[0]
        for f in group[1:]:
            if (X.identity_color(C.src(f)) != X.identity_color(C.src(first))
                    or X.identity_color(C.tgt(f)) != X.identity_color(C.tgt(first))):
                return Verdict(False, (first, f))
    return Verdict(True)


def identity_classes_agree(X: ColoredCategory) -> Verdict:
    """For naturally colored ``X``: objects are related exactly when their identities share a color."""
    index = class_index(X)
    n = X.base.object_count
    for x in range(n):
        for y in range(x + 1, n):
            if (index[x] == index[y]) != (X.identity_color(x) == X.identity_color(y)):
                return Verdict(False, (x, y))
    return Verdict(True)


def _endpoint_colors(X: ColoredCategory) -> Optional[Tuple[List[int], List[int]]]:
    """Identity colors at the source and target of each color, if well defined."""
    C = X.base
    sources: List[int] = []
    targets: List[int] = []
    for group in color_members(X):
        s = {X.identity_color(C.src(f)) for f in group}
        t = {X.identity_color(C.tgt(f)) for f in group}
        if len(s) != 1 or len(t) != 1:
            return None
        sources.append(s.pop())
        targets.append(t.pop())
    return sources, targets


def tameness(X: ColoredCategory, table: Optional[StructureConstantTable] = None) -> Tameness:
    """
    Evaluate the unital condition, endpoint consistency, and unique composite colors.

    Args:
        X: Colored category
        table: Precomputed structure constants

    Returns:
        Flags; ``tiii`` is ``None`` when ``X`` is not a schemoid
    """
    C = X.base
    table = table or structure_constants(X)
    identities = set(C.identity_of)
    members = color_members(X)
    witness: Optional[Any] = None

    unital = True
    for c in identity_colors(X):
        strays = [f for f in members[c] if f not in identities]
        if strays:
            unital = False
            witness = {"condition": "unital", "color": c, "morphism": strays[0]}
            break

    endpoints = _endpoint_colors(X)
    tii = endpoints is not None
    if not table.schemoid:
        return Tameness(unital, tii, None, witness)
    if endpoints is None:
        return Tameness(unital, tii, False, witness or {"condition": "endpoints"})

    sources, targets = endpoints
    tiii = True
    for sigma in range(X.color_count):
        for tau in range(X.color_count):
            if targets[sigma] != sources[tau]:
                continue
            composites = complex_product(table, tau, sigma)
            if len(composites) != 1:
                tiii = False
                witness = witness or {"condition": "unique composite", "sigma": sigma, "tau": tau,
                                      "composites": sorted(composites)}
                break
        if not tiii:
            break
    return Tameness(unital, tii, tiii, witness)


def color_quiver(X: ColoredCategory) -> ColorQuiver:
    """
    Source and target maps on colors compatible with the coloring.

    Raises:
        PreconditionError: if ``X`` is not naturally colored
    """
    verdict = is_naturally_colored(X)
    if not verdict:
        raise PreconditionError("Color quiver needs a naturally colored category", witness=verdict.witness)
    endpoints = _endpoint_colors(X)
    assert endpoints is not None
    sources, targets = endpoints
    return ColorQuiver(tuple(identity_colors(X)), tuple(range(X.color_count)), tuple(sources), tuple(targets))


def verify_color_quiver(X: ColoredCategory, quiver: ColorQuiver) -> bool:
    """Check ``sbar∘ℓ₁ = ℓ₀∘s`` and ``tbar∘ℓ₁ = ℓ₀∘t`` on every morphism."""
    C = X.base
    return all(
        quiver.sbar[X.color_of[f]] == X.identity_color(C.src(f))
        and quiver.tbar[X.color_of[f]] == X.identity_color(C.tgt(f))
        for f in range(C.morphism_count)
    )


@dataclass(frozen=True)
class ColoredMorphismCheck:
    """Induced color map of a functor, or the color it splits."""

    color_map: Optional[Tuple[int, ...]]
    witness: Optional[Tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.color_map is not None


def check_colored_morphism(u: CategoryFunctor, X: ColoredCategory, Y: ColoredCategory) -> ColoredMorphismCheck:
    """
    Check that ``u`` sends every color of ``X`` into a single color of ``Y``.

    Raises:
        PreconditionError: if ``u`` is not a functor on the underlying categories

    Returns:
        Color map, or witness ``(sigma, f, g)`` where ``u(f)`` and ``u(g)`` differ in color
    """
    report = check_category_functor(X.base, Y.base, u)
    if not report.ok:
        raise PreconditionError("Not a functor on the underlying categories", witness=report.violations)
    color_map: List[int] = []
    for sigma, group in enumerate(color_members(X)):
        image = Y.color_of[u.morphism_map[group[0]]]
        for f in group[1:]:
            if Y.color_of[u.morphism_map[f]] != image:
                return ColoredMorphismCheck(None, (sigma, group[0], f))
        color_map.append(image)
    return ColoredMorphismCheck(tuple(color_map))


def compose_color_maps(v_map: Sequence[int], u_map: Sequence[int]) -> Tuple[int, ...]:
    """Color map of ``v∘u``."""
    return tuple(v_map[c] for c in u_map)


def binary_distance_colors(Y: ColoredCategory) -> Optional[Tuple[int, ...]]:
    """
    Distance carried by each color when ``Y`` is a binary Hamming schemoid with
    objects numbered by their binary words, else ``None``.
    """
    C = Y.base
    n = C.object_count
    if n & (n - 1) or len(set(C.morphisms)) != n * n or C.morphism_count != n * n:
        return None
    distance: Dict[int, int] = {}
    for f, (s, t) in enumerate(C.morphisms):
        d = bin(s ^ t).count("1")
        if distance.setdefault(Y.color_of[f], d) != d:
            return None
    if len(set(distance.values())) != len(distance):
        return None
    return tuple(distance[c] for c in range(Y.color_count))


def prop_app_hypotheses(u: CategoryFunctor, X: ColoredCategory, Y: ColoredCategory, tau: int,
                        distance: Optional[Sequence[int]] = None) -> bool:
    """
    Hypotheses for nonvanishing mod 2 cohomology through a map into a binary
    Hamming schemoid.

    True iff ``u`` is a colored morphism, ``u(tau)`` lies in an odd distance
    color, and ``tau`` holds an invertible morphism whose inverse is also in ``tau``.

    Args:
        distance: Hamming distance of each color of ``Y``; read off ``Y`` when omitted

    Raises:
        PreconditionError: if ``distance`` is omitted and ``Y`` is not a binary Hamming schemoid
    """
    if distance is None:
        distance = binary_distance_colors(Y)
        if distance is None:
            raise PreconditionError("Target is not a binary Hamming schemoid", witness=Y.color_count)
    try:
        check = check_colored_morphism(u, X, Y)
    except PreconditionError:
        return False
    if not check.ok or check.color_map is None:
        return False
    if distance[check.color_map[tau]] % 2 != 1:
        return False
    C = X.base
    for f in color_members(X)[tau]:
        inv = C.inverse(f)
        if inv is not None and X.color_of[inv] == tau:
            return True
    return False


def bracket_category(X: ColoredCategory) -> FiniteCategory:
    """
    Category on identity-color classes whose morphisms are the colors,
    composed by the unique composite color.

    Raises:
        PreconditionError: if ``X`` is not tame
    """
    table = structure_constants(X)
    tame = tameness(X, table)
    if not tame.tame:
        raise PreconditionError("The bracket category needs a tame schemoid", witness=tame.witness)
    endpoints = _endpoint_colors(X)
    assert endpoints is not None
    sources, targets = endpoints
    objects = identity_colors(X)
    position = {c: k for k, c in enumerate(objects)}
    morphisms = tuple((position[sources[c]], position[targets[c]]) for c in range(X.color_count))
    compose = {}
    for sigma in range(X.color_count):
        for tau in range(X.color_count):
            if targets[sigma] == sources[tau]:
                (mu,) = complex_product(table, tau, sigma)
                compose[(tau, sigma)] = mu
    return FiniteCategory(len(objects), morphisms, tuple(objects), compose)
