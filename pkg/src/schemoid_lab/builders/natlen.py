"""
Module for the free category on one endomorphism colored by length, and its
finite truncations.
"""

from dataclasses import dataclass
from typing import Tuple

from schemoid_lab.builders.simplicial import SimplicialComplex, simplicial_schemoid
from schemoid_lab.coloring.colored import ColoredCategory
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.exceptions import StructuralError


@dataclass(frozen=True)
class NatLenSymbol:
    """Marker for (N, len); cohomology routes it to the Koszul resolution."""

    name: str = "(N, len)"

    def to_json(self):
        return {"symbol": "natlen"}


def nat_len_symbol() -> NatLenSymbol:
    return NatLenSymbol()


def _truncation_arrows(L: int):
    return [(i, j) for i in range(L + 1) for j in range(i, L + 1)]


def nat_len_truncation(L: int) -> ColoredCategory:
    """
    The poset ``0 < 1 < ... < L`` with ``i → j`` colored by ``j - i``.

    Raises:
        StructuralError: if ``L < 0``
    """
    if L < 0:
        raise StructuralError("Truncation length must be non-negative", pointer="L")
    arrows = _truncation_arrows(L)
    base = FiniteCategory.from_arrows(L + 1, arrows)
    return ColoredCategory(base, tuple(j - i for i, j in arrows), L + 1, tuple(f"len{k}" for k in range(L + 1)))


def collapse_to_length(K: SimplicialComplex) -> Tuple[CategoryFunctor, ColoredCategory, ColoredCategory]:
    """
    Functor from the face-poset schemoid of ``K`` onto a length truncation,
    ``τ ↦ |τ|`` and ``τ ⊆ ν ↦ (|τ| → |ν|)``.

    Returns:
        ``(u, source, target)``
    """
    source = simplicial_schemoid(K)
    L = max(len(face) for face in K.faces)
    target = nat_len_truncation(L)
    index = {arrow: i for i, arrow in enumerate(_truncation_arrows(L))}
    sizes = [len(face) for face in K.faces]
    morphism_map = tuple(index[(sizes[s], sizes[t])] for s, t in source.base.morphisms)
    return CategoryFunctor(tuple(sizes), morphism_map), source, target
