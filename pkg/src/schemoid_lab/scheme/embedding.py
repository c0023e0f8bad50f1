"""
Module for viewing association schemes as colored categories and comparing
their quotient category with the thin-residue factor group.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

from schemoid_lab.coloring.colored import ColoredCategory
from schemoid_lab.config import CompletionCaps
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.exceptions import StructuralError, UnsupportedError
from schemoid_lab.quotient.quotient import QuotientResult, quotient_category
from schemoid_lab.scheme.association import AssociationScheme, hamming
from schemoid_lab.scheme.residue import factor_scheme

logger = logging.getLogger(__name__)


def as_schemoid(A: AssociationScheme) -> ColoredCategory:
    """
    Codiscrete category on the points, the pair ``(x, y)`` being the unique
    arrow ``x → y`` (index ``x*n + y``), colored by the scheme.
    """
    base = FiniteCategory.from_groupoid_pairs(A.point_count)
    names = tuple(A.color_name(c) for c in range(A.color_count))
    return ColoredCategory(base, tuple(int(c) for c in A.relations.reshape(-1)), A.color_count, names)


def hamming_schemoid(n: int, q: int) -> ColoredCategory:
    return as_schemoid(hamming(n, q))


def hamming_map_morphism(l: int, q: int, n: int, images: Sequence[str]) -> CategoryFunctor:
    """
    Functor between the schemoids of H(l,q) and H(n,2) induced by a point map.

    Args:
        l: Word length of the source
        q: Alphabet size of the source
        n: Word length of the binary target
        images: Binary word of length ``n`` for every source letter, e.g. ``["010", "001", "111"]``
            for the three letters of H(1,3); source words map letter by letter when ``l > 1``

    Returns:
        Functor with object map the point map and ``(x, y) ↦ (u(x), u(y))``
    """
    if len(images) != q or any(len(w) != n or set(w) - {"0", "1"} for w in images):
        raise StructuralError(f"Need {q} binary words of length {n}", pointer="images")
    source = hamming(l, q)
    target = hamming(n * l, 2)
    target_index = {label: i for i, label in enumerate(target.point_labels or ())}
    object_map = []
    for label in source.point_labels or ():
        word = "".join(images[int(ch)] for ch in label)
        object_map.append(target_index[word])
    N, M = source.point_count, target.point_count
    morphism_map = tuple(object_map[x] * M + object_map[y] for x in range(N) for y in range(N))
    return CategoryFunctor(tuple(object_map), morphism_map)


@dataclass
class PropHReport:
    """Comparison of the quotient group with the thin-residue factor group."""

    ok: bool
    quotient_order: int
    factor_order: int
    anti_map: Dict[int, int] = field(default_factory=dict)
    iso_map: Dict[int, int] = field(default_factory=dict)
    searched: Optional[Sequence[int]] = None
    witness: Optional[Any] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "quotient_order": self.quotient_order,
            "factor_order": self.factor_order,
            "anti_map": {str(k): v for k, v in sorted(self.anti_map.items())},
            "iso_map": {str(k): v for k, v in sorted(self.iso_map.items())},
            "searched_isomorphism": list(self.searched) if self.searched is not None else None,
            "witness": self.witness,
        }


def prop_h_crosscheck(A: AssociationScheme, caps: Optional[CompletionCaps] = None,
                      quotient: Optional[QuotientResult] = None) -> PropHReport:
    """
    Compare the quotient group of ``as_schemoid(A)`` with the factor group by the thin residue.

    The map ``[sigma] ↦ sigma^T`` reverses products (composition applies the
    right factor first, the relational product the left one); composing with
    inversion gives the isomorphism ``[sigma] ↦ (sigma*)^T``. Both maps are
    checked, and an isomorphism is also searched independently.

    Raises:
        UnsupportedError: if the quotient is undecided or not a group
    """
    X = as_schemoid(A)
    Q = quotient or quotient_category(X, caps)
    if not Q.finite or Q.kind != "group":
        raise UnsupportedError(f"Quotient of {A.name} is {Q.status}/{Q.kind}, expected a finite group")
    quotient_group = Q.monoid()
    factor = factor_scheme(A)
    factor_group = factor.group(A)

    anti: Dict[int, int] = {}
    for sigma in range(A.color_count):
        element = Q.generator_image[sigma]
        image = factor.class_of_color[sigma]
        if anti.setdefault(element, image) != image:
            return PropHReport(False, quotient_group.element_count, factor_group.element_count,
                               witness={"reason": "not well defined", "color": sigma})
    if len(anti) != quotient_group.element_count:
        return PropHReport(False, quotient_group.element_count, factor_group.element_count,
                           witness={"reason": "colors do not cover the quotient"})
    iso = {k: factor_group.inverse(v) for k, v in anti.items()}
    n = quotient_group.element_count
    ok = len(set(anti.values())) == factor_group.element_count == n
    witness = None
    for g in range(n):
        for f in range(n):
            gf = quotient_group.multiply(g, f)
            if anti[gf] != factor_group.multiply(anti[f], anti[g]) or iso[gf] != factor_group.multiply(iso[g], iso[f]):
                ok = False
                witness = witness or {"reason": "product not preserved", "pair": [g, f]}
    searched = quotient_group.find_isomorphism(factor_group)
    logger.info(f"{A.name}: quotient order {n}, factor order {factor_group.element_count}, ok={ok}")
    return PropHReport(ok and searched is not None, n, factor_group.element_count,
                       anti, {k: int(v) for k, v in iso.items() if v is not None}, searched, witness)
