"""
Module for color-preserving functors on a colored category and the
sheafification ``π*π_*`` through its quotient category.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from schemoid_lab.coloring.colored import ColoredCategory, Verdict, class_index
from schemoid_lab.config import CompletionCaps
from schemoid_lab.core.functors import NaturalTransformation, SetFunctor, restrict_functor
from schemoid_lab.exceptions import PreconditionError
from schemoid_lab.quotient.quotient import QuotientResult, pi_functor, quotient_category
from schemoid_lab.topos.limits import comma_positions, kan_pushforward, parse_family

logger = logging.getLogger(__name__)


def is_color_preserving(X: ColoredCategory, F: SetFunctor) -> Verdict:
    """
    ``F(f) = F(g)`` as functions whenever ``f`` and ``g`` share a color.

    Returns:
        Verdict with witness ``(f, g)``, the first member of the color and an offending morphism
    """
    first: Dict[int, int] = {}
    for f, sigma in enumerate(X.color_of):
        g = first.setdefault(sigma, f)
        if g != f and dict(F.morphism_maps[f]) != dict(F.morphism_maps[g]):
            return Verdict(False, (g, f))
    return Verdict(True)


@dataclass
class SharpTransformation:
    """A natural transformation with its locally-constant and sharp flags."""

    transformation: NaturalTransformation
    locally_constant: bool
    sharp: bool
    witness: Optional[Any] = None

    def to_json(self) -> Dict[str, Any]:
        return {"locally_constant": self.locally_constant, "sharp": self.sharp, "witness": self.witness}


def classify_transformation(X: ColoredCategory, F: SetFunctor, G: SetFunctor,
                            eta: NaturalTransformation) -> SharpTransformation:
    """
    Flags of ``eta : F ⇒ G``.

    Locally constant: ``eta_x = eta_y`` whenever ``id_x`` and ``id_y`` share a color.
    Sharp: ``eta_x = eta_y`` whenever ``x`` and ``y`` are in the same object class.
    """
    classes = class_index(X)
    comps = [dict(c) for c in eta.components]
    n = X.base.object_count
    locally_constant, sharp, witness = True, True, None
    for x in range(n):
        for y in range(x + 1, n):
            if comps[x] == comps[y]:
                continue
            if X.identity_color(x) == X.identity_color(y):
                locally_constant = False
                witness = witness or ("locally constant", x, y)
            if classes[x] == classes[y]:
                sharp = False
                witness = witness or ("sharp", x, y)
    return SharpTransformation(eta, locally_constant, sharp, witness)


def _quotient(X: ColoredCategory, Q: Optional[QuotientResult], caps: Optional[CompletionCaps]) -> QuotientResult:
    Q = Q or quotient_category(X, caps)
    Q.require_finite()
    return Q


def transport_theta(X: ColoredCategory, F: SetFunctor, Q: Optional[QuotientResult] = None,
                    caps: Optional[CompletionCaps] = None) -> SetFunctor:
    """
    The functor on the quotient with ``[x] ↦ F(x)`` and ``[sigma] ↦ F(f)`` for any ``f`` in ``sigma``.

    Raises:
        PreconditionError: if ``F`` is not color-preserving
        UndecidedError: if the quotient is not finite
    """
    verdict = is_color_preserving(X, F)
    if not verdict:
        raise PreconditionError("Transport needs a color-preserving functor", witness=verdict.witness)
    Q = _quotient(X, Q, caps)
    category = Q.category
    classes = Q.object_classes or class_index(X)
    representative: Dict[int, int] = {}
    for x, c in enumerate(classes):
        representative.setdefault(c, x)
    sets = tuple(F.object_sets[representative[q]] for q in range(category.object_count))
    generator_maps = [F.morphism_maps[X.members(sigma)[0]] for sigma in range(X.color_count)]
    maps = []
    for source, word in Q.elements:
        m = {a: a for a in sets[source]}
        for sigma in word:
            m = {a: generator_maps[sigma][b] for a, b in m.items()}
        maps.append(m)
    return SetFunctor(sets, tuple(maps))


def sheafify(X: ColoredCategory, F: SetFunctor, Q: Optional[QuotientResult] = None,
             caps: Optional[CompletionCaps] = None) -> SetFunctor:
    """
    ``π*π_*F``: right Kan extension along the projection to the quotient, pulled back.

    Raises:
        UndecidedError: if the quotient is not finite
    """
    Q = _quotient(X, Q, caps)
    pi = pi_functor(X, Q)
    pushed = kan_pushforward(X.base, Q.category, pi, F)
    result = restrict_functor(X.base, pi, pushed)
    logger.info(f"Sheafified value sizes: {[len(s) for s in result.object_sets]}")
    return result


def sheafify_counit(X: ColoredCategory, G: SetFunctor, Q: Optional[QuotientResult] = None,
                    caps: Optional[CompletionCaps] = None) -> NaturalTransformation:
    """``π*π_*G ⇒ G``: the component at ``x`` reads the entry at ``(x, id)``."""
    Q = _quotient(X, Q, caps)
    pi = pi_functor(X, Q)
    sheaf = sheafify(X, G, Q)
    components: List[Dict[str, str]] = []
    for x in range(X.base.object_count):
        q = pi.object_map[x]
        position = comma_positions(Q.category, pi, X.base, q)[(x, Q.category.identity_of[q])]
        components.append({label: parse_family(label)[position] for label in sheaf.object_sets[x]})
    return NaturalTransformation(tuple(components))


def sheafify_unit(X: ColoredCategory, F: SetFunctor, Q: Optional[QuotientResult] = None,
                  caps: Optional[CompletionCaps] = None) -> NaturalTransformation:
    """
    ``F ⇒ π*π_*F`` for color-preserving ``F``: ``a ↦ (θF(m)(a))`` over the comma objects ``(y, m)``.

    Raises:
        PreconditionError: if ``F`` is not color-preserving
    """
    Q = _quotient(X, Q, caps)
    pi = pi_functor(X, Q)
    theta = transport_theta(X, F, Q)
    components: List[Dict[str, str]] = []
    for x in range(X.base.object_count):
        q = pi.object_map[x]
        commas = comma_positions(Q.category, pi, X.base, q)
        components.append({
            a: "[" + ",".join(theta.apply(m, a) for _, m in commas) + "]"
            for a in F.object_sets[x]
        })
    return NaturalTransformation(tuple(components))
