"""
Module for finite limits and colimits of Set-valued functors, right Kan
extension along a functor, and brute-force enumeration of functors and
natural transformations.
"""

import logging
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.core.functors import NaturalTransformation, SetFunctor, check_functor
from schemoid_lab.exceptions import PreconditionError

logger = logging.getLogger(__name__)

CommaObject = Tuple[int, int]


def objectwise_pullback(C: FiniteCategory, F: SetFunctor, G: SetFunctor,
                        alpha: NaturalTransformation,
                        beta: NaturalTransformation) -> Tuple[SetFunctor, NaturalTransformation, NaturalTransformation]:
    """
    Pointwise fiber product of ``alpha : F ⇒ H`` and ``beta : G ⇒ H``.

    Returns:
        ``(P, p1, p2)`` with elements labelled ``"(a,b)"``
    """
    sets: List[Tuple[str, ...]] = []
    pairs: List[Dict[str, Tuple[str, str]]] = []
    for x in range(C.object_count):
        fiber = {f"({a},{b})": (a, b)
                 for a in F.object_sets[x] for b in G.object_sets[x]
                 if alpha.components[x][a] == beta.components[x][b]}
        sets.append(tuple(fiber))
        pairs.append(fiber)
    maps = []
    for f, (s, _) in enumerate(C.morphisms):
        maps.append({label: f"({F.apply(f, a)},{G.apply(f, b)})" for label, (a, b) in pairs[s].items()})
    P = SetFunctor(tuple(sets), tuple(maps))
    p1 = NaturalTransformation(tuple({label: a for label, (a, _) in fiber.items()} for fiber in pairs))
    p2 = NaturalTransformation(tuple({label: b for label, (_, b) in fiber.items()} for fiber in pairs))
    return P, p1, p2


def coproduct(C: FiniteCategory, F: SetFunctor, G: SetFunctor) -> Tuple[SetFunctor, NaturalTransformation, NaturalTransformation]:
    """
    Objectwise disjoint union with labels ``inl(a)`` and ``inr(b)``.

    Returns:
        ``(S, i1, i2)``
    """
    sets = tuple(tuple(f"inl({a})" for a in F.object_sets[x]) + tuple(f"inr({b})" for b in G.object_sets[x])
                 for x in range(C.object_count))
    maps = []
    for f in range(C.morphism_count):
        m = {f"inl({a})": f"inl({b})" for a, b in F.morphism_maps[f].items()}
        m.update({f"inr({a})": f"inr({b})" for a, b in G.morphism_maps[f].items()})
        maps.append(m)
    i1 = NaturalTransformation(tuple({a: f"inl({a})" for a in F.object_sets[x]} for x in range(C.object_count)))
    i2 = NaturalTransformation(tuple({b: f"inr({b})" for b in G.object_sets[x]} for x in range(C.object_count)))
    return SetFunctor(sets, tuple(maps)), i1, i2


def comma_objects(Q: FiniteCategory, pi: CategoryFunctor, C: FiniteCategory, q: int) -> List[CommaObject]:
    """Objects ``(x, m : q → π(x))`` of the comma category ``q ↓ π``."""
    return [(x, m) for x in range(C.object_count) for m in Q.hom(q, pi.object_map[x])]


def _limit(Q: FiniteCategory, pi: CategoryFunctor, C: FiniteCategory, G: SetFunctor,
           objects: List[CommaObject]) -> List[Tuple[str, ...]]:
    """Compatible families over the comma category, by backtracking in object order."""
    position = {obj: i for i, obj in enumerate(objects)}
    # constraints (i, f, j): G(f) applied to entry i must equal entry j
    constraints: List[List[Tuple[int, int, int]]] = [[] for _ in objects]
    outgoing = C.outgoing()
    for i, (x, m) in enumerate(objects):
        for f in outgoing[x]:
            j = position[(C.tgt(f), Q.compose(pi.morphism_map[f], m))]
            constraints[max(i, j)].append((i, f, j))
    families: List[Tuple[str, ...]] = []
    chosen: List[str] = []

    def extend(k: int) -> None:
        if k == len(objects):
            families.append(tuple(chosen))
            return
        for a in G.object_sets[objects[k][0]]:
            chosen.append(a)
            if all(G.apply(f, chosen[i]) == chosen[j] for i, f, j in constraints[k]):
                extend(k + 1)
            chosen.pop()

    extend(0)
    return families


def _family_label(family: Sequence[str]) -> str:
    return "[" + ",".join(family) + "]"


def kan_pushforward(C: FiniteCategory, Q: FiniteCategory, pi: CategoryFunctor, G: SetFunctor) -> SetFunctor:
    """
    Right Kan extension of ``G`` along ``pi : C → Q``.

    ``(π_*G)(q)`` is the limit of ``G`` over ``q ↓ π``: families indexed by the
    comma objects, labelled ``"[a1,a2,...]"`` in comma-object order. An empty
    comma category gives the one-point set ``"[]"``.

    Raises:
        PreconditionError: if ``G`` is not a functor on ``C``
    """
    report = check_functor(C, G)
    if not report.ok:
        raise PreconditionError("Kan extension needs a functor", witness=report.violations)
    commas = [comma_objects(Q, pi, C, q) for q in range(Q.object_count)]
    values = [_limit(Q, pi, C, G, commas[q]) for q in range(Q.object_count)]
    sets = tuple(tuple(_family_label(fam) for fam in values[q]) for q in range(Q.object_count))
    maps = []
    for n, (q, q2) in enumerate(Q.morphisms):
        source_pos = {obj: i for i, obj in enumerate(commas[q])}
        m = {}
        for fam in values[q]:
            image = [fam[source_pos[(x, Q.compose(m2, n))]] for x, m2 in commas[q2]]
            m[_family_label(fam)] = _family_label(image)
        maps.append(m)
    logger.debug(f"Kan extension sizes: {[len(s) for s in sets]}")
    return SetFunctor(sets, tuple(maps))


def comma_positions(Q: FiniteCategory, pi: CategoryFunctor, C: FiniteCategory, q: int) -> Dict[CommaObject, int]:
    return {obj: i for i, obj in enumerate(comma_objects(Q, pi, C, q))}


def parse_family(label: str) -> List[str]:
    """Inverse of the family labels written by ``kan_pushforward``."""
    inner = label[1:-1]
    if not inner:
        return []
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(inner):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    parts.append(inner[start:])
    return parts


def enumerate_functors(C: FiniteCategory, max_size: int) -> Iterator[SetFunctor]:
    """
    Every functor ``C → Sets`` whose value at each object is ``{"0", .., "k-1"}`` with ``k ≤ max_size``.
    """
    non_identity = [f for f in range(C.morphism_count) if not C.is_identity(f)]
    for sizes in product(range(max_size + 1), repeat=C.object_count):
        sets = tuple(tuple(str(i) for i in range(k)) for k in sizes)
        choices = [list(product(sets[C.tgt(f)], repeat=sizes[C.src(f)])) for f in non_identity]
        for combo in product(*choices):
            maps: List[Dict[str, str]] = [dict() for _ in range(C.morphism_count)]
            for x, i in enumerate(C.identity_of):
                maps[i] = {a: a for a in sets[x]}
            for f, images in zip(non_identity, combo):
                maps[f] = dict(zip(sets[C.src(f)], images))
            F = SetFunctor(sets, tuple(maps))
            if check_functor(C, F).ok:
                yield F


def transformations(C: FiniteCategory, F: SetFunctor, G: SetFunctor,
                    sharp_classes: Optional[Sequence[int]] = None) -> Iterator[NaturalTransformation]:
    """
    Every natural transformation ``F ⇒ G``; with ``sharp_classes`` only those
    whose components agree on objects of the same class.
    """
    n = C.object_count
    checks: List[List[int]] = [[] for _ in range(n)]
    for f, (s, t) in enumerate(C.morphisms):
        checks[max(s, t)].append(f)
    components: List[Dict[str, str]] = []

    def extend(x: int) -> Iterator[NaturalTransformation]:
        if x == n:
            yield NaturalTransformation(tuple(dict(c) for c in components))
            return
        domain = F.object_sets[x]
        if sharp_classes is not None:
            earlier = [y for y in range(x) if sharp_classes[y] == sharp_classes[x]]
            if earlier:
                candidates = [components[earlier[0]]] if F.object_sets[earlier[0]] == domain else []
                candidates = [c for c in candidates if set(c.values()) <= set(G.object_sets[x])]
            else:
                candidates = [dict(zip(domain, images)) for images in product(G.object_sets[x], repeat=len(domain))]
        else:
            candidates = [dict(zip(domain, images)) for images in product(G.object_sets[x], repeat=len(domain))]
        for comp in candidates:
            components.append(comp)
            if all(G.apply(f, components[C.src(f)][a]) == components[C.tgt(f)][F.apply(f, a)]
                   for f in checks[x] for a in F.object_sets[C.src(f)]):
                yield from extend(x + 1)
            components.pop()

    yield from extend(0)


def hom_count(C: FiniteCategory, F: SetFunctor, G: SetFunctor,
              sharp_classes: Optional[Sequence[int]] = None) -> int:
    """Number of natural transformations ``F ⇒ G`` (sharp ones when classes are given)."""
    return sum(1 for _ in transformations(C, F, G, sharp_classes))
