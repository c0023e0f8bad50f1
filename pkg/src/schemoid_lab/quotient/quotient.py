"""
Module for the quotient category of a colored category.

Normal forms of a complete rewrite system are enumerated breadth-first per
source object; the finite result is returned as a FiniteCategory whose
composition is concatenation followed by reduction.
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from schemoid_lab.coloring.colored import ColoredCategory, Verdict, class_index, identity_colors
from schemoid_lab.coloring.predicates import bracket_category
from schemoid_lab.config import CompletionCaps, default_caps
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory, check_category_functor
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import PreconditionError, UndecidedError
from schemoid_lab.monitoring.metrics import QUOTIENT_DURATION
from schemoid_lab.quotient.presentation import CategoryPresentation, Word, build_presentation
from schemoid_lab.quotient.rewriting import RewriteSystem, complete, find_subword, shortlex_key

logger = logging.getLogger(__name__)

Element = Tuple[int, Word]


def normal_forms(presentation: CategoryPresentation, system: RewriteSystem,
                 caps: Optional[CompletionCaps] = None) -> Optional[Dict[Tuple[int, int], List[Word]]]:
    """
    Enumerate irreducible words per hom-set.

    Args:
        presentation: Presentation the system was completed from
        system: Rewrite system (should be complete)
        caps: ``max_elements`` bounds the words enumerated per source object

    Returns:
        Map ``(source, target)`` to shortlex-sorted normal forms, or ``None``
        when some source object exceeds the element cap
    """
    caps = caps or system.caps
    out: Dict[Tuple[int, int], List[Word]] = {}
    by_src: List[List[int]] = [[] for _ in range(presentation.object_count)]
    for g, (s, _) in enumerate(presentation.generators):
        by_src[s].append(g)
    lefts = [left for left, _ in system.rules]

    for x in range(presentation.object_count):
        frontier: List[Tuple[Word, int]] = [((), x)]
        count = 0
        while frontier:
            next_frontier: List[Tuple[Word, int]] = []
            for word, target in frontier:
                count += 1
                if count > caps.max_elements:
                    logger.warning(f"More than {caps.max_elements} normal forms out of object {x}")
                    return None
                out.setdefault((x, target), []).append(word)
                for g in by_src[target]:
                    candidate = word + (g,)
                    # only a suffix can be newly reducible
                    if not any(len(left) <= len(candidate) and candidate[-len(left):] == left for left in lefts):
                        next_frontier.append((candidate, presentation.generators[g][1]))
            frontier = next_frontier
    for key in out:
        out[key].sort(key=shortlex_key)
    return out


@dataclass
class QuotientResult:
    """Finite quotient category or the undecided rewrite system."""

    status: str
    presentation: CategoryPresentation
    system: RewriteSystem
    category: Optional[FiniteCategory] = None
    elements: List[Element] = field(default_factory=list)
    generator_image: Tuple[int, ...] = ()
    object_classes: Tuple[int, ...] = ()
    kind: Optional[str] = None

    @property
    def finite(self) -> bool:
        return self.status == "finite"

    @property
    def order(self) -> int:
        """Number of morphisms of the finite quotient."""
        return self.require_finite().morphism_count

    def require_finite(self) -> FiniteCategory:
        if self.category is None:
            raise UndecidedError("Quotient category was not decided within caps", partial=self.system)
        return self.category

    def monoid(self) -> FiniteMonoid:
        """
        Endomorphism monoid of a one-object quotient, ``table[g][f] = g∘f``.

        Raises:
            PreconditionError: if the quotient has more than one object
        """
        Q = self.require_finite()
        if Q.object_count != 1:
            raise PreconditionError("Quotient has more than one object", witness=Q.object_count)
        n = Q.morphism_count
        table = tuple(tuple(Q.compose_table[(g, f)] for f in range(n)) for g in range(n))
        labels = tuple(self.presentation.render(word) for _, word in self.elements)
        return FiniteMonoid(table, Q.identity_of[0], labels)

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"status": self.status, "kind": self.kind}
        if self.category is None:
            payload["rewrite_system"] = self.system.to_json()
            return payload
        Q = self.category
        homsets = []
        for x in range(Q.object_count):
            for y in range(Q.object_count):
                members = Q.hom(x, y)
                if members:
                    homsets.append({"src": x, "tgt": y, "elements": [list(self.elements[f][1]) for f in members]})
        payload.update({
            "objects": Q.object_count,
            "order": Q.morphism_count,
            "homsets": homsets,
            "generator_image": list(self.generator_image),
            "rules": [[list(a), list(b)] for a, b in self.system.rules],
        })
        if Q.object_count == 1:
            payload["multiplication_table"] = [list(row) for row in self.monoid().table]
        return payload


def category_from_normal_forms(presentation: CategoryPresentation, system: RewriteSystem,
                               forms: Dict[Tuple[int, int], List[Word]]) -> Tuple[FiniteCategory, List[Element]]:
    """Build the finite category whose morphisms are normal forms."""
    elements: List[Element] = []
    arrows: List[Tuple[int, int]] = []
    for (x, y) in sorted(forms):
        for word in forms[(x, y)]:
            elements.append((x, word))
            arrows.append((x, y))
    index = {element: i for i, element in enumerate(elements)}
    identity = tuple(index[(x, ())] for x in range(presentation.object_count))
    by_src: Dict[int, List[int]] = {}
    for i, (x, _) in enumerate(arrows):
        by_src.setdefault(x, []).append(i)
    compose = {}
    for f, (x, y) in enumerate(arrows):
        for g in by_src.get(y, []):
            composite = system.reduce(elements[f][1] + elements[g][1])
            compose[(g, f)] = index[(x, composite)]
    return FiniteCategory(presentation.object_count, tuple(arrows), identity, compose), elements


def quotient_of_presentation(presentation: CategoryPresentation,
                             caps: Optional[CompletionCaps] = None) -> QuotientResult:
    """Complete a presentation and, if possible, enumerate the finite category it presents."""
    caps = caps or default_caps()
    system = complete(presentation, caps)
    if not system.complete:
        return QuotientResult("undecided", presentation, system)
    forms = normal_forms(presentation, system, caps)
    if forms is None:
        return QuotientResult("undecided", presentation, system)
    category, elements = category_from_normal_forms(presentation, system, forms)
    index = {element: i for i, element in enumerate(elements)}
    images = tuple(index[(s, system.reduce((g,)))] for g, (s, _) in enumerate(presentation.generators))
    if category.object_count == 1:
        kind = "group" if all(category.is_invertible(f) for f in range(category.morphism_count)) else "monoid"
    else:
        kind = "category"
    return QuotientResult("finite", presentation, system, category, elements, images, (), kind)


def quotient_category(X: ColoredCategory, caps: Optional[CompletionCaps] = None) -> QuotientResult:
    """
    Quotient category of a colored category.

    Args:
        X: Colored category
        caps: Completion and enumeration caps

    Returns:
        Finite result with kind ``group``/``monoid``/``category``, or undecided
    """
    start = time.time()
    result = quotient_of_presentation(build_presentation(X), caps)
    result.object_classes = class_index(X)
    QUOTIENT_DURATION.observe(time.time() - start)
    if result.finite:
        logger.info(f"Quotient is a finite {result.kind} with {result.order} morphism(s)")
    else:
        logger.info("Quotient undecided within caps")
    return result


def pi_functor(X: ColoredCategory, Q: QuotientResult) -> CategoryFunctor:
    """
    The projection ``x ↦ [x]``, ``f ↦ [color of f]``.

    Raises:
        UndecidedError: if the quotient is not finite
    """
    Q.require_finite()
    classes = Q.object_classes or class_index(X)
    return CategoryFunctor(tuple(classes), tuple(Q.generator_image[c] for c in X.color_of))


def compare_bracket_quotient(X: ColoredCategory, Q: Optional[QuotientResult] = None) -> Verdict:
    """
    Check that ``[x] ↦ [x]``, ``sigma ↦ sigma`` is an isomorphism from the
    bracket category of a tame schemoid onto its quotient category.

    Returns:
        Verdict whose witness is the functor on success or a description on failure
    """
    bracket = bracket_category(X)
    Q = Q or quotient_category(X)
    target = Q.require_finite()
    classes = Q.object_classes or class_index(X)
    colors = identity_colors(X)
    object_map = []
    for c in colors:
        x = next(x for x in range(X.base.object_count) if X.identity_color(x) == c)
        object_map.append(classes[x])
    u = CategoryFunctor(tuple(object_map), tuple(Q.generator_image))
    report = check_category_functor(bracket, target, u)
    if not report.ok:
        return Verdict(False, {"violations": report.violations})
    if (sorted(u.morphism_map) != list(range(target.morphism_count))
            or sorted(u.object_map) != list(range(target.object_count))):
        return Verdict(False, {"reason": "not bijective", "morphism_map": list(u.morphism_map)})
    return Verdict(True, u)


def element_orders(monoid: FiniteMonoid) -> Dict[int, Optional[int]]:
    """Order of every element (``None`` for non-invertible elements of a monoid)."""
    return {a: monoid.order(a) for a in range(monoid.element_count)}


def _typed_words(presentation: CategoryPresentation, max_weight: int,
                 weights: Sequence[int]) -> List[Element]:
    """All composable words of total weight ≤ ``max_weight`` with their source object."""
    by_src: List[List[int]] = [[] for _ in range(presentation.object_count)]
    for g, (s, _) in enumerate(presentation.generators):
        if weights[g] > 0:
            by_src[s].append(g)
    words: List[Element] = []
    for x in range(presentation.object_count):
        stack: List[Tuple[Word, int, int]] = [((), x, 0)]
        while stack:
            word, target, weight = stack.pop()
            words.append((x, word))
            for g in by_src[target]:
                if weight + weights[g] <= max_weight:
                    stack.append((word + (g,), presentation.generators[g][1], weight + weights[g]))
    return words


def congruence_closure(presentation: CategoryPresentation, length_cap: int,
                       weights: Optional[Sequence[int]] = None,
                       erase_identities: bool = False) -> Dict[Element, Element]:
    """
    Bounded brute-force word problem: union every pair of words of weight
    ≤ ``length_cap`` related by one relation applied in context.

    Args:
        presentation: Presentation
        length_cap: Weight bound on words
        weights: Weight per generator (default 1 each)
        erase_identities: Drop identity generators from words and relations first

    Returns:
        Map from each enumerated word to its class representative
    """
    n = len(presentation.generators)
    weights = list(weights) if weights is not None else [1] * n
    relations = list(presentation.relations)
    if erase_identities:
        erased = set(presentation.identity_generators)
        weights = [0 if g in erased else w for g, w in enumerate(weights)]
        relations = [(tuple(g for g in a if g not in erased), tuple(g for g in b if g not in erased))
                     for a, b in relations]
        relations = [(a, b) for a, b in relations if a != b]
    words = _typed_words(presentation, length_cap, weights)
    known = set(words)
    uf = UnionFind(words)
    both_ways = relations + [(b, a) for a, b in relations]
    for x, word in words:
        for left, right in both_ways:
            if not left:
                continue
            start = find_subword(word, left)
            while start >= 0:
                other = (x, word[:start] + right + word[start + len(left):])
                if other in known:
                    uf.union((x, word), other)
                nxt = find_subword(word[start + 1:], left)
                start = start + 1 + nxt if nxt >= 0 else -1
    return {w: uf[w] for w in words}


def growth_series(presentation: CategoryPresentation, letters: Sequence[int], max_length: int,
                  weights: Optional[Sequence[int]] = None) -> List[int]:
    """
    Number of distinct elements represented by words of length ``L`` in ``letters``,
    for ``L = 0..max_length``.

    Identity generators are erased. Exact when every relation preserves the
    total weight, e.g. commutation presentations and face-poset presentations
    weighted by face size with unit-weight ``letters``.
    """
    classes = congruence_closure(presentation, max_length, weights, erase_identities=True)
    series = []
    letter_set = set(letters)
    for length in range(max_length + 1):
        reps = set()
        for x in range(presentation.object_count):
            for word in product(sorted(letter_set), repeat=length):
                key = (x, tuple(word))
                if key in classes:
                    reps.add(classes[key])
        series.append(len(reps))
    return series
