"""
Module for category presentations by generators and relations.

A word is a tuple of generator indices in application order: ``(a, b)``
means first ``a`` then ``b``, i.e. the composite ``b∘a``.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from schemoid_lab.coloring.colored import ColoredCategory, class_index, color_members, object_classes
from schemoid_lab.coloring.predicates import StructureConstantTable
from schemoid_lab.exceptions import StructuralError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Relation = Tuple[Word, Word]


@dataclass(frozen=True)
class CategoryPresentation:
    """Generators with endpoint objects, relations between typed words, and identity generators."""

    object_count: int
    generators: Tuple[Tuple[int, int], ...]
    relations: Tuple[Relation, ...]
    identity_generators: Tuple[int, ...] = ()
    names: Optional[Tuple[str, ...]] = None

    def name(self, g: int) -> str:
        return self.names[g] if self.names else f"g{g}"

    def endpoints(self, word: Word) -> Optional[Tuple[int, int]]:
        """``(source, target)`` of a composable nonempty word, ``None`` if ill-typed or empty."""
        if not word:
            return None
        for a, b in zip(word, word[1:]):
            if self.generators[a][1] != self.generators[b][0]:
                return None
        return self.generators[word[0]][0], self.generators[word[-1]][1]

    def is_typed(self, relation: Relation) -> bool:
        """Both sides composable with matching endpoints; an empty side needs an endo word."""
        left, right = relation
        el, er = self.endpoints(left), self.endpoints(right)
        if left and el is None or right and er is None:
            return False
        if left and right:
            return el == er
        ends = el or er
        return ends is None or ends[0] == ends[1]

    def render(self, word: Word) -> str:
        return "·".join(self.name(g) for g in reversed(word)) if word else "1"

    def to_json(self) -> Dict[str, Any]:
        return {
            "objects": self.object_count,
            "generators": [{"src": s, "tgt": t, "name": self.name(g)} for g, (s, t) in enumerate(self.generators)],
            "relations": [[list(a), list(b)] for a, b in self.relations],
            "identity_generators": list(self.identity_generators),
        }


def build_presentation(X: ColoredCategory) -> CategoryPresentation:
    """
    Presentation of the quotient category of a colored category.

    One generator per color on object classes; a relation ``(tau, mu) ~ (sigma)``
    whenever some ``l`` in ``mu`` after ``k`` in ``tau`` lies in ``sigma``; a
    relation between identity colors of related objects; and every color
    containing an identity is declared equal to the identity.

    Args:
        X: Colored category

    Returns:
        Presentation with deterministic (sorted) relations
    """
    C = X.base
    classes = object_classes(X)
    index = class_index(X)
    members = color_members(X)
    generators = tuple((index[C.src(group[0])], index[C.tgt(group[0])]) for group in members)

    relations: Set[Relation] = set()
    for g, f in C.composable_pairs():
        relations.add(((X.color_of[f], X.color_of[g]), (X.color_of[C.compose_table[(g, f)]],)))

    identity_gens = sorted({X.color_of[i] for i in C.identity_of})
    for block in classes:
        colors = sorted({X.identity_color(x) for x in block})
        for sigma in colors[1:]:
            relations.add(((sigma,), (colors[0],)))
    for sigma in identity_gens:
        relations.add(((sigma,), ()))

    presentation = CategoryPresentation(len(classes), generators, (), tuple(identity_gens), X.color_names)
    typed: List[Relation] = []
    for relation in sorted(relations):
        if presentation.is_typed(relation):
            typed.append(relation)
        else:
            logger.warning(f"Skipping ill-typed relation {relation}")
    logger.info(f"Presentation: {len(classes)} object(s), {len(generators)} generator(s), {len(typed)} relation(s)")
    return CategoryPresentation(len(classes), generators, tuple(typed), tuple(identity_gens), X.color_names)


def monoid_presentation_from_constants(table: StructureConstantTable,
                                       identity_generators: Sequence[int]) -> CategoryPresentation:
    """
    One-object presentation ``⟨colors | tau·sigma = mu whenever p(sigma, tau, mu) ≠ 0⟩``
    (first ``tau`` then ``sigma``) with identity colors set to the identity.
    """
    relations: Set[Relation] = {((tau, sigma), (mu,)) for (sigma, tau, mu) in table.p}
    relations.update(((sigma,), ()) for sigma in identity_generators)
    generators = tuple((0, 0) for _ in range(table.color_count))
    return CategoryPresentation(1, generators, tuple(sorted(relations)), tuple(sorted(identity_generators)))


def one_object_presentation(generator_count: int, relations: Sequence[Relation],
                            names: Optional[Sequence[str]] = None) -> CategoryPresentation:
    """Monoid presentation on ``generator_count`` letters."""
    for k, (left, right) in enumerate(relations):
        if any(not 0 <= g < generator_count for g in left + right):
            raise StructuralError("Relation uses an unknown generator", pointer=f"relations[{k}]")
    return CategoryPresentation(
        1,
        tuple((0, 0) for _ in range(generator_count)),
        tuple(sorted({(tuple(a), tuple(b)) for a, b in relations})),
        (),
        tuple(names) if names is not None else None,
    )
