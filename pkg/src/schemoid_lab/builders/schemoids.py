"""
Module for the standard colored categories built from categories, groups and schemes.
"""

import logging

from schemoid_lab.coloring.colored import ColoredCategory
from schemoid_lab.core.category import FiniteCategory
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import PreconditionError
from schemoid_lab.scheme.association import johnson
from schemoid_lab.scheme.embedding import as_schemoid, hamming_schemoid

logger = logging.getLogger(__name__)

__all__ = ["discrete_schemoid", "group_schemoid", "hamming_schemoid", "johnson_schemoid"]


def discrete_schemoid(C: FiniteCategory) -> ColoredCategory:
    """Every morphism in its own color."""
    return ColoredCategory(C, tuple(range(C.morphism_count)), C.morphism_count)


def group_schemoid(G: FiniteMonoid) -> ColoredCategory:
    """
    Codiscrete category on the elements of ``G`` with ``x → y`` colored by ``y x⁻¹``.

    Args:
        G: Finite group

    Raises:
        PreconditionError: if ``G`` is not a group

    Returns:
        Colored category whose color ``k`` is the ``k``-th element of ``G``
        after moving the identity to the front
    """
    if not G.is_group:
        raise PreconditionError("Group schemoid needs a group", witness=G.table)
    n = G.element_count
    order = [G.identity] + [a for a in range(n) if a != G.identity]
    color = {a: k for k, a in enumerate(order)}
    colors = []
    for x in range(n):
        x_inv = G.inverse(x)
        for y in range(n):
            colors.append(color[G.multiply(y, x_inv)])
    names = tuple(G.label(a) for a in order)
    logger.debug(f"Group schemoid on {n} elements")
    return ColoredCategory(FiniteCategory.from_groupoid_pairs(n), tuple(colors), n, names)


def johnson_schemoid(v: int, d: int) -> ColoredCategory:
    return as_schemoid(johnson(v, d))
