"""
Module for closed subsets, the thin residue and factor schemes.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.exceptions import PreconditionError
from schemoid_lab.scheme.association import AssociationScheme, closure_colors, validate_scheme

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedSubset:
    """A set of colors containing 0, closed under adjoint and complex product."""

    colors: Tuple[int, ...]

    def __contains__(self, sigma: int) -> bool:
        return sigma in self.colors

    def to_json(self) -> List[int]:
        return list(self.colors)


def thin_residue(A: AssociationScheme) -> ClosedSubset:
    """
    Closed subset generated by every complex product ``s s*``.

    Args:
        A: Association scheme

    Returns:
        The thin residue as a sorted color tuple
    """
    seed = set()
    for s in range(A.color_count):
        seed |= A.complex_product(s, A.adjoint[s])
    T = closure_colors(A, seed)
    logger.debug(f"Thin residue of {A.name}: {sorted(T)}")
    return ClosedSubset(tuple(sorted(T)))


@dataclass
class FactorScheme:
    """Blocks ``xT`` with the induced relations ``s^T``."""

    residue: ClosedSubset
    blocks: List[List[int]]
    scheme: AssociationScheme
    class_of_color: Tuple[int, ...]
    members: List[List[int]]

    @property
    def is_thin(self) -> bool:
        return self.scheme.is_thin()

    def group(self, source: AssociationScheme) -> FiniteMonoid:
        """
        Group of a thin factor: ``s^T t^T = u^T`` whenever ``p(s, t, u) ≠ 0``,
        the product read as "first ``s`` then ``t``".

        Raises:
            PreconditionError: if the factor scheme is not thin
        """
        if not self.is_thin:
            raise PreconditionError("Factor scheme is not thin", witness=self.scheme.valencies())
        m = len(self.members)
        table = []
        for a in range(m):
            row = []
            for b in range(m):
                s, t = self.members[a][0], self.members[b][0]
                u = min(source.complex_product(s, t))
                row.append(self.class_of_color[u])
            table.append(tuple(row))
        labels = tuple("{" + ",".join(source.color_name(c) for c in group) + "}" for group in self.members)
        return FiniteMonoid(tuple(table), 0, labels)

    def to_json(self) -> Dict[str, Any]:
        return {
            "residue": self.residue.to_json(),
            "blocks": self.blocks,
            "class_of_color": list(self.class_of_color),
            "scheme": self.scheme.to_json(),
            "thin": self.is_thin,
        }


def factor_scheme(A: AssociationScheme, T: Optional[ClosedSubset] = None) -> FactorScheme:
    """
    Factor scheme ``(X/T, S//T)``.

    Args:
        A: Association scheme
        T: Closed subset; the thin residue when omitted

    Raises:
        PreconditionError: if ``T`` is not closed

    Returns:
        Blocks ordered by least point, colors ordered by least member color
        (so ``T`` itself becomes color 0)
    """
    T = T or thin_residue(A)
    if not A.is_closed(T.colors):
        raise PreconditionError("Factor scheme needs a closed subset", witness=list(T.colors))
    R = A.relations
    in_T = np.isin(R, list(T.colors))
    seen: Dict[int, int] = {}
    blocks: List[List[int]] = []
    for x in range(A.point_count):
        if x in seen:
            continue
        block = [int(y) for y in np.nonzero(in_T[x])[0]]
        for y in block:
            seen[y] = len(blocks)
        blocks.append(block)

    between: Dict[Tuple[int, int], frozenset] = {}
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            between[(i, j)] = frozenset(np.unique(R[np.ix_(bi, bj)]).tolist())
    groups = sorted(set(between.values()), key=min)
    color_index = {group: k for k, group in enumerate(groups)}
    matrix = [[color_index[between[(i, j)]] for j in range(len(blocks))] for i in range(len(blocks))]
    class_of_color = [0] * A.color_count
    for group in groups:
        for c in group:
            class_of_color[c] = color_index[group]

    factor = AssociationScheme(matrix, f"{A.name}//T",
                               color_names=["{" + ",".join(A.color_name(c) for c in sorted(g)) + "}" for g in groups])
    report = validate_scheme(factor)
    if not report.ok:
        raise PreconditionError("Factor construction did not yield a scheme", witness=report.violations)
    result = FactorScheme(T, blocks, factor, tuple(class_of_color), [sorted(g) for g in groups])
    logger.info(f"{A.name}: {len(blocks)} block(s), {len(groups)} factor color(s), thin={result.is_thin}")
    return result
