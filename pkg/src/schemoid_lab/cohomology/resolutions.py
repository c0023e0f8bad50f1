"""
Module for coefficient modules and the cochain complexes computing their cohomology.

Cochains live on chains of composable non-identity morphisms ``(f1, ..., fk)``
listed in application order; a cochain takes values in ``M`` at the target of
``fk``.  With ``x0`` as source the differential is

    (δc)(f1..f(k+1)) = M(f(k+1)) c(f1..fk)
                       + Σ_j (-1)^(k+1-j) c(.., f(j+1)∘fj, ..)
                       + (-1)^(k+1) c(f2..f(k+1))

which for a group is the inhomogeneous bar differential.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from schemoid_lab.cohomology.complexes import AbelianGroup, CochainComplex, CohomologyGroups, cochain_cohomology
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.core.report import ValidationReport
from schemoid_lab.exceptions import PreconditionError, StructuralError

logger = logging.getLogger(__name__)

Chain = Tuple[int, ...]


def _matrix(values, rank: int) -> np.ndarray:
    return np.asarray(values, dtype=np.int64).reshape(rank, rank)


@dataclass(frozen=True)
class CategoryModule:
    """Functor to free abelian groups: ``Z^ranks[x]`` per object, an integer matrix per morphism."""

    ranks: Tuple[int, ...]
    matrices: Tuple[np.ndarray, ...]

    @classmethod
    def constant(cls, C: FiniteCategory, rank: int = 1) -> "CategoryModule":
        eye = np.eye(rank, dtype=np.int64)
        return cls(tuple([rank] * C.object_count), tuple(eye for _ in range(C.morphism_count)))

    def validate(self, C: FiniteCategory) -> ValidationReport:
        report = ValidationReport("category module")
        if len(self.ranks) != C.object_count or len(self.matrices) != C.morphism_count:
            report.add("ranks/matrices do not match the category")
            return report
        for f, (s, t) in enumerate(C.morphisms):
            if self.matrices[f].shape != (self.ranks[t], self.ranks[s]):
                report.add(f"matrix of morphism {f} has shape {self.matrices[f].shape}")
        if not report.ok:
            return report
        for x, idx in enumerate(C.identity_of):
            if not np.array_equal(self.matrices[idx], np.eye(self.ranks[x], dtype=np.int64)):
                report.add(f"identity of object {x} does not act as the identity")
        for (g, f), gf in C.compose_table.items():
            if not np.array_equal(self.matrices[gf], self.matrices[g] @ self.matrices[f]):
                report.add(f"M({g}∘{f}) ≠ M({g})·M({f})")
        return report


@dataclass(frozen=True)
class MonoidModule:
    """
    Left module ``Z^rank`` over a finite monoid, one action matrix per element.

    ``action[a∘b] = action[a] @ action[b]`` with ``a∘b = monoid.table[a][b]``.
    """

    monoid: FiniteMonoid
    rank: int
    action: Tuple[np.ndarray, ...]

    @classmethod
    def trivial(cls, G: FiniteMonoid, rank: int = 1) -> "MonoidModule":
        eye = np.eye(rank, dtype=np.int64)
        return cls(G, rank, tuple(eye for _ in range(G.element_count)))

    @classmethod
    def from_generator(cls, n: int, generator) -> "MonoidModule":
        """
        Module over ``Z/n`` where element ``a`` acts as ``T^a``.

        Raises:
            PreconditionError: if ``T^n`` is not the identity
        """
        T = np.asarray(generator, dtype=np.int64)
        rank = T.shape[0]
        powers = [np.eye(rank, dtype=np.int64)]
        for _ in range(n):
            powers.append(powers[-1] @ T)
        if not np.array_equal(powers[n], powers[0]):
            raise PreconditionError(f"Generator action does not have order dividing {n}", witness=T.tolist())
        return cls(FiniteMonoid.cyclic(n), rank, tuple(powers[:n]))

    @classmethod
    def sign(cls, n: int) -> "MonoidModule":
        """``Z`` with the generator of ``Z/n`` acting as ``-1``; needs ``n`` even."""
        if n % 2:
            raise PreconditionError("The sign module needs a cyclic group of even order", witness=n)
        return cls.from_generator(n, [[-1]])

    def validate(self) -> ValidationReport:
        return self.as_category_module().validate(self.monoid.as_category())

    def as_category_module(self) -> CategoryModule:
        return CategoryModule((self.rank,), tuple(self.action))

    def to_json(self):
        return {"rank": self.rank, "action": [a.tolist() for a in self.action]}

    @classmethod
    def from_json(cls, payload, G: FiniteMonoid, pointer: str = "module") -> "MonoidModule":
        try:
            rank = int(payload["rank"])
            action = tuple(_matrix(a, rank) for a in payload["action"])
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"Malformed module: {exc}", pointer=pointer) from exc
        if len(action) != G.element_count:
            raise StructuralError("Need one action matrix per element", pointer=f"{pointer}/action")
        return cls(G, rank, action)


def nondegenerate_chains(C: FiniteCategory, k: int) -> List[Chain]:
    """Composable chains of ``k`` non-identity morphisms in application order; objects for ``k = 0``."""
    if k == 0:
        return [(x,) for x in range(C.object_count)]
    out_of: Dict[int, List[int]] = {}
    for f in range(C.morphism_count):
        if not C.is_identity(f):
            out_of.setdefault(C.src(f), []).append(f)
    chains: List[Chain] = [(f,) for x in range(C.object_count) for f in out_of.get(x, [])]
    for _ in range(k - 1):
        chains = [c + (g,) for c in chains for g in out_of.get(C.tgt(c[-1]), [])]
    return chains


def _layout(C: FiniteCategory, M: CategoryModule, k: int) -> Tuple[Dict[Chain, int], int]:
    """Offsets of the cochain blocks in degree ``k``."""
    offsets: Dict[Chain, int] = {}
    total = 0
    for chain in nondegenerate_chains(C, k):
        target = chain[0] if k == 0 else C.tgt(chain[-1])
        offsets[chain] = total
        total += M.ranks[target]
    return offsets, total


def nerve_cochain_complex(C: FiniteCategory, M: CategoryModule, max_degree: int) -> CochainComplex:
    """
    Normalized cochain complex of ``C`` with coefficients in ``M``.

    Args:
        C: Finite category
        M: Coefficient functor to free abelian groups
        max_degree: Builds ``d^0, ..., d^max_degree``

    Returns:
        CochainComplex whose cohomology is exact through ``max_degree``
    """
    if max_degree < 0:
        raise PreconditionError("Degree bound must be non-negative", witness=max_degree)
    report = M.validate(C)
    if not report.ok:
        raise PreconditionError("Coefficients are not a functor", witness=report.violations)
    layouts = [_layout(C, M, k) for k in range(max_degree + 2)]
    differentials = []
    for k in range(max_degree + 1):
        cols_at, cols = layouts[k]
        rows_at, rows = layouts[k + 1]
        d = np.zeros((rows, cols), dtype=np.int64)
        for chain, row in rows_at.items():
            last = chain[-1]
            r = M.ranks[C.tgt(last)]
            head = chain[:-1] if k else (C.src(last),)
            c0 = cols_at[head]
            d[row:row + r, c0:c0 + M.ranks[C.src(last)]] += M.matrices[last]
            for j in range(k):
                merged = C.compose(chain[j + 1], chain[j])
                if C.is_identity(merged):
                    continue
                face = chain[:j] + (merged,) + chain[j + 2:]
                c = cols_at[face]
                d[row:row + r, c:c + r] += (-1) ** (k - j) * np.eye(r, dtype=np.int64)
            tail = chain[1:] if k else (C.tgt(last),)
            c = cols_at[tail]
            d[row:row + r, c:c + r] += (-1) ** (k + 1) * np.eye(r, dtype=np.int64)
        differentials.append(d)
    logger.debug(f"Nerve complex dims: {[layouts[k][1] for k in range(max_degree + 2)]}")
    return CochainComplex(differentials)


def bar_cochain_complex(G: FiniteMonoid, M: MonoidModule, max_degree: int) -> CochainComplex:
    """Normalized inhomogeneous bar complex of a finite monoid."""
    return nerve_cochain_complex(G.as_category(), M.as_category_module(), max_degree)


def cyclic_cohomology(n: int, M: MonoidModule, max_degree: int) -> CohomologyGroups:
    """
    Cohomology of ``Z/n`` from the periodic resolution.

    The complex is ``M →(t-1) M →(1+t+…+t^(n-1)) M →(t-1) M → …``.

    Raises:
        PreconditionError: if ``n < 2`` or ``M`` is not a module over ``Z/n``
    """
    if n < 2:
        raise PreconditionError("Periodic resolution needs n ≥ 2", witness=n)
    if M.monoid.element_count != n:
        raise PreconditionError("Module is not over Z/n", witness=M.monoid.element_count)
    T = M.action[1 % n]
    eye = np.eye(M.rank, dtype=np.int64)
    norm = sum((M.action[i] for i in range(n)), np.zeros_like(eye))
    differentials = [T - eye if k % 2 == 0 else norm for k in range(max_degree + 1)]
    return cochain_cohomology(CochainComplex(differentials), max_degree)


@dataclass
class KoszulExt:
    """``Ext^0``, ``Ext^1`` over the free monoid on one generator; higher groups vanish."""

    ext0: AbelianGroup
    ext1: AbelianGroup
    augmentation: int

    def groups(self, max_degree: int) -> CohomologyGroups:
        padded = [self.ext0, self.ext1] + [AbelianGroup()] * max(0, max_degree - 1)
        return CohomologyGroups(padded[:max_degree + 1])

    def to_json(self):
        return {"ext0": self.ext0.to_json(), "ext1": self.ext1.to_json(),
                "augmentation": self.augmentation, "higher_vanish_from": 2}


def koszul_ext(augmentation: int, action) -> KoszulExt:
    """
    Ext over ``Z[σ]`` from the two-term Koszul resolution.

    Args:
        augmentation: ``0`` for ``σ ↦ 0`` or ``1`` for ``σ ↦ 1``
        action: Square integer matrix of ``σ`` on ``M``

    Returns:
        ``ker δ`` and ``coker δ`` for ``δ = action - augmentation·I``
    """
    if augmentation not in (0, 1):
        raise PreconditionError("Augmentation must send σ to 0 or 1", witness=augmentation)
    S = np.atleast_2d(np.asarray(action, dtype=np.int64))
    if S.shape[0] != S.shape[1]:
        raise StructuralError("Action must be a square matrix", pointer="action")
    delta = S - augmentation * np.eye(S.shape[0], dtype=np.int64)
    groups = cochain_cohomology(CochainComplex([delta]), 1)
    return KoszulExt(groups[0], groups[1], augmentation)


def restrict_module(C: FiniteCategory, u: CategoryFunctor, M: CategoryModule) -> CategoryModule:
    """Inverse image ``u*M = M∘u`` on ``C``."""
    ranks = tuple(M.ranks[u.object_map[x]] for x in range(C.object_count))
    return CategoryModule(ranks, tuple(M.matrices[u.morphism_map[f]] for f in range(C.morphism_count)))


def cochain_pullback(C: FiniteCategory, D: FiniteCategory, u: CategoryFunctor,
                     M: CategoryModule, degree: int) -> np.ndarray:
    """
    Degree-``k`` component of the cochain map ``C^k(D; M) → C^k(C; u*M)``.

    Chains whose image is degenerate get the zero row block.
    """
    pulled = restrict_module(C, u, M)
    rows_at, rows = _layout(C, pulled, degree)
    cols_at, cols = _layout(D, M, degree)
    P = np.zeros((rows, cols), dtype=np.int64)
    for chain, row in rows_at.items():
        if degree == 0:
            image: Optional[Chain] = (u.object_map[chain[0]],)
            r = pulled.ranks[chain[0]]
        else:
            image = tuple(u.morphism_map[f] for f in chain)
            r = pulled.ranks[C.tgt(chain[-1])]
            if any(D.is_identity(g) for g in image):
                continue
        col = cols_at[image]
        P[row:row + r, col:col + r] = np.eye(r, dtype=np.int64)
    return P
