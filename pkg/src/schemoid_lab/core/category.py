"""
Module for finite small categories and functors between them.

Objects and morphisms are dense integer indices. Composition is stored as an
explicit table keyed by ``(g, f)`` holding the index of ``g∘f`` (apply ``f``
first).
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from schemoid_lab.core.jsonio import require
from schemoid_lab.core.report import ValidationReport
from schemoid_lab.exceptions import StructuralError

logger = logging.getLogger(__name__)

Arrow = Tuple[int, int]


@dataclass(frozen=True)
class FiniteCategory:
    """A finite category given by its full composition table."""

    object_count: int
    morphisms: Tuple[Arrow, ...]
    identity_of: Tuple[int, ...]
    compose_table: Mapping[Tuple[int, int], int] = field(repr=False)

    @property
    def morphism_count(self) -> int:
        return len(self.morphisms)

    def src(self, f: int) -> int:
        return self.morphisms[f][0]

    def tgt(self, f: int) -> int:
        return self.morphisms[f][1]

    def is_identity(self, f: int) -> bool:
        return self.identity_of[self.src(f)] == f

    def compose(self, g: int, f: int) -> int:
        """
        Return ``g∘f``.

        Raises:
            StructuralError: if the pair is not composable or missing from the table
        """
        if self.tgt(f) != self.src(g):
            raise StructuralError(f"Morphisms {g} and {f} are not composable", pointer=f"compose[{g},{f}]")
        try:
            return self.compose_table[(g, f)]
        except KeyError as e:
            raise StructuralError(f"Composite of {g} after {f} missing", pointer=f"compose[{g},{f}]") from e

    def hom(self, x: int, y: int) -> List[int]:
        """Morphisms ``x → y`` in index order."""
        return [f for f, arrow in enumerate(self.morphisms) if arrow == (x, y)]

    def outgoing(self) -> List[List[int]]:
        """Morphisms grouped by source object."""
        groups: List[List[int]] = [[] for _ in range(self.object_count)]
        for f, (s, _) in enumerate(self.morphisms):
            groups[s].append(f)
        return groups

    def composable_pairs(self) -> List[Tuple[int, int]]:
        """All pairs ``(g, f)`` with ``tgt(f) = src(g)``."""
        by_src = self.outgoing()
        return [(g, f) for f in range(self.morphism_count) for g in by_src[self.tgt(f)]]

    def inverse(self, f: int) -> Optional[int]:
        """The two-sided inverse of ``f`` or ``None``."""
        x, y = self.morphisms[f]
        for g in self.hom(y, x):
            if self.compose(g, f) == self.identity_of[x] and self.compose(f, g) == self.identity_of[y]:
                return g
        return None

    def is_invertible(self, f: int) -> bool:
        return self.inverse(f) is not None

    # Constructors

    @classmethod
    def terminal(cls) -> "FiniteCategory":
        return cls(1, ((0, 0),), (0,), {(0, 0): 0})

    @classmethod
    def from_monoid(cls, table: Sequence[Sequence[int]], identity: int = 0) -> "FiniteCategory":
        """
        One-object category of a monoid.

        Args:
            table: ``table[a][b]`` is the product ``a·b``, read as ``a∘b``
            identity: Index of the unit

        Returns:
            Category with one morphism per monoid element
        """
        n = len(table)
        compose = {(a, b): table[a][b] for a in range(n) for b in range(n)}
        return cls(1, tuple((0, 0) for _ in range(n)), (identity,), compose)

    @classmethod
    def from_preorder(cls, object_count: int, relation: Iterable[Arrow]) -> "FiniteCategory":
        """
        Thin category of the reflexive-transitive closure of ``relation``.

        Args:
            object_count: Number of objects
            relation: Pairs ``(x, y)`` meaning an arrow ``x → y``

        Returns:
            Category with at most one morphism between any two objects
        """
        reach = [[x == y for y in range(object_count)] for x in range(object_count)]
        for x, y in relation:
            reach[x][y] = True
        for k in range(object_count):
            for i in range(object_count):
                if reach[i][k]:
                    for j in range(object_count):
                        if reach[k][j]:
                            reach[i][j] = True
        arrows = [(x, y) for x in range(object_count) for y in range(object_count) if reach[x][y]]
        return cls.from_arrows(object_count, arrows)

    @classmethod
    def from_arrows(cls, object_count: int, arrows: Sequence[Arrow]) -> "FiniteCategory":
        """Thin category on a transitive reflexive set of arrows (one morphism per pair)."""
        index = {arrow: i for i, arrow in enumerate(arrows)}
        identity = tuple(index[(x, x)] for x in range(object_count))
        compose = {}
        for f, (x, y) in enumerate(arrows):
            for g, (y2, z) in enumerate(arrows):
                if y2 == y:
                    compose[(g, f)] = index[(x, z)]
        return cls(object_count, tuple(arrows), identity, compose)

    @classmethod
    def from_groupoid_pairs(cls, object_count: int) -> "FiniteCategory":
        """Codiscrete groupoid: exactly one morphism ``x → y`` with index ``x*n + y``."""
        arrows = [(x, y) for x in range(object_count) for y in range(object_count)]
        return cls.from_arrows(object_count, arrows)

    # Serialization

    def to_json(self) -> Dict[str, Any]:
        return {
            "objects": self.object_count,
            "morphisms": [{"src": s, "tgt": t} for s, t in self.morphisms],
            "identity": list(self.identity_of),
            "compose": sorted([g, f, gf] for (g, f), gf in self.compose_table.items()),
        }

    @classmethod
    def from_json(cls, payload: Any, pointer: str = "") -> "FiniteCategory":
        """
        Parse the ``category.json`` schema.

        Raises:
            StructuralError: pointing at the first malformed field
        """
        n = require(payload, "objects", int, pointer)
        raw = require(payload, "morphisms", list, pointer)
        morphisms = []
        for i, entry in enumerate(raw):
            where = f"{pointer + '.' if pointer else ''}morphisms[{i}]"
            s = require(entry, "src", int, where)
            t = require(entry, "tgt", int, where)
            if not (0 <= s < n and 0 <= t < n):
                raise StructuralError("Endpoint out of range", pointer=where)
            morphisms.append((s, t))
        identity = require(payload, "identity", list, pointer)
        if len(identity) != n or not all(isinstance(i, int) and 0 <= i < len(morphisms) for i in identity):
            raise StructuralError("Identity list must give one morphism per object", pointer="identity")
        compose = {}
        for k, triple in enumerate(require(payload, "compose", list, pointer)):
            if (not isinstance(triple, list) or len(triple) != 3
                    or not all(isinstance(v, int) and 0 <= v < len(morphisms) for v in triple)):
                raise StructuralError("Compose entries are [g, f, g∘f] index triples", pointer=f"compose[{k}]")
            compose[(triple[0], triple[1])] = triple[2]
        return cls(n, tuple(morphisms), tuple(identity), compose)


def validate_category(C: FiniteCategory) -> ValidationReport:
    """
    Check the category axioms exhaustively.

    Args:
        C: Candidate category

    Returns:
        Report naming every identity, associativity or composability violation
    """
    report = ValidationReport("category")
    m = C.morphism_count
    for x, i in enumerate(C.identity_of):
        if not 0 <= i < m:
            report.add(f"identity of object {x} is not a morphism index")
            return report
        if C.morphisms[i] != (x, x):
            report.add(f"identity {i} of object {x} has endpoints {C.morphisms[i]}")
    for f, (s, t) in enumerate(C.morphisms):
        if not (0 <= s < C.object_count and 0 <= t < C.object_count):
            report.add(f"morphism {f} has endpoint outside the object range")
            return report

    pairs = set(C.composable_pairs())
    for key, gf in C.compose_table.items():
        if key not in pairs:
            report.add(f"compose defined on non-composable pair {key}")
        elif not 0 <= gf < m or C.morphisms[gf] != (C.src(key[1]), C.tgt(key[0])):
            report.add(f"composite {key} -> {gf} has wrong endpoints")
    missing = [key for key in pairs if key not in C.compose_table]
    for key in sorted(missing):
        report.add(f"compose undefined on composable pair {key}")
    if not report.ok:
        return report

    for f, (s, t) in enumerate(C.morphisms):
        if C.compose_table[(C.identity_of[t], f)] != f:
            report.add(f"identity law fails: id_{t} after {f}")
        if C.compose_table[(f, C.identity_of[s])] != f:
            report.add(f"identity law fails: {f} after id_{s}")

    by_src = C.outgoing()
    for f in range(m):
        for g in by_src[C.tgt(f)]:
            gf = C.compose_table[(g, f)]
            for h in by_src[C.tgt(g)]:
                if C.compose_table[(h, gf)] != C.compose_table[(C.compose_table[(h, g)], f)]:
                    report.add(f"associativity fails on ({h}, {g}, {f})")
    return report


@dataclass(frozen=True)
class CategoryFunctor:
    """A functor between finite categories given by its object and morphism maps."""

    object_map: Tuple[int, ...]
    morphism_map: Tuple[int, ...]

    @classmethod
    def identity(cls, C: FiniteCategory) -> "CategoryFunctor":
        return cls(tuple(range(C.object_count)), tuple(range(C.morphism_count)))


def check_category_functor(C: FiniteCategory, D: FiniteCategory, u: CategoryFunctor) -> ValidationReport:
    """
    Check that ``u`` is a functor ``C → D``.

    Raises:
        StructuralError: if the maps do not cover every object and morphism of C
    """
    if len(u.object_map) != C.object_count:
        raise StructuralError("Object map must cover every object", pointer="object_map")
    if len(u.morphism_map) != C.morphism_count:
        raise StructuralError("Morphism map must cover every morphism", pointer="morphism_map")
    report = ValidationReport("functor")
    for f, (s, t) in enumerate(C.morphisms):
        uf = u.morphism_map[f]
        if not 0 <= uf < D.morphism_count:
            report.add(f"morphism {f} maps outside the target")
            continue
        if D.morphisms[uf] != (u.object_map[s], u.object_map[t]):
            report.add(f"morphism {f} maps to {uf} with mismatched endpoints")
    if not report.ok:
        return report
    for x in range(C.object_count):
        if u.morphism_map[C.identity_of[x]] != D.identity_of[u.object_map[x]]:
            report.add(f"identity of object {x} is not preserved")
    for (g, f), gf in C.compose_table.items():
        if u.morphism_map[gf] != D.compose(u.morphism_map[g], u.morphism_map[f]):
            report.add(f"composite of {g} after {f} is not preserved")
    return report


def compose_functors(v: CategoryFunctor, u: CategoryFunctor) -> CategoryFunctor:
    """Return ``v∘u``."""
    return CategoryFunctor(
        tuple(v.object_map[x] for x in u.object_map),
        tuple(v.morphism_map[f] for f in u.morphism_map),
    )


def find_isomorphism(C: FiniteCategory, D: FiniteCategory) -> Optional[CategoryFunctor]:
    """
    Search for an isomorphism ``C → D``.

    Objects are matched by permutation; morphisms are then matched hom-set by
    hom-set with backtracking on composition. Suitable for the small
    categories used in tests.
    """
    if C.object_count != D.object_count or C.morphism_count != D.morphism_count:
        return None
    n = C.object_count

    def hom_sizes(K: FiniteCategory) -> List[List[int]]:
        sizes = [[0] * n for _ in range(n)]
        for s, t in K.morphisms:
            sizes[s][t] += 1
        return sizes

    sc, sd = hom_sizes(C), hom_sizes(D)
    for perm in permutations(range(n)):
        if any(sc[x][y] != sd[perm[x]][perm[y]] for x in range(n) for y in range(n)):
            continue
        order = sorted(range(C.morphism_count), key=lambda f: (not C.is_identity(f), f))
        assignment: Dict[int, int] = {}
        used = set()

        def consistent(f: int) -> bool:
            for g in assignment:
                for a, b in ((g, f), (f, g)):
                    if (a, b) in C.compose_table:
                        ab = C.compose_table[(a, b)]
                        if ab in assignment and D.compose(assignment[a], assignment[b]) != assignment[ab]:
                            return False
            return True

        def extend(k: int) -> bool:
            if k == len(order):
                return True
            f = order[k]
            s, t = C.morphisms[f]
            candidates = D.hom(perm[s], perm[t])
            if C.is_identity(f):
                candidates = [D.identity_of[perm[s]]]
            for cand in candidates:
                if cand in used:
                    continue
                assignment[f] = cand
                used.add(cand)
                if consistent(f) and extend(k + 1):
                    return True
                del assignment[f]
                used.discard(cand)
            return False

        if extend(0):
            u = CategoryFunctor(tuple(perm), tuple(assignment[f] for f in range(C.morphism_count)))
            if check_category_functor(C, D, u).ok:
                return u
    return None
