"""
Module for finite monoids and groups given by multiplication tables.
"""

import json
import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from schemoid_lab.core.category import FiniteCategory
from schemoid_lab.core.jsonio import require_int, require_label
from schemoid_lab.core.report import ValidationReport
from schemoid_lab.exceptions import PreconditionError, StructuralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteMonoid:
    """
    A finite monoid. ``table[a][b]`` is the product ``a·b``; when the monoid
    comes from a category the product is composition ``a∘b``.
    """

    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise StructuralError("A monoid has at least one element", pointer="table")
        if any(len(row) != n or any(not 0 <= v < n for v in row) for row in self.table):
            raise StructuralError("Multiplication table must be square with entries in range", pointer="table")
        if not 0 <= self.identity < n:
            raise StructuralError("Identity out of range", pointer="identity")

    @property
    def element_count(self) -> int:
        return len(self.table)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def inverse(self, a: int) -> Optional[int]:
        for b in range(self.element_count):
            if self.table[a][b] == self.identity and self.table[b][a] == self.identity:
                return b
        return None

    @property
    def is_group(self) -> bool:
        return all(self.inverse(a) is not None for a in range(self.element_count))

    @property
    def is_commutative(self) -> bool:
        n = self.element_count
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def order(self, a: int) -> Optional[int]:
        """Least ``k ≥ 1`` with ``a^k = 1``; ``None`` if no power of ``a`` is the identity."""
        power = a
        for k in range(1, self.element_count + 1):
            if power == self.identity:
                return k
            power = self.table[power][a]
        return None

    def validate(self) -> ValidationReport:
        """Check identity laws and associativity."""
        report = ValidationReport("monoid")
        n, t, e = self.element_count, self.table, self.identity
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                report.add(f"identity law fails at {a}")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        report.add(f"associativity fails on ({a}, {b}, {c})")
        return report

    def as_category(self) -> FiniteCategory:
        return FiniteCategory.from_monoid(self.table, self.identity)

    def opposite(self) -> "FiniteMonoid":
        n = self.element_count
        return FiniteMonoid(tuple(tuple(self.table[b][a] for b in range(n)) for a in range(n)), self.identity, self.labels)

    def relabel(self, perm: Sequence[int]) -> "FiniteMonoid":
        """Isomorphic copy where old element ``a`` becomes ``perm[a]``."""
        n = self.element_count
        inv = [0] * n
        for a, pa in enumerate(perm):
            inv[pa] = a
        table = tuple(tuple(perm[self.table[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
        labels = tuple(self.label(inv[x]) for x in range(n)) if self.labels else None
        return FiniteMonoid(table, perm[self.identity], labels)

    def find_isomorphism(self, other: "FiniteMonoid") -> Optional[Tuple[int, ...]]:
        """
        Exhaustive search for an isomorphism onto ``other``.

        Returns:
            Tuple ``phi`` with ``phi[a]`` the image of ``a``, or ``None``
        """
        n = self.element_count
        if n != other.element_count:
            return None
        if sorted(self._order_profile()) != sorted(other._order_profile()):
            return None
        mine = [a for a in range(n) if a != self.identity]
        theirs = [b for b in range(n) if b != other.identity]
        for perm in permutations(theirs):
            phi = [0] * n
            phi[self.identity] = other.identity
            for a, b in zip(mine, perm):
                phi[a] = b
            if all(phi[self.table[a][b]] == other.table[phi[a]][phi[b]] for a in range(n) for b in range(n)):
                return tuple(phi)
        return None

    def _order_profile(self) -> List[int]:
        return [self.order(a) or 0 for a in range(self.element_count)]

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"table": [list(row) for row in self.table], "identity": self.identity}
        if self.labels:
            payload["labels"] = list(self.labels)
        return payload

    # Named constructors

    @classmethod
    def trivial(cls) -> "FiniteMonoid":
        return cls(((0,),), 0, ("e",))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteMonoid":
        """The cyclic group ℤ/n with elements ``0..n-1``."""
        if n < 1:
            raise StructuralError("Cyclic group order must be positive", pointer="n")
        return cls(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)

    @classmethod
    def symmetric(cls, k: int) -> "FiniteMonoid":
        """Symmetric group on ``k`` letters; elements in lexicographic order, product ``(a∘b)(i) = a(b(i))``."""
        perms = list(permutations(range(k)))
        index = {p: i for i, p in enumerate(perms)}
        table = tuple(tuple(index[tuple(a[b[i]] for i in range(k))] for b in perms) for a in perms)
        labels = tuple("".join(str(v + 1) for v in p) for p in perms)
        return cls(table, 0, labels)

    @classmethod
    def direct_product(cls, left: "FiniteMonoid", right: "FiniteMonoid") -> "FiniteMonoid":
        """Element ``(a, b)`` has index ``a * |right| + b``."""
        m = right.element_count
        n = left.element_count * m
        table = tuple(
            tuple(left.table[x // m][y // m] * m + right.table[x % m][y % m] for y in range(n))
            for x in range(n)
        )
        labels = tuple(f"({left.label(x // m)},{right.label(x % m)})" for x in range(n))
        return cls(table, left.identity * m + right.identity, labels)

    @classmethod
    def klein(cls) -> "FiniteMonoid":
        return cls.direct_product(cls.cyclic(2), cls.cyclic(2))

    @classmethod
    def named(cls, name: str) -> "FiniteMonoid":
        """
        Look up a group by short name: ``trivial``, ``z<n>``, ``z2xz2``/``klein``, ``s3``.

        Raises:
            StructuralError: for unknown names
        """
        key = name.lower().replace("/", "").replace("×", "x")
        if key in ("trivial", "z1", "1"):
            return cls.trivial()
        if key in ("klein", "z2xz2", "v4"):
            return cls.klein()
        if key.startswith("s") and key[1:].isdigit():
            return cls.symmetric(int(key[1:]))
        if key.startswith("z") and key[1:].isdigit():
            return cls.cyclic(int(key[1:]))
        raise StructuralError(f"Unknown group name '{name}'", pointer="group")

    @classmethod
    def from_json(cls, payload: Any) -> "FiniteMonoid":
        if not isinstance(payload, dict) or not isinstance(payload.get("table"), list):
            raise StructuralError("Monoid needs a 'table' list", pointer="table")
        labels = payload.get("labels")
        if labels is not None and not isinstance(labels, list):
            raise StructuralError("'labels' must be a list", pointer="labels")
        return cls(
            _table_rows(payload["table"]),
            require_int(payload.get("identity", 0), "identity"),
            tuple(require_label(v, f"labels/{i}") for i, v in enumerate(labels)) if labels else None,
        )

    @classmethod
    def from_table(cls, rows: Any) -> "FiniteMonoid":
        """
        Monoid from a bare multiplication table; the identity is found in it.

        Raises:
            StructuralError: if the table is not a square integer matrix
            PreconditionError: if no element is a two-sided identity
        """
        table = _table_rows(rows)
        n = len(table)
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                return cls(table, e)
        raise PreconditionError("Multiplication table has no identity element", witness=[list(r) for r in table])

    @classmethod
    def parse(cls, text: str) -> "FiniteMonoid":
        """
        Group name (see ``named``) or a JSON multiplication table, either a list
        of rows or ``{"table": ..., "identity": ...}``.

        Raises:
            StructuralError: for unknown names or malformed tables
            PreconditionError: if a table has no identity or is not associative
        """
        text = text.strip()
        if not text.startswith(("[", "{")):
            return cls.named(text)
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise StructuralError(f"Invalid group table: {e.msg}", pointer="group") from e
        monoid = cls.from_table(payload) if isinstance(payload, list) else cls.from_json(payload)
        report = monoid.validate()
        if not report.ok:
            raise PreconditionError(f"Not a monoid table: {report.violations[0]}", witness=report.violations)
        return monoid


def _table_rows(rows: Any) -> Tuple[Tuple[int, ...], ...]:
    if not isinstance(rows, list) or not rows or any(not isinstance(row, list) or len(row) != len(rows) for row in rows):
        raise StructuralError("Multiplication table must be a nonempty square list of rows", pointer="table")
    return tuple(tuple(require_int(v, f"table/{i}/{j}") for j, v in enumerate(row)) for i, row in enumerate(rows))
