"""
Module for association schemes given by relation matrices.

Color 0 is always the diagonal. Intersection numbers are read off products of
0/1 adjacency matrices: ``p(sigma, tau, mu)`` is the number of ``z`` with
``(x, z)`` in ``sigma`` and ``(z, y)`` in ``tau`` for ``(x, y)`` in ``mu``.
"""

import logging
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
import pandas as pd

from schemoid_lab.config import max_points
from schemoid_lab.core.jsonio import require, require_int, require_label
from schemoid_lab.core.monoid import FiniteMonoid
from schemoid_lab.core.report import ValidationReport
from schemoid_lab.exceptions import PreconditionError, StructuralError

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


class AssociationScheme:
    """A partition of ``X × X`` into relations given as a matrix of color indices."""

    def __init__(self, relations: Any, name: Optional[str] = None,
                 point_labels: Optional[Sequence[str]] = None,
                 color_names: Optional[Sequence[str]] = None):
        """
        Initialize the scheme.

        Args:
            relations: Square integer matrix; entry ``[x, y]`` is the color of ``(x, y)``
            name: Display name such as ``H(2,2)``
            point_labels: Optional point names
            color_names: Optional color names
        """
        matrix = np.asarray(relations, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise StructuralError("Relation matrix must be square and nonempty", pointer="relations")
        if matrix.min() < 0:
            raise StructuralError("Colors are nonnegative", pointer="relations")
        self.relations = matrix
        self.name = name or f"scheme({matrix.shape[0]})"
        self.point_labels = tuple(point_labels) if point_labels is not None else None
        self.color_names = tuple(color_names) if color_names is not None else None

    def __repr__(self) -> str:
        return f"AssociationScheme({self.name}, points={self.point_count}, colors={self.color_count})"

    @property
    def point_count(self) -> int:
        return int(self.relations.shape[0])

    @property
    def color_count(self) -> int:
        return int(self.relations.max()) + 1

    def color_name(self, sigma: int) -> str:
        return self.color_names[sigma] if self.color_names else f"s{sigma}"

    def adjacency(self, sigma: int) -> np.ndarray:
        """0/1 integer adjacency matrix of a color."""
        return (self.relations == sigma).astype(np.int64)

    @cached_property
    def adjoint(self) -> Tuple[int, ...]:
        """``sigma*`` read off the first pair of each color (validate checks consistency)."""
        out = []
        transposed = self.relations.T
        for sigma in range(self.color_count):
            xs, ys = np.nonzero(self.relations == sigma)
            out.append(int(transposed[xs[0], ys[0]]) if len(xs) else sigma)
        return tuple(out)

    @cached_property
    def _intersection(self) -> Tuple[Dict[Triple, int], List[Triple]]:
        p: Dict[Triple, int] = {}
        inconsistent: List[Triple] = []
        masks = [self.relations == mu for mu in range(self.color_count)]
        adj = [self.adjacency(s) for s in range(self.color_count)]
        for sigma in range(self.color_count):
            for tau in range(self.color_count):
                prod = adj[sigma] @ adj[tau]
                for mu, mask in enumerate(masks):
                    values = np.unique(prod[mask])
                    if len(values) > 1:
                        inconsistent.append((sigma, tau, mu))
                    elif len(values) == 1 and values[0]:
                        p[(sigma, tau, mu)] = int(values[0])
        return p, inconsistent

    @property
    def intersection_numbers(self) -> Dict[Triple, int]:
        """Nonzero ``p(sigma, tau, mu)`` for consistent triples."""
        return self._intersection[0]

    def p(self, sigma: int, tau: int, mu: int) -> int:
        return self.intersection_numbers.get((sigma, tau, mu), 0)

    def valencies(self) -> List[int]:
        return [int(v) for v in np.bincount(self.relations[0], minlength=self.color_count)]

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.relations, self.relations.T))

    def is_commutative(self) -> bool:
        return all(self.p(t, s, m) == v for (s, t, m), v in self.intersection_numbers.items())

    def is_thin(self) -> bool:
        return all(v == 1 for v in self.valencies())

    def complex_product(self, sigma: int, tau: int) -> Set[int]:
        """Colors met by composing a ``sigma`` pair with a ``tau`` pair."""
        return {m for (s, t, m) in self.intersection_numbers if s == sigma and t == tau}

    def is_closed(self, colors: Iterable[int]) -> bool:
        """Contains 0 and is closed under adjoint and complex product."""
        T = set(colors)
        if 0 not in T or any(self.adjoint[s] not in T for s in T):
            return False
        return all(self.complex_product(s, t) <= T for s in T for t in T)

    def intersection_frame(self) -> pd.DataFrame:
        rows = [{"sigma": s, "tau": t, "mu": m, "p": v} for (s, t, m), v in sorted(self.intersection_numbers.items())]
        return pd.DataFrame(rows, columns=["sigma", "tau", "mu", "p"])

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "points": self.point_count,
            "relations": self.relations.tolist(),
            "adjoint": list(self.adjoint),
            "name": self.name,
        }
        if self.point_labels:
            payload["point_labels"] = list(self.point_labels)
        return payload

    @classmethod
    def from_json(cls, payload: Any) -> "AssociationScheme":
        n = require(payload, "points", int)
        rows = require(payload, "relations", list)
        if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise StructuralError(f"Relations must be a {n}x{n} matrix", pointer="relations")
        matrix = [[require_int(v, f"relations/{i}/{j}") for j, v in enumerate(row)] for i, row in enumerate(rows)]
        labels = payload.get("point_labels")
        if labels is not None:
            if not isinstance(labels, list) or len(labels) != n:
                raise StructuralError(f"point_labels must list {n} labels", pointer="point_labels")
            labels = [require_label(v, f"point_labels/{i}") for i, v in enumerate(labels)]
        scheme = cls(matrix, payload.get("name"), labels)
        declared = payload.get("adjoint")
        if declared is not None and (not isinstance(declared, list) or declared != list(scheme.adjoint)):
            raise StructuralError("Declared adjoint disagrees with the relation matrix", pointer="adjoint")
        return scheme


def validate_scheme(A: AssociationScheme) -> ValidationReport:
    """
    Check the association scheme axioms by brute force.

    Returns:
        Report of diagonal, partition, adjoint and intersection number violations
    """
    report = ValidationReport(f"association scheme {A.name}")
    R = A.relations
    n = A.point_count
    if not np.all(np.diag(R) == 0):
        report.add("diagonal is not exactly color 0")
    off = R[~np.eye(n, dtype=bool)]
    if np.any(off == 0):
        report.add("color 0 appears off the diagonal")
    missing = sorted(set(range(A.color_count)) - set(np.unique(R).tolist()))
    if missing:
        report.add(f"colors {missing} are empty")
    for sigma in range(A.color_count):
        images = np.unique(R.T[R == sigma])
        if len(images) > 1:
            report.add(f"reversed pairs of color {sigma} fall into colors {images.tolist()}")
    for triple in A._intersection[1]:
        report.add(f"intersection number {triple} is not constant")
    return report


def standard_representation_check(A: AssociationScheme) -> ValidationReport:
    """Verify ``A_sigma A_tau = sum_mu p(sigma, tau, mu) A_mu`` over the integers."""
    report = ValidationReport(f"standard representation {A.name}")
    adj = [A.adjacency(s) for s in range(A.color_count)]
    for sigma, tau in product(range(A.color_count), repeat=2):
        expected = np.zeros_like(adj[0])
        for mu in range(A.color_count):
            expected += A.p(sigma, tau, mu) * adj[mu]
        if not np.array_equal(adj[sigma] @ adj[tau], expected):
            report.add(f"A_{sigma} A_{tau} differs from its expansion")
    return report


def _guard(points: int, what: str) -> None:
    limit = max_points()
    if points > limit:
        raise StructuralError(f"{what} has {points} points, above the limit {limit}", pointer="SCHEMOID_LAB_MAX_POINTS")


def hamming(n: int, q: int) -> AssociationScheme:
    """
    Hamming scheme: words of length ``n`` over ``q`` letters, colored by distance.

    Raises:
        StructuralError: for ``n < 1``, ``q < 2`` or too many points
    """
    if n < 1 or q < 2:
        raise StructuralError("Hamming scheme needs n >= 1 and q >= 2", pointer="n,q")
    _guard(q ** n, f"H({n},{q})")
    coords = np.array(list(product(range(q), repeat=n)), dtype=np.int64)
    distance = (coords[:, None, :] != coords[None, :, :]).sum(axis=2)
    labels = ["".join(str(v) for v in row) for row in coords]
    logger.info(f"Built H({n},{q}) on {len(labels)} points")
    return AssociationScheme(distance, f"H({n},{q})", labels, [f"s{i}" for i in range(n + 1)])


def johnson(v: int, d: int) -> AssociationScheme:
    """
    Johnson scheme: ``d``-subsets of a ``v``-set, ``R_i`` when they share ``d - i`` elements.

    Raises:
        StructuralError: unless ``1 <= d <= v/2``
    """
    if d < 1 or 2 * d > v:
        raise StructuralError("Johnson scheme needs 1 <= d <= v/2", pointer="v,d")
    _guard(comb(v, d), f"J({v},{d})")
    subsets = [frozenset(c) for c in combinations(range(v), d)]
    matrix = [[d - len(x & y) for y in subsets] for x in subsets]
    labels = ["{" + ",".join(str(i + 1) for i in sorted(x)) + "}" for x in subsets]
    return AssociationScheme(matrix, f"J({v},{d})", labels, [f"R{i}" for i in range(d + 1)])


def group_scheme(G: FiniteMonoid, name: Optional[str] = None) -> AssociationScheme:
    """
    Thin scheme of a finite group: ``(x, y)`` has color ``g`` iff ``x⁻¹y = g``.
    The identity element gets color 0, the others follow in element order.

    Raises:
        PreconditionError: if the table is not a group
    """
    if not G.is_group:
        raise PreconditionError("Group scheme needs a group", witness=[a for a in range(G.element_count) if G.inverse(a) is None])
    order = [G.identity] + [a for a in range(G.element_count) if a != G.identity]
    color = {g: k for k, g in enumerate(order)}
    n = G.element_count
    inv = [G.inverse(x) for x in range(n)]
    matrix = [[color[G.multiply(inv[x], y)] for y in range(n)] for x in range(n)]
    labels = [G.label(a) for a in range(n)]
    return AssociationScheme(matrix, name or f"group({n})", labels, [G.label(g) for g in order])


def builtin_schemes(max_size: int = 36) -> Dict[str, AssociationScheme]:
    """
    Named schemes used by the acceptance rows: Hamming H(n,q) with q ≤ 6,
    Johnson J(v,d) with v ≤ 8, and the group schemes of Z2, Z3, Z4, Z2xZ2, S3,
    all with at most ``max_size`` points.
    """
    out: Dict[str, AssociationScheme] = {}
    for q in range(2, 7):
        n = 1
        while q ** n <= max_size:
            out[f"H({n},{q})"] = hamming(n, q)
            n += 1
    for v in range(2, 9):
        for d in range(1, v // 2 + 1):
            if comb(v, d) <= max_size:
                out[f"J({v},{d})"] = johnson(v, d)
    for name in ("Z2", "Z3", "Z4", "Z2xZ2", "S3"):
        G = FiniteMonoid.named(name)
        if G.element_count <= max_size:
            out[name] = group_scheme(G, name)
    return out


def scheme_from_spec(spec: Sequence[str]) -> AssociationScheme:
    """
    Build a scheme from CLI-style words: ``hamming n q``, ``johnson v d``,
    ``group NAME`` or ``group TABLE`` with ``TABLE`` a JSON multiplication table.

    Raises:
        StructuralError: for unknown generators or bad arguments
        PreconditionError: if a group table is not a group
    """
    if not spec:
        raise StructuralError("Missing scheme generator", pointer="gen")
    kind, args = spec[0].lower(), list(spec[1:])
    try:
        if kind == "hamming" and len(args) == 2:
            return hamming(int(args[0]), int(args[1]))
        if kind == "johnson" and len(args) == 2:
            return johnson(int(args[0]), int(args[1]))
    except ValueError as e:
        raise StructuralError(f"Generator arguments must be integers: {args}", pointer="gen") from e
    if kind == "group" and len(args) == 1:
        is_table = args[0].lstrip().startswith(("[", "{"))
        return group_scheme(FiniteMonoid.parse(args[0]), None if is_table else args[0])
    raise StructuralError(f"Unknown scheme generator {' '.join(spec)}", pointer="gen")


def closure_colors(A: AssociationScheme, seed: Iterable[int]) -> FrozenSet[int]:
    """Least closed subset containing ``seed``."""
    T = set(seed) | {0}
    while True:
        grown = set(T)
        grown.update(A.adjoint[s] for s in T)
        for s in T:
            for t in T:
                grown |= A.complex_product(s, t)
        if grown == T:
            return frozenset(T)
        T = grown
