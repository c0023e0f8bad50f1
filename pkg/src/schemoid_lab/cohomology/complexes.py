"""
Module for cochain complexes of free abelian groups and their cohomology.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from schemoid_lab.cohomology.smith import as_int_matrix, invariant_factors, rank_mod_p
from schemoid_lab.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank`` plus cyclic torsion summands in divisibility order."""

    rank: int = 0
    torsion: Tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> Dict[str, Any]:
        return {"rank": self.rank, "torsion": list(self.torsion)}


@dataclass
class CohomologyGroups:
    """``H^0, ..., H^N`` of a complex."""

    groups: List[AbelianGroup] = field(default_factory=list)

    def __getitem__(self, k: int) -> AbelianGroup:
        return self.groups[k]

    def __len__(self) -> int:
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def __str__(self) -> str:
        return ", ".join(f"H^{k} = {g}" for k, g in enumerate(self.groups))

    def to_json(self) -> List[Dict[str, Any]]:
        return [g.to_json() for g in self.groups]


@dataclass
class CochainComplex:
    """
    ``C^0 → C^1 → ...`` with ``differentials[k]`` of shape ``(dim C^{k+1}, dim C^k)``.
    """

    differentials: List[np.ndarray]

    @property
    def dims(self) -> List[int]:
        if not self.differentials:
            return []
        return [d.shape[1] for d in self.differentials] + [self.differentials[-1].shape[0]]

    def check(self) -> None:
        """
        Raises:
            PreconditionError: if some ``d^{k+1} d^k`` is nonzero; the witness is ``k``
        """
        for k in range(len(self.differentials) - 1):
            left, right = self.differentials[k + 1], self.differentials[k]
            if left.shape[1] != right.shape[0]:
                raise PreconditionError(f"Shapes of d^{k + 1} and d^{k} do not chain", witness=k)
            if left.size == 0 or right.size == 0:
                continue
            product = _matmul(left, right)
            if np.any(product != 0):
                raise PreconditionError(f"d^{k + 1} d^{k} is not zero", witness=k)


def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        return np.dot(a.astype(object), b.astype(object))
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * max(a.shape[1], 1)
    if bound < 2 ** 62:
        return a @ b
    return np.dot(a.astype(object), b.astype(object))


def as_complex(differentials: Sequence[Any]) -> CochainComplex:
    """Coerce nested lists to a complex; empty entries keep their declared shape."""
    mats: List[np.ndarray] = []
    for k, d in enumerate(differentials):
        array = as_int_matrix(d)
        if array.size == 0 and k:
            array = np.zeros((array.shape[0], mats[k - 1].shape[0]), dtype=np.int64)
        mats.append(array)
    return CochainComplex(mats)


def cochain_cohomology(complex_: Any, max_degree: Optional[int] = None) -> CohomologyGroups:
    """
    Cohomology ``H^k = ker d^k / im d^{k-1}`` from Smith normal forms.

    Args:
        complex_: CochainComplex or a list of matrices ``d^0, d^1, ...``
        max_degree: Highest degree to report. Defaults to the last cochain group,
            with ``d`` taken to be zero past the list

    Raises:
        PreconditionError: if ``d∘d ≠ 0`` somewhere (witness is the failing ``k``)

    Returns:
        CohomologyGroups with one entry per degree
    """
    C = complex_ if isinstance(complex_, CochainComplex) else as_complex(complex_)
    C.check()
    dims = C.dims
    top = len(dims) - 1 if max_degree is None else max_degree
    if top >= len(dims):
        raise PreconditionError(f"Complex stops at degree {len(dims) - 1}", witness=top)
    factors = [invariant_factors(d) for d in C.differentials]
    groups = []
    for k in range(top + 1):
        rank_out = len(factors[k]) if k < len(factors) else 0
        incoming = factors[k - 1] if k >= 1 else []
        rank = dims[k] - rank_out - len(incoming)
        torsion = tuple(d for d in incoming if d > 1)
        groups.append(AbelianGroup(rank, torsion))
    result = CohomologyGroups(groups)
    logger.debug(f"Cohomology: {result}")
    return result


def mod_p_cohomology(complex_: Any, p: int, max_degree: Optional[int] = None) -> List[int]:
    """Dimensions of ``H^k(C ⊗ F_p)`` by direct rank computations over ``F_p``."""
    C = complex_ if isinstance(complex_, CochainComplex) else as_complex(complex_)
    dims = C.dims
    top = len(dims) - 1 if max_degree is None else max_degree
    ranks = [rank_mod_p(d, p) for d in C.differentials]
    out = []
    for k in range(top + 1):
        out.append(dims[k] - (ranks[k] if k < len(ranks) else 0) - (ranks[k - 1] if k >= 1 else 0))
    return out


def normalize_torsion(orders: Sequence[int]) -> Tuple[int, ...]:
    """
    Invariant factors of a direct sum of cyclic groups.

    Args:
        orders: Orders of cyclic summands (1s are dropped)

    Returns:
        ``d_1 | d_2 | ...`` each at least 2
    """
    powers: Dict[int, List[int]] = {}
    for n in orders:
        for prime, e in factorint(int(n)).items():
            powers.setdefault(int(prime), []).append(int(prime) ** int(e))
    length = max((len(v) for v in powers.values()), default=0)
    factors = [1] * length
    for values in powers.values():
        values.sort(reverse=True)
        for i, q in enumerate(values):
            factors[length - 1 - i] *= q
    return tuple(d for d in factors if d > 1)


def reduce_coefficients(groups: CohomologyGroups, n: int, max_degree: Optional[int] = None) -> CohomologyGroups:
    """
    Cohomology with ``Z/n`` coefficients from integral cohomology of a free complex.

    ``H^k(C; Z/n) = H^k(C) ⊗ Z/n ⊕ Tor(H^{k+1}(C), Z/n)``, so the integral groups
    must reach one degree past ``max_degree``.

    Raises:
        PreconditionError: if ``n < 2`` or the integral groups stop too early
    """
    if n < 2:
        raise PreconditionError("Coefficient modulus must be at least 2", witness=n)
    top = len(groups) - 2 if max_degree is None else max_degree
    if top + 1 >= len(groups):
        raise PreconditionError("Integral cohomology needed one degree further", witness=top)
    out = []
    for k in range(top + 1):
        orders = [n] * groups[k].rank
        orders += [gcd(d, n) for d in groups[k].torsion]
        orders += [gcd(d, n) for d in groups[k + 1].torsion]
        out.append(AbelianGroup(0, normalize_torsion(orders)))
    return CohomologyGroups(out)
