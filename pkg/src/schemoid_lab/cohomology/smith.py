"""
Module for the Smith normal form of integer matrices.

Elimination runs in int64 while entries stay small and switches to Python
integers (object arrays) before anything could overflow, so results are exact.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from schemoid_lab.monitoring.metrics import SNF_CALLS

logger = logging.getLogger(__name__)

_SAFE = 2 ** 30


def as_int_matrix(matrix, rows: Optional[int] = None, cols: Optional[int] = None) -> np.ndarray:
    """Coerce to a 2-D integer array, keeping empty shapes like ``(0, n)``."""
    array = np.asarray(matrix)
    if array.size == 0:
        r = rows if rows is not None else (array.shape[0] if array.ndim == 2 else 0)
        c = cols if cols is not None else (array.shape[1] if array.ndim == 2 else 0)
        return np.zeros((r, c), dtype=np.int64)
    if array.dtype == object:
        return array
    return array.astype(np.int64)


class SmithNormalForm:
    """
    Smith normal form by repeated pivoting on the entry of least absolute value.

    Args:
        matrix: Integer matrix of shape (m, n)
        transforms: Track the unimodular matrices ``U``, ``V`` with ``U M V = D``
    """

    def __init__(self, matrix, transforms: bool = True):
        self.A = as_int_matrix(matrix).copy()
        m, n = self.A.shape
        self.transforms = transforms
        self.left = np.eye(m, dtype=np.int64) if transforms else None
        self.right = np.eye(n, dtype=np.int64) if transforms else None

    @property
    def num_row(self) -> int:
        return self.A.shape[0]

    @property
    def num_column(self) -> int:
        return self.A.shape[1]

    def _widen(self) -> None:
        if self.A.dtype == object:
            return
        arrays = [self.A] + ([self.left, self.right] if self.transforms else [])
        if max(int(np.abs(a).max(initial=0)) for a in arrays) > _SAFE:
            logger.debug("Switching Smith normal form to arbitrary precision")
            self.A = self.A.astype(object)
            if self.transforms:
                self.left = self.left.astype(object)
                self.right = self.right.astype(object)

    def _swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.A[[i, j]] = self.A[[j, i]]
            if self.transforms:
                self.left[[i, j]] = self.left[[j, i]]

    def _swap_columns(self, i: int, j: int) -> None:
        if i != j:
            self.A[:, [i, j]] = self.A[:, [j, i]]
            if self.transforms:
                self.right[:, [i, j]] = self.right[:, [j, i]]

    def _pivot(self, s: int) -> Optional[Tuple[int, int]]:
        sub = self.A[s:, s:]
        nonzero = np.argwhere(sub != 0)
        if len(nonzero) == 0:
            return None
        values = np.abs(sub[nonzero[:, 0], nonzero[:, 1]])
        i, j = nonzero[int(np.argmin(values))]
        return s + int(i), s + int(j)

    def _clear_column(self, s: int) -> bool:
        """Reduce entries below the pivot. Returns True if the column is cleared."""
        rows = s + 1 + np.nonzero(self.A[s + 1:, s])[0]
        if len(rows) == 0:
            return True
        q = self.A[rows, s] // self.A[s, s]
        self.A[rows] -= q[:, None] * self.A[s]
        if self.transforms:
            self.left[rows] -= q[:, None] * self.left[s]
        self._widen()
        return not np.any(self.A[s + 1:, s] != 0)

    def _clear_row(self, s: int) -> bool:
        cols = s + 1 + np.nonzero(self.A[s, s + 1:])[0]
        if len(cols) == 0:
            return True
        q = self.A[s, cols] // self.A[s, s]
        self.A[:, cols] -= self.A[:, [s]] * q[None, :]
        if self.transforms:
            self.right[:, cols] -= self.right[:, [s]] * q[None, :]
        self._widen()
        return not np.any(self.A[s, s + 1:] != 0)

    def _find_non_divisible(self, s: int) -> Optional[int]:
        sub = self.A[s + 1:, s + 1:]
        if sub.size == 0:
            return None
        bad = np.argwhere(sub % self.A[s, s] != 0)
        return None if len(bad) == 0 else s + 1 + int(bad[0][0])

    def compute(self) -> Tuple[np.ndarray, Optional[np.ndarray], Optional[np.ndarray]]:
        """
        Returns:
            ``(D, U, V)`` with ``U·M·V = D``; ``U``, ``V`` are ``None`` without transforms
        """
        SNF_CALLS.inc()
        for s in range(min(self.num_row, self.num_column)):
            pivot = self._pivot(s)
            if pivot is None:
                break
            self._swap_rows(s, pivot[0])
            self._swap_columns(s, pivot[1])
            while True:
                if not self._clear_column(s):
                    row, col = self._pivot_in_line(s, axis=0)
                    self._swap_rows(s, row)
                    continue
                if not self._clear_row(s):
                    row, col = self._pivot_in_line(s, axis=1)
                    self._swap_columns(s, col)
                    continue
                row = self._find_non_divisible(s)
                if row is None:
                    break
                # pull the offending row in and keep reducing
                self.A[s] += self.A[row]
                if self.transforms:
                    self.left[s] += self.left[row]
            if self.A[s, s] < 0:
                self.A[s] *= -1
                if self.transforms:
                    self.left[s] *= -1
        return self.A, self.left, self.right

    def _pivot_in_line(self, s: int, axis: int) -> Tuple[int, int]:
        """Smallest nonzero entry in column ``s`` (axis 0) or row ``s`` (axis 1)."""
        line = self.A[s:, s] if axis == 0 else self.A[s, s:]
        idx = np.nonzero(line)[0]
        k = s + int(idx[int(np.argmin(np.abs(line[idx])))])
        return (k, s) if axis == 0 else (s, k)


def smith_normal_form(matrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Smith normal form with transforms.

    Returns:
        ``(D, U, V)`` with ``U·M·V = D`` diagonal, ``d_i | d_{i+1}``, ``U`` and ``V`` unimodular
    """
    D, U, V = SmithNormalForm(matrix, transforms=True).compute()
    assert U is not None and V is not None
    return D, U, V


def invariant_factors(matrix) -> List[int]:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    array = as_int_matrix(matrix)
    if array.size == 0:
        return []
    D, _, _ = SmithNormalForm(array, transforms=False).compute()
    k = min(D.shape)
    return [int(D[i, i]) for i in range(k) if D[i, i] != 0]


def rank_mod_p(matrix, p: int) -> int:
    """Rank over the field with ``p`` elements (``p`` prime)."""
    A = as_int_matrix(matrix).astype(object) % p
    A = np.array(A, dtype=np.int64)
    m, n = A.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        rows = np.nonzero(A[rank:, col])[0]
        if len(rows) == 0:
            continue
        r = rank + int(rows[0])
        A[[rank, r]] = A[[r, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = (A[rank] * inv) % p
        others = np.nonzero(A[:, col])[0]
        others = others[others != rank]
        if len(others):
            A[others] = (A[others] - A[others, col][:, None] * A[rank]) % p
        rank += 1
    return rank
