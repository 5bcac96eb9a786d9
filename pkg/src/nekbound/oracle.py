"""Exact ``||A^{-1}||_inf`` via dense LU with partial pivoting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import as_matrix
from .errors import Singular


@dataclass(frozen=True)
class LuFactors:
    """Packed ``PA = LU``.

    ``pivots[k]`` is the row exchanged with row ``k`` at step ``k`` (LAPACK
    convention); ``sign`` is the determinant sign of ``P``.
    """

    lu: np.ndarray
    pivots: np.ndarray
    sign: float
    singular: bool

    @property
    def n(self) -> int:
        return self.lu.shape[0]

    @property
    def lower(self) -> np.ndarray:
        return np.tril(self.lu, -1) + np.eye(self.n)

    @property
    def upper(self) -> np.ndarray:
        return np.triu(self.lu)

    @property
    def row_order(self) -> np.ndarray:
        """Permutation ``p`` with ``A[p] == L @ U``."""
        order = np.arange(self.n)
        for k, p in enumerate(self.pivots):
            order[[k, p]] = order[[p, k]]
        return order

    def reconstruct(self) -> np.ndarray:
        out = np.empty_like(self.lu)
        out[self.row_order] = self.lower @ self.upper
        return out


def singular_tol(u_diag: np.ndarray) -> float:
    mags = np.abs(u_diag)
    return u_diag.size * np.finfo(float).eps * float(mags.max(initial=0.0))


def lu_factor(a) -> LuFactors:
    """Factor with partial pivoting; singular input is flagged, not raised."""
    a = as_matrix(a)
    lu, piv, sign = _backend.kernels.lu_factor(np.array(a))
    u_diag = np.diag(lu)
    singular = bool(np.any(np.abs(u_diag) <= singular_tol(u_diag)))
    return LuFactors(lu=lu, pivots=piv, sign=float(sign), singular=singular)


def lu_solve(factors: LuFactors, b) -> np.ndarray:
    if factors.singular:
        raise Singular("matrix is singular to working precision")
    b = np.asarray(b, dtype=np.complex128)
    vec = b.ndim == 1
    x = _backend.kernels.lu_solve(factors.lu, factors.pivots, np.array(b.reshape(factors.n, -1)))
    return x[:, 0] if vec else x


def inverse_entrywise(a) -> np.ndarray:
    """Full inverse, one LU solve per unit vector. Raises Singular."""
    a = as_matrix(a)
    return lu_solve(lu_factor(a), np.eye(a.shape[0], dtype=np.complex128))


def inf_norm(a) -> float:
    return float(np.abs(np.asarray(a)).sum(axis=1).max())


def exact_inverse_inf_norm(a) -> float:
    return inf_norm(inverse_entrywise(a))


def residual_inf_norm(a, inverse) -> float:
    """``||A A^{-1} - I||_inf``, the oracle's own quality check."""
    a = as_matrix(a)
    return inf_norm(a @ inverse - np.eye(a.shape[0]))
