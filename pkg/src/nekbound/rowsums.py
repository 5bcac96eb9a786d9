"""Nekrasov row sums ``h_i(A)`` and the weights ``z_i(A)``.

Both are forward recursions over the rows. ``h_via_triangular_solve`` and
``z_via_triangular_solve`` compute the same vectors as a lower-triangular
solve with ``|D| - |L|`` and serve as independent cross-checks.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import as_matrix
from .errors import ZeroDiagonal


@dataclass(frozen=True)
class RowSums:
    h: np.ndarray
    z: np.ndarray
    source_digest: str


def matrix_digest(a) -> str:
    a = as_matrix(a)
    return hashlib.sha256(np.int64(a.shape[0]).tobytes() + a.tobytes()).hexdigest()[:16]


def _checked_moduli(a) -> np.ndarray:
    m = np.ascontiguousarray(np.abs(as_matrix(a)))
    zero = np.flatnonzero(np.diag(m) == 0.0)
    if zero.size:
        raise ZeroDiagonal(int(zero[0]))
    return m


def nekrasov_row_sums(a) -> np.ndarray:
    """``h_1 = sum_{j>1}|a_1j|``, ``h_i = sum_{j<i}|a_ij| h_j/|a_jj| + sum_{j>i}|a_ij|``.

    Raises ZeroDiagonal if any diagonal entry vanishes.
    """
    return _backend.kernels.nekrasov_sums(_checked_moduli(a))


def z_weights(a) -> np.ndarray:
    """``z_1 = 1``, ``z_i = 1 + sum_{j<i} (|a_ij|/|a_jj|) z_j``."""
    return _backend.kernels.z_weights(_checked_moduli(a))


def lower_m_matrix(a) -> np.ndarray:
    """``|D| - |L|`` as a dense real lower-triangular array."""
    m = _checked_moduli(a)
    out = -np.tril(m, -1)
    np.fill_diagonal(out, np.diag(m))
    return out


def h_via_triangular_solve(a) -> np.ndarray:
    """``|a_ii| [(|D|-|L|)^{-1} |U| e]_i`` by one forward substitution."""
    m = _checked_moduli(a)
    upper = np.triu(m, 1).sum(axis=1)
    y = _backend.kernels.forward_solve(lower_m_matrix(a), upper.reshape(-1, 1))[:, 0]
    return np.diag(m) * y


def z_via_triangular_solve(a) -> np.ndarray:
    """``|a_ii| y_i`` where ``(|D|-|L|) y = e``."""
    m = _checked_moduli(a)
    y = _backend.kernels.forward_solve(lower_m_matrix(a), np.ones((m.shape[0], 1)))[:, 0]
    return np.diag(m) * y


def row_sums(a) -> RowSums:
    return RowSums(h=nekrasov_row_sums(a), z=z_weights(a), source_digest=matrix_digest(a))
