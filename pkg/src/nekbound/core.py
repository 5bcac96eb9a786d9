"""Dense matrix handling: validation, the standard splitting, comparison matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSquare


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a read-only, C-contiguous complex128 square array.

    Raises NotSquare for non-square or empty input and ValueError for
    non-finite entries.
    """
    arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise NotSquare(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has NaN or infinite entries")
    arr.flags.writeable = False
    return arr


def moduli(a) -> np.ndarray:
    """Entrywise modulus ``|A|`` as a float64 array."""
    return np.ascontiguousarray(np.abs(as_matrix(a)))


@dataclass(frozen=True)
class Splitting:
    """``A = D - L - U`` with ``l`` strictly lower and ``u`` strictly upper."""

    d: np.ndarray
    l: np.ndarray
    u: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return np.diag(self.d) - self.l - self.u


def split(a) -> Splitting:
    a = as_matrix(a)
    # negation is exact, so reconstruct() returns A bit for bit
    l = -np.tril(a, -1)
    u = -np.triu(a, 1)
    return Splitting(d=np.diag(a).copy(), l=l, u=u)


def comparison_matrix(a) -> np.ndarray:
    """``<A>``: ``|a_ii|`` on the diagonal, ``-|a_ij|`` elsewhere (real)."""
    m = -moduli(a)
    np.fill_diagonal(m, -np.diag(m))
    return m


def deleted_row_sums(a) -> np.ndarray:
    """``r_i(A) = sum_{j != i} |a_ij|``."""
    m = moduli(a)
    np.fill_diagonal(m, 0.0)
    return m.sum(axis=1)


def permute(a, perm) -> np.ndarray:
    """Symmetric permutation ``P A P^T``: row/column ``k`` of the result is ``perm[k]`` of ``a``."""
    a = as_matrix(a)
    perm = np.asarray(perm, dtype=np.int64)
    return as_matrix(a[np.ix_(perm, perm)])
