"""Membership tests for the SDD, Nekrasov, H-matrix and Gudkov classes.

Strict inequalities are evaluated with plain floating comparison. Callers who
want slack should read the margins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _backend
from .core import as_matrix, comparison_matrix, deleted_row_sums, moduli, permute
from .errors import Singular, ZeroDiagonal
from .oracle import inf_norm, inverse_entrywise
from .rowsums import lower_m_matrix, nekrasov_row_sums

DEFAULT_GUDKOV_LIMIT = 8
H_MATRIX_RTOL = 1e-10

_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True)
class GudkovResult:
    """Outcome of the permutation search.

    ``exhaustive`` is true when a missing permutation is a proof that none
    exists, i.e. the whole (pruned) permutation tree was searched.
    """

    permutation: Optional[tuple[int, ...]]
    exhaustive: bool

    @property
    def found(self) -> bool:
        return self.permutation is not None


@dataclass(frozen=True)
class Classification:
    is_sdd: bool
    is_nekrasov: bool
    is_h_matrix: bool
    gudkov: GudkovResult
    sdd_margins: np.ndarray
    nekrasov_margins: Optional[np.ndarray]

    @property
    def gudkov_permutation(self) -> Optional[tuple[int, ...]]:
        return self.gudkov.permutation

    @property
    def is_gudkov(self) -> bool:
        return self.gudkov.found


def classify_sdd(a) -> tuple[bool, np.ndarray]:
    """``|a_ii| > r_i(A)`` for every row; margins are ``|a_ii| - r_i(A)``."""
    d = np.abs(np.diag(as_matrix(a)))
    r = deleted_row_sums(a)
    return bool(np.all(d > r)), d - r


def classify_nekrasov(a) -> tuple[bool, Optional[np.ndarray]]:
    """``|a_ii| > h_i(A)`` for every row.

    A zero diagonal entry gives ``(False, None)``. For ``n == 1`` this reduces
    to ``|a_11| > 0``.
    """
    try:
        h = nekrasov_row_sums(a)
    except ZeroDiagonal:
        return False, None
    d = np.abs(np.diag(as_matrix(a)))
    return bool(np.all(d > h)), d - h


def szulc_matrix(a) -> np.ndarray:
    """``C = E - (|D|-|L|)^{-1} |U|``, one forward solve per column of ``|U|``."""
    m = moduli(a)
    p = _backend.kernels.forward_solve(lower_m_matrix(a), np.ascontiguousarray(np.triu(m, 1)))
    return np.eye(m.shape[0]) - p


def classify_nekrasov_szulc(a) -> bool:
    """Nekrasov test through ``C``: true iff ``C`` is SDD with a positive diagonal.

    The positive-diagonal clause is what ``(|D|-|L|)^{-1}|U| e < e`` demands;
    without it ``C`` can be SDD through a diagonal entry below ``-1``.
    Raises ZeroDiagonal.
    """
    c = szulc_matrix(a)
    sdd, _ = classify_sdd(c)
    return sdd and bool(np.all(np.diag(c) > 0.0))


def classify_h_matrix(a) -> bool:
    """``<A>`` is a nonsingular M-matrix: its inverse exists and is entrywise >= 0."""
    try:
        inv = inverse_entrywise(comparison_matrix(a)).real
    except Singular:
        return False
    tol = H_MATRIX_RTOL * inf_norm(inv)
    return bool(np.all(inv >= -tol))


def _is_nekrasov_ordering(a, perm) -> bool:
    return classify_nekrasov(permute(a, perm))[0]


def find_gudkov_permutation(a, limit: int = DEFAULT_GUDKOV_LIMIT) -> GudkovResult:
    """Search for ``perm`` such that ``permute(a, perm)`` is Nekrasov.

    For ``n <= limit`` the search covers every ordering (prefixes that already
    violate the Nekrasov condition are pruned, which is lossless because the
    row sum at a position depends only on the prefix). Beyond ``limit`` the
    candidates at each position are tried most-dominant first and the search
    stops after ``limit * n!`` node expansions.
    """
    if limit < 1:
        raise ValueError("limit must be a positive integer")
    a = as_matrix(a)
    n = a.shape[0]
    if classify_nekrasov(a)[0]:
        return GudkovResult(tuple(range(n)), exhaustive=True)

    greedy = n > limit
    cap = _INT64_MAX if not greedy else min(limit * math.factorial(n), _INT64_MAX)
    perm, found, completed = _backend.kernels.gudkov_search(
        np.ascontiguousarray(np.abs(a)), greedy, np.int64(cap)
    )
    if found:
        perm = tuple(int(p) for p in perm)
        # the kernel checks the leaf with the same recursion; guard anyway
        if _is_nekrasov_ordering(a, perm):
            return GudkovResult(perm, exhaustive=not greedy or completed)
    return GudkovResult(None, exhaustive=(not greedy) or bool(completed))


def classify(a, gudkov_limit: int = DEFAULT_GUDKOV_LIMIT) -> Classification:
    a = as_matrix(a)
    sdd, sdd_margins = classify_sdd(a)
    nek, nek_margins = classify_nekrasov(a)
    # the numerical M-matrix test carries a tolerance; Nekrasov already implies H
    h = nek or classify_h_matrix(a)
    return Classification(
        is_sdd=sdd,
        is_nekrasov=nek,
        is_h_matrix=h,
        gudkov=find_gudkov_permutation(a, gudkov_limit),
        sdd_margins=sdd_margins,
        nekrasov_margins=nek_margins,
    )
