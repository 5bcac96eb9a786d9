"""Pure-numpy twins of the kernels in ``_kernels_numba``.

The outer loops stay in Python where the recurrence is sequential; inner
reductions are vectorized.
"""

import numpy as np


def nekrasov_sums(m):
    n = m.shape[0]
    h = np.zeros(n)
    q = np.zeros(n)
    for i in range(n):
        h[i] = m[i, :i] @ q[:i] + m[i, i + 1:].sum()
        q[i] = h[i] / m[i, i]
    return h


def z_weights(m):
    n = m.shape[0]
    z = np.ones(n)
    w = np.zeros(n)
    for i in range(n):
        z[i] = m[i, :i] @ w[:i] + 1.0
        w[i] = z[i] / m[i, i]
    return z


def forward_solve(l, b):
    x = np.empty_like(b)
    for i in range(b.shape[0]):
        x[i] = (b[i] - l[i, :i] @ x[:i]) / l[i, i]
    return x


def lu_factor(a):
    n = a.shape[0]
    lu = a.copy()
    piv = np.arange(n)
    sign = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        piv[k] = p
        if p != k:
            sign = -sign
            lu[[k, p]] = lu[[p, k]]
        pivot = lu[k, k]
        if pivot == 0:
            continue
        lu[k + 1:, k] /= pivot
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, piv, sign


def lu_solve(lu, piv, b):
    n = b.shape[0]
    x = b.copy()
    for i in range(n):
        p = piv[i]
        if p != i:
            x[[i, p]] = x[[p, i]]
    for i in range(n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - lu[i, i + 1:] @ x[i + 1:]) / lu[i, i]
    return x


def _nekrasov_in_order(m, perm):
    mp = m[np.ix_(perm, perm)]
    d = np.diag(mp)
    if np.any(d == 0.0):
        return False
    return bool(np.all(d > nekrasov_sums(mp)))


def _candidates(m, perm, q, used, depth, greedy):
    free = np.flatnonzero(~used)
    rest = m[np.ix_(free, free)].copy()
    np.fill_diagonal(rest, 0.0)
    s = m[np.ix_(free, perm[:depth])] @ q[:depth] + rest.sum(axis=1)
    ok = m[free, free] > s
    cand, h = free[ok], s[ok]
    if greedy and cand.size > 1:
        order = np.argsort(h / m[cand, cand], kind="mergesort")
        cand, h = cand[order], h[order]
    return cand, h


def gudkov_search(m, greedy, max_nodes):
    n = m.shape[0]
    perm = np.zeros(n, dtype=np.int64)
    q = np.zeros(n)
    used = np.zeros(n, dtype=bool)
    stack = [_candidates(m, perm, q, used, 0, greedy)]
    pos = [0]
    nodes = 0
    while stack:
        depth = len(stack) - 1
        cand, h = stack[depth]
        if pos[depth] >= cand.size:
            stack.pop()
            pos.pop()
            if depth > 0:
                used[perm[depth - 1]] = False
            continue
        if nodes >= max_nodes:
            return perm, False, False
        k = pos[depth]
        pos[depth] += 1
        p = cand[k]
        nodes += 1
        perm[depth] = p
        q[depth] = h[k] / m[p, p]
        used[p] = True
        if depth == n - 1:
            if _nekrasov_in_order(m, perm):
                return perm, True, False
            used[p] = False
            continue
        stack.append(_candidates(m, perm, q, used, depth + 1, greedy))
        pos.append(0)
    return perm, False, True
