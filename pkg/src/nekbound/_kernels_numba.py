"""Loop kernels compiled with numba.

Every function here has a twin of the same name and signature in
``_kernels_numpy``. Inputs are assumed validated by the callers: ``m`` is
always the entrywise modulus of a square matrix (float64), LU routines take
complex128.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def nekrasov_sums(m):
    n = m.shape[0]
    h = np.zeros(n)
    q = np.zeros(n)
    for i in range(n):
        s = 0.0
        for j in range(i):
            s += m[i, j] * q[j]
        for j in range(i + 1, n):
            s += m[i, j]
        h[i] = s
        q[i] = s / m[i, i]
    return h


@njit(cache=True)
def z_weights(m):
    n = m.shape[0]
    z = np.ones(n)
    w = np.zeros(n)
    for i in range(n):
        s = 0.0
        for j in range(i):
            s += m[i, j] * w[j]
        z[i] = s + 1.0
        w[i] = z[i] / m[i, i]
    return z


@njit(cache=True)
def forward_solve(l, b):
    n, k = b.shape
    x = b.copy()
    for i in range(n):
        for j in range(i):
            f = l[i, j]
            for c in range(k):
                x[i, c] -= f * x[j, c]
        d = l[i, i]
        for c in range(k):
            x[i, c] /= d
    return x


@njit(cache=True)
def lu_factor(a):
    n = a.shape[0]
    lu = a.copy()
    piv = np.arange(n)
    sign = 1.0
    for k in range(n):
        p = k
        best = abs(lu[k, k])
        for i in range(k + 1, n):
            v = abs(lu[i, k])
            if v > best:
                best = v
                p = i
        piv[k] = p
        if p != k:
            sign = -sign
            for j in range(n):
                t = lu[k, j]
                lu[k, j] = lu[p, j]
                lu[p, j] = t
        pivot = lu[k, k]
        if pivot == 0:
            continue
        for i in range(k + 1, n):
            f = lu[i, k] / pivot
            lu[i, k] = f
            for j in range(k + 1, n):
                lu[i, j] -= f * lu[k, j]
    return lu, piv, sign


@njit(cache=True)
def lu_solve(lu, piv, b):
    n, k = b.shape
    x = b.copy()
    for i in range(n):
        p = piv[i]
        if p != i:
            for c in range(k):
                t = x[i, c]
                x[i, c] = x[p, c]
                x[p, c] = t
    # row-major sweeps: the right-hand sides are the contiguous axis
    for i in range(n):
        for j in range(i):
            f = lu[i, j]
            for c in range(k):
                x[i, c] -= f * x[j, c]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            f = lu[i, j]
            for c in range(k):
                x[i, c] -= f * x[j, c]
        d = lu[i, i]
        for c in range(k):
            x[i, c] /= d
    return x


@njit(cache=True)
def _nekrasov_in_order(m, perm):
    n = perm.shape[0]
    mp = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            mp[i, j] = m[perm[i], perm[j]]
    for i in range(n):
        if mp[i, i] == 0.0:
            return False
    h = nekrasov_sums(mp)
    for i in range(n):
        if not mp[i, i] > h[i]:
            return False
    return True


@njit(cache=True)
def _candidates(m, perm, q, used, depth, greedy, out, hout):
    # Indices p that may sit at position `depth` given the placed prefix;
    # the row sum of p over the not-yet-placed set does not depend on their order.
    n = m.shape[0]
    cnt = 0
    for p in range(n):
        if used[p]:
            continue
        s = 0.0
        for t in range(depth):
            s += m[p, perm[t]] * q[t]
        for j in range(n):
            if j != p and not used[j]:
                s += m[p, j]
        if m[p, p] > s:
            out[cnt] = p
            hout[cnt] = s
            cnt += 1
    if greedy and cnt > 1:
        ratio = np.empty(cnt)
        for c in range(cnt):
            ratio[c] = hout[c] / m[out[c], out[c]]
        order = np.argsort(ratio, kind="mergesort")
        po = out[:cnt].copy()
        ho = hout[:cnt].copy()
        for c in range(cnt):
            out[c] = po[order[c]]
            hout[c] = ho[order[c]]
    return cnt


@njit(cache=True)
def gudkov_search(m, greedy, max_nodes):
    """Depth-first search for an ordering under which ``m`` is Nekrasov.

    Returns ``(perm, found, completed)``; ``completed`` is true when the
    whole pruned tree was explored without hitting ``max_nodes``.
    """
    n = m.shape[0]
    perm = np.zeros(n, dtype=np.int64)
    q = np.zeros(n)
    used = np.zeros(n, dtype=np.bool_)
    cands = np.zeros((n, n), dtype=np.int64)
    hs = np.zeros((n, n))
    ncand = np.zeros(n, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    nodes = 0
    depth = 0
    ncand[0] = _candidates(m, perm, q, used, 0, greedy, cands[0], hs[0])
    while depth >= 0:
        if pos[depth] >= ncand[depth]:
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = False
            continue
        if nodes >= max_nodes:
            return perm, False, False
        k = pos[depth]
        pos[depth] += 1
        p = cands[depth, k]
        nodes += 1
        perm[depth] = p
        q[depth] = hs[depth, k] / m[p, p]
        used[p] = True
        if depth == n - 1:
            if _nekrasov_in_order(m, perm):
                return perm, True, False
            used[p] = False
            continue
        depth += 1
        pos[depth] = 0
        ncand[depth] = _candidates(m, perm, q, used, depth, greedy, cands[depth], hs[depth])
    return perm, False, True
