"""Random test matrices built on ``SplitMix64``.

Off-diagonal entries are uniform on ``[-1, 1]`` (real and imaginary parts
independently for the complex variants). Diagonal entries get a random sign,
or a random unit phase when complex.
"""

from __future__ import annotations

import math

import numpy as np

from .prng import SplitMix64


def _entry(rng: SplitMix64, complex_: bool) -> complex:
    re = rng.uniform(-1.0, 1.0)
    return complex(re, rng.uniform(-1.0, 1.0)) if complex_ else complex(re)


def _with_modulus(rng: SplitMix64, modulus: float, complex_: bool) -> complex:
    if complex_:
        theta = rng.uniform(0.0, 2.0 * math.pi)
        return complex(modulus * math.cos(theta), modulus * math.sin(theta))
    return complex(modulus if rng.uniform() < 0.5 else -modulus)


def _off_diagonal(rng: SplitMix64, n: int, complex_: bool) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            if i != j:
                a[i, j] = _entry(rng, complex_)
    return a


def random_matrix(rng: SplitMix64, n: int, complex_: bool = False) -> np.ndarray:
    """Every entry uniform, diagonal included."""
    a = _off_diagonal(rng, n, complex_)
    for i in range(n):
        a[i, i] = _entry(rng, complex_)
    return a


def _delta(rng: SplitMix64) -> float:
    # uniform on (0, 2]
    return 2.0 * (1.0 - rng.uniform())


def random_nekrasov(rng: SplitMix64, n: int, complex_: bool = False) -> np.ndarray:
    """Nekrasov by construction: ``|a_ii| = h_i(A) + delta``, delta in ``(0, 2]``.

    ``h_i`` only involves diagonals of earlier rows, so the diagonal is filled
    in index order.
    """
    a = _off_diagonal(rng, n, complex_)
    m = np.abs(a)
    h = np.zeros(n)
    d = np.zeros(n)
    for i in range(n):
        h[i] = sum(m[i, j] * h[j] / d[j] for j in range(i)) + m[i, i + 1:].sum()
        d[i] = h[i] + _delta(rng)
        a[i, i] = _with_modulus(rng, d[i], complex_)
    return a


def random_sdd(rng: SplitMix64, n: int, complex_: bool = False) -> np.ndarray:
    """``|a_ii| = r_i(A) + delta``, delta in ``(0, 2]``."""
    a = _off_diagonal(rng, n, complex_)
    r = np.abs(a).sum(axis=1)
    for i in range(n):
        a[i, i] = _with_modulus(rng, r[i] + _delta(rng), complex_)
    return a


def random_scaled_diagonal(rng: SplitMix64, n: int, complex_: bool = False) -> np.ndarray:
    """``|a_ii| = c_i r_i(A)`` with ``c_i`` uniform on ``[0.5, 1.5)``.

    Lands on both sides of every class boundary; useful for classifier
    consistency checks.
    """
    a = _off_diagonal(rng, n, complex_)
    r = np.abs(a).sum(axis=1)
    for i in range(n):
        a[i, i] = _with_modulus(rng, max(r[i], 1e-3) * rng.uniform(0.5, 1.5), complex_)
    return a
