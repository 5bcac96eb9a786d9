"""Time the numba kernels against their numpy twins.

    python benchmarks/bench_backends.py [--repeat 5]

Compilation is excluded: every kernel is called once before timing.
"""

import argparse
import timeit

import numpy as np

from nekbound import _backend
from nekbound.ensembles import random_matrix, random_nekrasov, random_sdd
from nekbound.prng import SplitMix64


def cases():
    rng = SplitMix64(42)
    m200 = np.abs(random_nekrasov(rng, 200))
    a200 = random_matrix(rng, 200, complex_=True)
    rhs = np.ones((200, 1))
    # seven SDD rows plus one hopeless row: every ordering of the good rows is
    # expanded before the last position fails, about e * 7! nodes
    hard = np.abs(random_sdd(rng, 8))
    hard[7] = 1.0
    hard[7, 7] = 1e-3
    eye = np.eye(200, dtype=np.complex128)
    return {
        "nekrasov_sums n=200": lambda k: k.nekrasov_sums(m200),
        "z_weights n=200": lambda k: k.z_weights(m200),
        "forward_solve n=200": lambda k: k.forward_solve(np.tril(m200) + np.eye(200), rhs),
        "lu_factor n=200 complex": lambda k: k.lu_factor(a200),
        "lu_solve n=200, 200 rhs": lambda k: k.lu_solve(*k.lu_factor(a200)[:2], eye),
        "gudkov_search n=8, none": lambda k: k.gudkov_search(hard, False, np.int64(2**62)),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = _backend.available_backends()
    names = sorted(backends)
    print(f"{'kernel':<28}" + "".join(f"{n:>14}" for n in names) + f"{'speedup':>10}")
    for label, fn in cases().items():
        times = {}
        for name in names:
            kern = backends[name]
            fn(kern)
            reps = max(1, args.repeat)
            times[name] = min(timeit.repeat(lambda: fn(kern), number=1, repeat=reps))
        speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        cells = "".join(f"{times[n] * 1e3:>12.3f}ms" for n in names)
        print(f"{label:<28}{cells}{speed:>9.1f}x")


if __name__ == "__main__":
    main()
