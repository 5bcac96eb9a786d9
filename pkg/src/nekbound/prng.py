"""SplitMix64, the seeded generator behind sweeps and property tests.

Algorithm (all arithmetic mod 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``uniform()`` maps the top 53 bits of one output to ``[0, 1)``. ``split()``
returns a child generator seeded with the parent's next output, so each
matrix in a sweep gets an independent stream regardless of how many draws
its siblings consumed.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, low: float = 0.0, high: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * (1.0 / (1 << 53))
        return low + (high - low) * u

    def below(self, k: int) -> int:
        """Integer in ``[0, k)``; modulo bias is irrelevant at the sizes used here."""
        return self.next_u64() % k

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())
