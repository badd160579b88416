"""Deterministic seeded randomness shared by generators, campaigns, and case programs.

The generator is splitmix64: 64-bit wraparound arithmetic only, so the same
seed yields the same stream on every platform and Python build. Golden values
in the test suite depend on this algorithm staying fixed.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

import numpy as np

ALGORITHM_ID = "splitmix64"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

T = TypeVar("T")


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
    return z ^ (z >> 31)


def derive_seed(base: int, *salts: int) -> int:
    """Derive an independent child seed from ``base`` and an integer salt path.

    Seed splitting: each salt is spread by an odd multiplier and folded in
    through the splitmix64 finalizer, so sibling paths such as
    (seed, iteration) and (seed, iteration + 1) give unrelated streams.
    """
    seed = base & _MASK64
    for salt in salts:
        seed = _mix(seed ^ (((salt + 1) * _GAMMA) & _MASK64))
    return seed


class SeededSource:
    """Single-consumer splitmix64 stream.

    Campaigns that need several independent streams derive one per purpose
    via :meth:`derive` rather than sharing a source across consumers.
    """

    algorithm_id = ALGORITHM_ID

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed

    def __repr__(self) -> str:
        return f"SeededSource(seed={self.seed}, algorithm={self.algorithm_id})"

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound).

        Plain modulo reduction: the bias is immaterial for the single-digit
        bounds used by the input generators and keeps one draw per value.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def unit(self) -> float:
        """Uniform float in [0.0, 1.0) with 53 random mantissa bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def unit_block(self, count: int) -> np.ndarray:
        """``count`` consecutive :meth:`unit` draws as one vectorized batch.

        splitmix64's state is an arithmetic progression, so the block is
        computed from ``state + i * gamma`` directly. Bit-identical to
        calling ``unit()`` ``count`` times; the scalar loop is the reference
        and the test suite pins the equivalence.
        """
        if count < 0:
            raise ValueError(f"count must be non-negative, got {count}")
        idx = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(self._state) + idx * np.uint64(_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_A)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_B)
        z ^= z >> np.uint64(31)
        self._state = (self._state + count * _GAMMA) & _MASK64
        return (z >> np.uint64(11)).astype(np.float64) * 2.0 ** -53

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def derive(self, *salts: int) -> "SeededSource":
        """Fresh source for the given salt path, independent of stream position."""
        return SeededSource(derive_seed(self.seed, *salts))
