"""Deterministic PRNG used everywhere randomness is needed.

splitmix64: tiny, well studied, and trivially portable, so sampled stability
conditions and randomized monomorphism tests reproduce bit-for-bit across
platforms and processes.  No global state; streams are value objects.
"""

from __future__ import annotations

MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return (z ^ (z >> 31)) & MASK

    def next_float(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (inclusive); span must be modest."""
        span = hi - lo + 1
        return lo + self.next_u64() % span


def fold_seed(*parts) -> int:
    """Deterministically fold strings/ints into a 64-bit seed."""
    acc = 0x9E3779B97F4A7C15
    gen = SplitMix64(acc)
    for part in parts:
        if isinstance(part, int):
            gen.state ^= part & MASK
        else:
            for b in str(part).encode("utf-8"):
                gen.state ^= b
                gen.next_u64()
        acc ^= gen.next_u64()
    return acc & MASK
