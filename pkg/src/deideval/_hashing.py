"""Deterministic hashing and a small seedable PRNG.

Everything in the toolkit that needs randomness (synthetic corpus
generation, the toy classifier) goes through these helpers so that equal
seeds produce byte-identical output on every platform and Python version.
"""
from __future__ import annotations

import hashlib

_MASK64 = (1 << 64) - 1


def stable_hash64(*parts: str, seed: int = 0) -> int:
    """64-bit hash of the given string parts, stable across runs and platforms."""
    h = hashlib.blake2b(digest_size=8)
    h.update(str(seed).encode("utf-8"))
    for part in parts:
        h.update(b"\x1f")
        h.update(part.encode("utf-8"))
    return int.from_bytes(h.digest(), "big")


def unit_interval(value: int) -> float:
    """Map a 64-bit integer uniformly onto [0, 1)."""
    return (value & _MASK64) / 2.0**64


class SplitMix64:
    """Tiny deterministic PRNG (splitmix64), sufficient for fake-data generation."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n). Uses rejection sampling to avoid modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def digits(self, count: int) -> str:
        return "".join(str(self.below(10)) for _ in range(count))
