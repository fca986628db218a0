"""Portable seeded Erdos-Renyi sampling.

The generator is SplitMix64, chosen because it is a few lines of 64-bit
integer arithmetic and therefore easy to reproduce bit-for-bit elsewhere:

    state  <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z      <- state
    z      <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z      <- (z xor (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output <- z xor (z >> 31)

A uniform double in [0, 1) is ``(output >> 11) * 2^-53``.  A G(n, p) draw
takes one uniform per vertex pair, in graph6 pair order
``(0,1), (0,2), (1,2), (0,3), ...``, and includes the edge iff ``u < p``.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, vertex_pairs

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def gnp(rng: SplitMix64, n: int, p: float) -> Graph:
    rows = [0] * n
    for i, j in vertex_pairs(n):
        if rng.random() < p:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


def sample_random(
    n: int, p: float, count: int, seed: int, *, connected: bool = False
) -> Iterator[Graph]:
    """``count`` G(n, p) graphs from one SplitMix64 stream seeded with ``seed``.

    With ``connected=True`` disconnected draws are discarded until ``count``
    connected graphs have been produced.
    """
    if not 0 < p < 1:
        raise ValueError(f"edge probability must lie strictly between 0 and 1, got {p}")
    if not 1 <= n <= 24:
        raise ValueError(f"random sources support 1 <= n <= 24, got {n}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = SplitMix64(seed)
    produced = 0
    while produced < count:
        g = gnp(rng, n, float(p))
        if connected and not g.is_connected():
            continue
        produced += 1
        yield g
