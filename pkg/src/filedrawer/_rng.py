"""Counter-mode SplitMix64: the simulation's pseudo-random protocol.

Both Monte Carlo backends implement exactly this scheme, so their counts
are bit-identical and any reimplementation that follows it reproduces
them. Constants are the published SplitMix64 ones (Steele, Lea &
Flood, "Fast splittable pseudorandom number generators", OOPSLA 2014).

    draw(seed, k)  = mix64((seed + (k + 1) * GAMMA) mod 2^64)
    unit(seed, k)  = (draw(seed, k) >> 11) * 2^-53        # float64 in [0, 1)

where mix64 is the xor-shift/multiply finalizer

    x ^= x >> 30;  x *= 0xBF58476D1CE4E5B9
    x ^= x >> 27;  x *= 0x94D049BB133111EB
    x ^= x >> 31

Study i consumes exactly two unit draws: unit(seed, 2i) decides the
interval of the score axis the study falls in, unit(seed, 2i + 1) decides
acceptance. Because draws are indexed rather than sequential, any chunk
or parallel split over studies yields the same counts as a serial run.

Sweeps derive one sub-seed per element: subseed(seed, j) = seed XOR
((j + 1) * GAMMA) mod 2^64.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX_MULT_1 = 0xBF58476D1CE4E5B9
MIX_MULT_2 = 0x94D049BB133111EB
UNIT_SCALE = 2.0**-53


def normalize_seed(seed: int) -> int:
    """Reduce an arbitrary Python int to the 64-bit seed actually used."""
    return int(seed) & MASK64


def mix64(x: int) -> int:
    x &= MASK64
    x ^= x >> 30
    x = (x * MIX_MULT_1) & MASK64
    x ^= x >> 27
    x = (x * MIX_MULT_2) & MASK64
    x ^= x >> 31
    return x


def draw(seed: int, k: int) -> int:
    """k-th 64-bit output of the stream seeded with ``seed``."""
    return mix64(seed + (k + 1) * GAMMA)


def unit_draw(seed: int, k: int) -> float:
    """k-th uniform in [0, 1): the top 53 bits of draw(seed, k)."""
    return (draw(seed, k) >> 11) * UNIT_SCALE


def subseed(seed: int, index: int) -> int:
    """Seed of sweep element ``index``, derived by a fixed XOR sequence."""
    return (normalize_seed(seed) ^ (((index + 1) * GAMMA) & MASK64)) & MASK64
