"""Pure-Python (numpy) Monte Carlo backend.

Vectorized twin of the compiled kernel: same counter-mode SplitMix64
protocol (see :mod:`filedrawer._rng`), bit-identical counts. The whole
decision path is integer arithmetic, exact float scaling and
comparisons, so vectorization cannot change any outcome.
"""

from __future__ import annotations

import numpy as np

from ._rng import GAMMA, MASK64, MIX_MULT_1, MIX_MULT_2, UNIT_SCALE

BACKEND_NAME = "numpy"

_CHUNK = 1 << 19  # studies per chunk; bounds peak memory at ~16 MiB


def _mix64(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> np.uint64(30))
    x = x * np.uint64(MIX_MULT_1)
    x = x ^ (x >> np.uint64(27))
    x = x * np.uint64(MIX_MULT_2)
    x = x ^ (x >> np.uint64(31))
    return x


def count_published(seed, n, cuts, probs):
    """Number of published studies out of n draws; see the kernel docstring."""
    cuts = np.ascontiguousarray(cuts, dtype=np.float64)
    probs = np.ascontiguousarray(probs, dtype=np.float64)
    if probs.shape[0] != cuts.shape[0] + 1:
        raise ValueError("probs must have one more entry than cuts")
    seed = np.uint64(int(seed) & MASK64)
    gamma = np.uint64(GAMMA)
    published = 0
    with np.errstate(over="ignore"):
        for start in range(0, n, _CHUNK):
            count = min(_CHUNK, n - start)
            # draw indices 2i and 2i+1 for studies i in [start, start+count);
            # the protocol hashes seed + (index + 1) * GAMMA
            counters = np.arange(
                2 * start + 1, 2 * (start + count) + 1, dtype=np.uint64
            )
            bits = _mix64(seed + counters * gamma)
            units = (bits >> np.uint64(11)).astype(np.float64) * UNIT_SCALE
            u = units[0::2]
            v = units[1::2]
            intervals = np.searchsorted(cuts, u, side="right")
            published += int(np.count_nonzero(v < probs[intervals]))
    return published
