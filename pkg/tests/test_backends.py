"""The two Monte Carlo backends must be indistinguishable.

An independently written scalar implementation of the documented
counter-mode SplitMix64 protocol serves as the referee: both the
compiled kernel and the numpy fallback must reproduce its counts
exactly, for any seed and any partition.
"""

import importlib.util
from bisect import bisect_right

import numpy as np
import pytest

import filedrawer._mc_fallback as fallback
from filedrawer._rng import GAMMA, draw, normalize_seed, subseed, unit_draw

_kernel_present = importlib.util.find_spec("filedrawer._mc_kernel") is not None
if _kernel_present:
    import filedrawer._mc_kernel as kernel

needs_kernel = pytest.mark.skipif(not _kernel_present, reason="compiled kernel not built")

MASK64 = (1 << 64) - 1

# first outputs of the stream for two seeds, as published for SplitMix64
KNOWN_STREAMS = {
    0: (16294208416658607535, 7960286522194355700, 487617019471545679),
    1234567: (6457827717110365317, 3203168211198807973, 9817491932198370423),
}

PARTITIONS = [
    ((0.95,), (0.05, 1.0)),
    ((0.95,), (0.0, 1.0)),
    ((0.025, 0.975), (1.0, 0.05, 1.0)),
    ((0.6, 0.9), (0.2, 0.4, 0.9)),
    ((), (0.33,)),
    ((0.1, 0.2, 0.5, 0.9, 0.99), (0.0, 0.1, 0.5, 0.9, 1.0, 0.7)),
]

SEEDS = [0, 1, 42, 1234567, 2**63 + 11, -5]


def reference_count(seed: int, n: int, cuts, probs) -> int:
    """Straight-from-the-docs scalar implementation."""
    seed = normalize_seed(seed)
    mask = (1 << 64) - 1
    mult1, mult2 = 0xBF58476D1CE4E5B9, 0x94D049BB133111EB

    def mix(x):
        x &= mask
        x ^= x >> 30
        x = (x * mult1) & mask
        x ^= x >> 27
        x = (x * mult2) & mask
        return x ^ (x >> 31)

    published = 0
    for i in range(n):
        u = (mix(seed + (2 * i + 1) * GAMMA) >> 11) * 2.0**-53
        v = (mix(seed + (2 * i + 2) * GAMMA) >> 11) * 2.0**-53
        if v < probs[bisect_right(cuts, u)]:
            published += 1
    return published


class TestProtocol:
    def test_known_stream_values(self):
        for seed, expected in KNOWN_STREAMS.items():
            assert tuple(draw(seed, k) for k in range(3)) == expected

    def test_unit_draws_are_half_open(self):
        values = [unit_draw(99, k) for k in range(1000)]
        assert all(0.0 <= u < 1.0 for u in values)

    def test_subseed_is_xor_of_gamma_multiples(self):
        assert subseed(0, 0) == GAMMA
        assert subseed(7, 2) == 7 ^ ((3 * GAMMA) & MASK64)

    def test_negative_seed_normalizes(self):
        assert normalize_seed(-1) == MASK64


class TestFallbackMatchesReference:
    @pytest.mark.parametrize("cuts,probs", PARTITIONS)
    def test_counts(self, cuts, probs):
        for seed in SEEDS:
            expected = reference_count(seed, 3000, cuts, probs)
            got = fallback.count_published(
                normalize_seed(seed), 3000, np.asarray(cuts), np.asarray(probs)
            )
            assert got == expected

    def test_chunk_boundaries_do_not_matter(self, monkeypatch):
        cuts, probs = np.asarray([0.95]), np.asarray([0.05, 1.0])
        baseline = fallback.count_published(7, 10_000, cuts, probs)
        for chunk in (1, 3, 999, 10_000, 1 << 20):
            monkeypatch.setattr(fallback, "_CHUNK", chunk)
            assert fallback.count_published(7, 10_000, cuts, probs) == baseline

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            fallback.count_published(0, 10, np.asarray([0.5]), np.asarray([1.0]))


@needs_kernel
class TestKernelMatchesFallback:
    @pytest.mark.parametrize("cuts,probs", PARTITIONS)
    def test_counts_bit_identical(self, cuts, probs):
        c = np.asarray(cuts, dtype=np.float64)
        p = np.asarray(probs, dtype=np.float64)
        for seed in SEEDS:
            s = normalize_seed(seed)
            assert kernel.count_published(s, 50_000, c, p) == fallback.count_published(
                s, 50_000, c, p
            )

    def test_kernel_matches_reference(self):
        cuts, probs = (0.6, 0.9), (0.2, 0.4, 0.9)
        expected = reference_count(42, 3000, cuts, probs)
        assert kernel.count_published(42, 3000, np.asarray(cuts), np.asarray(probs)) == expected

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            kernel.count_published(0, 10, np.asarray([0.5]), np.asarray([1.0]))
