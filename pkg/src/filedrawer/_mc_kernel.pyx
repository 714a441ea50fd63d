# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte Carlo kernel.

Implements the counter-mode SplitMix64 protocol documented in
filedrawer._rng; must stay bit-identical to the numpy fallback.
"""

from libc.stdint cimport uint64_t

BACKEND_NAME = "cython"

cdef double UNIT_SCALE = 1.0 / 9007199254740992.0  # 2^-53
cdef uint64_t GAMMA = 0x9E3779B97F4A7C15ULL
cdef uint64_t MIX_MULT_1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t MIX_MULT_2 = 0x94D049BB133111EBULL


cdef inline uint64_t mix64(uint64_t x) nogil:
    x ^= x >> 30
    x *= MIX_MULT_1
    x ^= x >> 27
    x *= MIX_MULT_2
    x ^= x >> 31
    return x


cdef inline double unit(uint64_t seed, uint64_t k) nogil:
    return <double> (mix64(seed + (k + 1) * GAMMA) >> 11) * UNIT_SCALE


def count_published(seed, Py_ssize_t n, double[::1] cuts, double[::1] probs):
    """Number of published studies out of n draws.

    ``cuts`` are the ascending cumulative-probability cut points between
    the m intervals (length m - 1); ``probs`` the per-interval acceptance
    probabilities (length m). Study i draws its position from unit stream
    index 2i and its acceptance from 2i + 1.
    """
    cdef uint64_t s = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    cdef Py_ssize_t ncuts = cuts.shape[0]
    cdef Py_ssize_t i, lo, hi, mid
    cdef long long published = 0
    cdef double u, v

    if probs.shape[0] != ncuts + 1:
        raise ValueError("probs must have one more entry than cuts")

    with nogil:
        for i in range(n):
            u = unit(s, 2 * <uint64_t> i)
            v = unit(s, 2 * <uint64_t> i + 1)
            # bisect_right: first cut strictly greater than u
            lo = 0
            hi = ncuts
            while lo < hi:
                mid = (lo + hi) >> 1
                if u >= cuts[mid]:
                    lo = mid + 1
                else:
                    hi = mid
            if v < probs[lo]:
                published += 1
    return published
