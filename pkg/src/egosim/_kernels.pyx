# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled pairwise divergence kernel.

Must produce results bit-identical to ``egosim._fallback``: each pair is
summed in ascending component order with no fused multiply-add.
"""

import numpy as np
cimport openmp
from cython.parallel cimport prange


cdef inline double _pair(const double[:, ::1] p, const double[:, ::1] lp,
                         Py_ssize_t i, Py_ssize_t j, Py_ssize_t m) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t k
    for k in range(m):
        acc = acc + (p[i, k] - p[j, k]) * (lp[i, k] - lp[j, k])
    return acc


def symmetric_divergences(const double[:, ::1] probs, const double[:, ::1] logs,
                          const long long[::1] support, int threads=0):
    """Symmetric truncated divergence for every unordered pair of rows.

    Returns an ``(n, n)`` array with a zero diagonal.
    """
    cdef Py_ssize_t n = probs.shape[0]
    cdef Py_ssize_t i, j, m
    cdef double d
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    if threads <= 0:
        threads = openmp.omp_get_max_threads()
    for i in prange(n, nogil=True, num_threads=threads, schedule="dynamic"):
        for j in range(i + 1, n):
            m = support[i] if support[i] < support[j] else support[j]
            d = _pair(probs, logs, i, j, m)
            o[i, j] = d
            o[j, i] = d
    return out
