# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled string kernels: failure tables and unbordered-factor scans.

Mirrors unbordered._kernels_py; see that module for the semantics of each
function. Inputs are converted to contiguous int64 arrays once, the loops
run without the GIL.
"""

import numpy as np

BACKEND_NAME = "cython"


cdef inline void _fill_failure(const long long[::1] s, Py_ssize_t i0,
                               Py_ssize_t m, long long[::1] pi,
                               Py_ssize_t* top) noexcept nogil:
    # Failure table of s[i0 : i0 + m] written into pi[0 : m]; *top receives
    # the largest prefix length with border 0.
    cdef Py_ssize_t j
    cdef long long k = 0
    cdef long long c
    pi[0] = 0
    top[0] = 1
    for j in range(1, m):
        c = s[i0 + j]
        while k > 0 and s[i0 + k] != c:
            k = pi[k - 1]
        if s[i0 + k] == c:
            k += 1
        pi[j] = k
        if k == 0:
            top[0] = j + 1


def failure_table(symbols):
    """Longest proper border length for every prefix (int64 array)."""
    arr = np.ascontiguousarray(symbols, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    out = np.zeros(n, dtype=np.int64)
    if n == 0:
        return out
    cdef const long long[::1] s = arr
    cdef long long[::1] pi = out
    cdef Py_ssize_t top
    with nogil:
        _fill_failure(s, 0, n, pi, &top)
    return out


def scan_max_unbordered(symbols):
    """Leftmost longest unbordered factor with early stopping.

    Returns (length, start0, starts_processed, work).
    """
    arr = np.ascontiguousarray(symbols, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    if n == 0:
        return 0, 0, 0, 0
    cdef const long long[::1] s = arr
    scratch = np.zeros(n, dtype=np.int64)
    cdef long long[::1] pi = scratch
    cdef Py_ssize_t i0, top
    cdef Py_ssize_t best = 0, best_start = 0, starts = 0
    cdef long long work = 0
    with nogil:
        for i0 in range(n):
            if n - i0 <= best:
                break
            starts += 1
            work += n - i0
            _fill_failure(s, i0, n - i0, pi, &top)
            if top > best:
                best = top
                best_start = i0
    return best, best_start, starts, work


def brute_max_unbordered(symbols):
    """Leftmost longest unbordered factor, every start scanned.

    Returns (length, start0).
    """
    arr = np.ascontiguousarray(symbols, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    if n == 0:
        return 0, 0
    cdef const long long[::1] s = arr
    scratch = np.zeros(n, dtype=np.int64)
    cdef long long[::1] pi = scratch
    cdef Py_ssize_t i0, top
    cdef Py_ssize_t best = 0, best_start = 0
    with nogil:
        for i0 in range(n):
            _fill_failure(s, i0, n - i0, pi, &top)
            if top > best:
                best = top
                best_start = i0
    return best, best_start


def trial_stats(symbols):
    """(max_unbordered_len, period, shortest_border_len) in one pass."""
    arr = np.ascontiguousarray(symbols, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    if n == 0:
        return 0, 0, 0
    cdef const long long[::1] s = arr
    scratch = np.zeros(n, dtype=np.int64)
    cdef long long[::1] pi = scratch
    cdef Py_ssize_t i0, top
    cdef Py_ssize_t best, period, shortest
    cdef long long b
    with nogil:
        _fill_failure(s, 0, n, pi, &top)
        period = n - pi[n - 1]
        b = pi[n - 1]
        if b == 0:
            shortest = n
        else:
            while pi[b - 1] != 0:
                b = pi[b - 1]
            shortest = b
        best = top
        for i0 in range(1, n):
            if n - i0 <= best:
                break
            _fill_failure(s, i0, n - i0, pi, &top)
            if top > best:
                best = top
    return best, period, shortest
