"""Pure-Python fallback for the hot string kernels.

Call-compatible with the compiled module ``unbordered._kernels``. Symbols
are handled as plain Python ints; callers pass anything convertible to a
1-D integer array. Correct but much slower than the extension, see
benchmarks/bench_kernels.py.
"""

import numpy as np

BACKEND_NAME = "python"


def _as_list(symbols):
    return np.asarray(symbols, dtype=np.int64).tolist()


def failure_table(symbols):
    """Longest proper border length for every prefix (int64 array).

    Entry k holds the border length of the prefix of length k + 1.
    """
    s = _as_list(symbols)
    n = len(s)
    pi = [0] * n
    k = 0
    for i in range(1, n):
        c = s[i]
        while k > 0 and s[k] != c:
            k = pi[k - 1]
        if s[k] == c:
            k += 1
        pi[i] = k
    return np.asarray(pi, dtype=np.int64)


def scan_max_unbordered(symbols):
    """Longest unbordered factor by scanning start positions left to right.

    For each start the failure table of the remaining suffix is built and
    the largest unbordered prefix recorded; the scan stops once the
    remaining suffix cannot beat the best length found so far.

    Returns (length, start0, starts_processed, work) where start0 is the
    0-based leftmost witness start and work counts symbols touched.
    """
    s = _as_list(symbols)
    n = len(s)
    pi = [0] * n
    best = 0
    best_start = 0
    starts = 0
    work = 0
    for i0 in range(n):
        if n - i0 <= best:
            break
        starts += 1
        m = n - i0
        work += m
        k = 0
        top = 1
        for j in range(1, m):
            c = s[i0 + j]
            while k > 0 and s[i0 + k] != c:
                k = pi[k - 1]
            if s[i0 + k] == c:
                k += 1
            pi[j] = k
            if k == 0:
                top = j + 1
        if top > best:
            best = top
            best_start = i0
    return best, best_start, starts, work


def brute_max_unbordered(symbols):
    """Longest unbordered factor with no early stop: every start is scanned.

    Returns (length, start0) with the leftmost witness.
    """
    s = _as_list(symbols)
    n = len(s)
    pi = [0] * n
    best = 0
    best_start = 0
    for i0 in range(n):
        m = n - i0
        k = 0
        top = 1
        for j in range(1, m):
            c = s[i0 + j]
            while k > 0 and s[i0 + k] != c:
                k = pi[k - 1]
            if s[i0 + k] == c:
                k += 1
            pi[j] = k
            if k == 0:
                top = j + 1
        if top > best:
            best = top
            best_start = i0
    return best, best_start


def trial_stats(symbols):
    """One-pass per-sample statistics for the Monte Carlo harness.

    Returns (max_unbordered_len, period, shortest_border_len). The full
    failure table doubles as the scan of start position 0.
    """
    s = _as_list(symbols)
    n = len(s)
    pi = [0] * n
    k = 0
    top = 1
    for i in range(1, n):
        c = s[i]
        while k > 0 and s[k] != c:
            k = pi[k - 1]
        if s[k] == c:
            k += 1
        pi[i] = k
        if k == 0:
            top = i + 1
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
        m = n - i0
        k = 0
        top = 1
        for j in range(1, m):
            c = s[i0 + j]
            while k > 0 and s[i0 + k] != c:
                k = pi[k - 1]
            if s[i0 + k] == c:
                k += 1
            pi[j] = k
            if k == 0:
                top = j + 1
        if top > best:
            best = top
    return best, period, shortest
