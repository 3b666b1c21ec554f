"""Slow definition-level oracles used to freeze expected values.

Everything here works by direct prefix/suffix comparison on tuples of
ints, independent of the failure-table machinery under test.
"""

from itertools import product


def as_symbols(text):
    table = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    return tuple(table.index(c) for c in text)


def proper_borders(s):
    n = len(s)
    return [l for l in range(1, n) if s[:l] == s[n - l :]]


def longest_border_brute(s):
    bs = proper_borders(s)
    return max(bs) if bs else 0


def shortest_border_brute(s):
    bs = proper_borders(s)
    return min(bs) if bs else len(s)


def failure_table_brute(s):
    return [longest_border_brute(s[: m + 1]) for m in range(len(s))]


def period_brute(s):
    n = len(s)
    for p in range(1, n + 1):
        if all(s[i] == s[i + p] for i in range(n - p)):
            return p
    return n


def is_unbordered_brute(s):
    return not proper_borders(s)


def max_unbordered_brute(s):
    """(length, leftmost 0-based start) by checking every factor."""
    n = len(s)
    best, best_start = 0, 0
    for i in range(n):
        for j in range(i, n):
            length = j - i + 1
            if length > best and is_unbordered_brute(s[i : j + 1]):
                best, best_start = length, i
    return best, best_start


def all_maximal_spans_brute(s):
    """All 1-based spans whose factors are unbordered of maximum length."""
    length, _ = max_unbordered_brute(s)
    spans = []
    for i in range(len(s) - length + 1):
        if is_unbordered_brute(s[i : i + length]):
            spans.append((i + 1, i + length))
    return spans


def binary_strings(n):
    return product((0, 1), repeat=n)
