"""Longest unbordered factor: brute-force oracle and start-position scan.

The scan processes start positions left to right, building one failure
table per remaining suffix, and stops as soon as the suffix left cannot
beat the best factor found. That gives O(n * (n - L + 1)) worst-case time
where L is the answer, at most n - L + 2 starts. The brute variant scans
every start and serves as the ground-truth oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .core import FactorSpan, SymbolString, _require_nonempty


@dataclass(frozen=True)
class UnborderedResult:
    """Maximum unbordered-factor length, one witness span, algorithm tag.

    starts_processed is the instrumented start counter of the scan
    (None for algorithms that do not early-stop).
    """

    length: int
    witness: FactorSpan
    algorithm: str
    starts_processed: int | None = None


def brute_force_longest_unbordered(s: SymbolString) -> UnborderedResult:
    """Check every start position, no early stop; leftmost witness.

    Quadratic and independent of the scan's stopping logic, intended as
    the oracle for n up to a few hundred.
    """
    _require_nonempty(s, "brute_force_longest_unbordered")
    length, start0 = kernels.brute_max_unbordered(s.symbols)
    return UnborderedResult(
        length=length,
        witness=FactorSpan(start0 + 1, start0 + length),
        algorithm="brute",
    )


def scan_longest_unbordered(s: SymbolString) -> UnborderedResult:
    """Same answer as the brute oracle with the early-stopping scan."""
    _require_nonempty(s, "scan_longest_unbordered")
    length, start0, starts, _work = kernels.scan_max_unbordered(s.symbols)
    return UnborderedResult(
        length=length,
        witness=FactorSpan(start0 + 1, start0 + length),
        algorithm="scan",
        starts_processed=starts,
    )


def maximal_unbordered_factors(s: SymbolString) -> list[FactorSpan]:
    """All spans of maximum unbordered length, left to right.

    Uses one failure table per start, so quadratic; intended for small n.
    """
    _require_nonempty(s, "maximal_unbordered_factors")
    n = len(s)
    length, _ = kernels.brute_max_unbordered(s.symbols)
    spans = []
    for i0 in range(n - length + 1):
        pi = kernels.failure_table(s.symbols[i0 : i0 + length])
        if int(pi[length - 1]) == 0:
            spans.append(FactorSpan(i0 + 1, i0 + length))
    return spans
