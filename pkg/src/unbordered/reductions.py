"""Reductions between longest-unbordered-factor and shortest-period.

Direction A (unbordered via period): when n > 6d for a threshold
d = O(log_sigma n), a maximal unbordered factor of a random string lives
within d of both ends with high probability. The reduction glues the two
3d-blocks at the ends into one string, measures three length gaps, and
either reads the answer off the glued string or falls back to the direct
scan. Correctness never depends on the probability argument: the gap
checks are verified at run time and the fallback recomputes the answer
exactly, so randomness affects running time only.

Direction B (period via unbordered): knowing the longest unbordered
factor length l, splice a sentinel between the prefix of length n - l and
the suffix starting at l + 1. Borders of length <= n - l survive the
splice and longer ones are blocked by the sentinel, so the period gap
n - per is preserved and one linear failure table finishes the job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._backend import kernels
from .bounds import mgf_bound, t_max
from .core import FactorSpan, SymbolString, _require_nonempty
from .errors import AlphabetTooSmallError, OutOfDomainError
from .factors import UnborderedResult, scan_longest_unbordered

PeriodBackend = Callable[[SymbolString], int]
UnborderedBackend = Callable[[SymbolString], UnborderedResult]


def gap_threshold(sigma: int, n: int, constant_factor: float = 10.0) -> int:
    """Threshold d with P(gap >= d) <= 1/n^2 for uniform random strings.

    Instantiates the tail bound at failure budget delta = 1/n^2:
    d = ceil(constant_factor * log_sigma(n^2 * mgf_bound(sigma, t_max))).
    """
    if sigma < 2:
        raise AlphabetTooSmallError(f"gap_threshold requires sigma >= 2, got {sigma}")
    if n < 1:
        raise OutOfDomainError(f"n must be >= 1, got {n}")
    c_end = mgf_bound(sigma, t_max(sigma))
    return math.ceil(constant_factor * math.log(n * n * c_end, sigma))


@dataclass(frozen=True)
class ReductionConfig:
    """Failure budget and gap threshold for the unbordered-via-period path.

    d normally derives from delta = 1/n^2 through gap_threshold; tests may
    force a small d to exercise the fallback, correctness is unaffected.
    """

    delta: float
    d: int
    constant_factor: float = 10.0

    def __post_init__(self) -> None:
        if not 0.0 < self.delta < 1.0:
            raise OutOfDomainError(f"delta must be in (0, 1), got {self.delta}")
        if self.d < 1:
            raise OutOfDomainError(f"d must be >= 1, got {self.d}")

    @classmethod
    def for_length(
        cls, sigma: int, n: int, constant_factor: float = 10.0
    ) -> "ReductionConfig":
        return cls(
            delta=1.0 / (n * n),
            d=gap_threshold(sigma, n, constant_factor),
            constant_factor=constant_factor,
        )


@dataclass(frozen=True)
class ReductionWitness:
    """The three derived strings and their measured gaps.

    ends:         first 3d symbols glued to the last 3d symbols (length 6d)
    interior:     the string with d symbols trimmed at each end (length n - 2d)
    trimmed_ends: ends with the outer d symbols removed per side (length 4d)
    gaps:         (len - L of ends, len - per of interior, len - per of trimmed_ends)
    """

    ends: SymbolString
    interior: SymbolString
    trimmed_ends: SymbolString
    gaps: tuple[int, int, int]


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of a reduction run.

    value is exact for every input; fallback_used records whether the gap
    checks forced the direct recomputation. span is the witness factor in
    the original string's coordinates when the value is a factor length.
    work_outside_period counts symbols touched outside the interior period
    call on the reduction path (None on the direct path).
    """

    value: int
    fallback_used: bool
    witness: ReductionWitness | None
    backend: str
    span: FactorSpan | None = None
    work_outside_period: int | None = None


def _backend_name(fn) -> str:
    return getattr(fn, "__name__", repr(fn))


def _period_raw(symbols: np.ndarray) -> int:
    pi = kernels.failure_table(symbols)
    return int(symbols.size) - int(pi[symbols.size - 1])


def failure_table_period(s: SymbolString) -> int:
    """Linear worst-case shortest period via one failure table."""
    _require_nonempty(s, "failure_table_period")
    return _period_raw(s.symbols)


def unbordered_via_period(
    s: SymbolString,
    cfg: ReductionConfig | None = None,
    period_backend: PeriodBackend | None = None,
    fallback_backend: UnborderedBackend | None = None,
) -> ReductionOutcome:
    """Longest unbordered factor length via one period call on the interior.

    For n <= 6d the fallback backend answers directly. Otherwise the three
    derived strings are built; if any measured gap exceeds d the fallback
    recomputes the answer, else the ends string determines it and its
    witness is mapped back into the original coordinates.
    """
    _require_nonempty(s, "unbordered_via_period")
    n = len(s)
    if cfg is None:
        cfg = ReductionConfig.for_length(s.alphabet.sigma, n)
    if period_backend is None:
        period_backend = failure_table_period
    if fallback_backend is None:
        fallback_backend = scan_longest_unbordered
    d = cfg.d

    if n <= 6 * d:
        direct = fallback_backend(s)
        return ReductionOutcome(
            value=direct.length,
            fallback_used=False,
            witness=None,
            backend=_backend_name(fallback_backend),
            span=direct.witness,
        )

    sym = s.symbols
    ends_arr = np.concatenate([sym[: 3 * d], sym[n - 3 * d :]])
    trimmed_arr = np.concatenate([sym[d : 3 * d], sym[n - 3 * d : n - d]])
    ends = SymbolString(ends_arr, s.alphabet)
    interior = SymbolString(sym[d : n - d], s.alphabet)
    trimmed_ends = SymbolString(trimmed_arr, s.alphabet)

    ends_len, ends_start0, _starts, scan_work = kernels.scan_max_unbordered(ends_arr)
    gap_ends = 6 * d - ends_len
    gap_interior = len(interior) - period_backend(interior)
    gap_trimmed = 4 * d - _period_raw(trimmed_arr)
    witness = ReductionWitness(
        ends=ends,
        interior=interior,
        trimmed_ends=trimmed_ends,
        gaps=(gap_ends, gap_interior, gap_trimmed),
    )
    # Copies of the two end blocks, the scan itself, and the failure table
    # of trimmed_ends; the interior period call is excluded by contract.
    work = 6 * d + 4 * d + int(scan_work) + 4 * d

    if gap_ends > d or gap_interior > d or gap_trimmed > d:
        fb = fallback_backend(s)
        return ReductionOutcome(
            value=fb.length,
            fallback_used=True,
            witness=witness,
            backend=_backend_name(fallback_backend),
            span=fb.witness,
            work_outside_period=work,
        )

    # Gap equality: the ends witness S[i, 3d] S[n-3d+1, j] corresponds to
    # the unbordered factor S[i, j] of the original string.
    start = ends_start0 + 1
    end = ends_start0 + ends_len + (n - 6 * d)
    return ReductionOutcome(
        value=n - gap_ends,
        fallback_used=False,
        witness=witness,
        backend=_backend_name(period_backend),
        span=FactorSpan(start, end),
        work_outside_period=work,
    )


def sentineled_string(s: SymbolString, unbordered_len: int) -> SymbolString:
    """Prefix of length n - l, the sentinel, then the suffix from l + 1.

    l = unbordered_len. Both flanks are empty when l = n, leaving just the
    sentinel.
    """
    n = len(s)
    if not 1 <= unbordered_len <= n:
        raise OutOfDomainError(
            f"unbordered length {unbordered_len} outside [1, {n}]"
        )
    sentinel = np.asarray([s.alphabet.sentinel], dtype=np.int64)
    joined = np.concatenate(
        [s.symbols[: n - unbordered_len], sentinel, s.symbols[unbordered_len:]]
    )
    return SymbolString(joined, s.alphabet)


def period_via_unbordered(
    s: SymbolString,
    unbordered_backend: UnborderedBackend | None = None,
) -> ReductionOutcome:
    """Shortest period from one longest-unbordered-factor computation.

    The sentineled string preserves the gap n - per, so
    per(s) = n - (len(sentineled) - per(sentineled)).
    """
    _require_nonempty(s, "period_via_unbordered")
    if unbordered_backend is None:
        unbordered_backend = scan_longest_unbordered
    n = len(s)
    result = unbordered_backend(s)
    spliced = sentineled_string(s, result.length)
    gap = len(spliced) - _period_raw(spliced.symbols)
    return ReductionOutcome(
        value=n - gap,
        fallback_used=False,
        witness=None,
        backend=_backend_name(unbordered_backend),
        span=result.witness,
    )
