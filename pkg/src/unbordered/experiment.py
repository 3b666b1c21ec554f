"""Seeded Monte Carlo experiments on the delta = n - L distribution.

Each trial samples a uniform random string, measures delta, the period
and the shortest border, and the aggregate report compares the empirical
mean, tail and moment generating function against the analytic bounds
with a 3-standard-error slack. Per-trial seeds are derived by hashing
(master_seed, trial_index), so reports are bit-identical for a given
RngSpec no matter how trials are scheduled.
"""

from __future__ import annotations

import io
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .bounds import (
    delta_tail_bound,
    mean_delta_lower_bound,
    mean_delta_upper_bound,
    mgf_bound,
    t_max,
)
from .core import AlphabetSpec, SymbolString
from .errors import (
    AlphabetTooSmallError,
    CheckFailedError,
    OutOfDomainError,
    UnknownAlgorithmError,
    UnknownFormatError,
)
from .factors import brute_force_longest_unbordered
from .reductions import ReductionConfig, unbordered_via_period

DEFAULT_ELL_GRID = (1, 2, 4, 8, 16, 32, 64)
DEFAULT_T_FRACTIONS = (0.25, 0.5, 1.0)
AUDIT_STRIDE = 100  # 1% of trials are re-checked against the brute oracle
AUDIT_MAX_N = 2000


@dataclass(frozen=True)
class RngSpec:
    """Master seed plus the per-trial derivation rule."""

    master_seed: int

    def trial_seed(self, trial_index: int) -> np.random.SeedSequence:
        return np.random.SeedSequence(entropy=(self.master_seed, trial_index))

    def trial_rng(self, trial_index: int) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.trial_seed(trial_index)))


def sample_string(sigma: int, n: int, seed) -> SymbolString:
    """Uniform random string over an alphabet of size sigma, deterministic
    per seed. seed may be an int, SeedSequence or Generator."""
    if sigma < 1:
        raise AlphabetTooSmallError(f"sigma must be >= 1, got {sigma}")
    if n < 0:
        raise OutOfDomainError(f"n must be >= 0, got {n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return SymbolString(rng.integers(0, sigma, size=n, dtype=np.int64), AlphabetSpec(sigma))


@dataclass(frozen=True)
class TrialRecord:
    """Per-sample measurements; matches the CSV row schema."""

    trial_index: int
    delta: int
    l_value: int
    per_value: int
    f_value: int
    fallback_used: bool
    side_work: int | None = None  # reduction accounting, not serialized


@dataclass(frozen=True)
class BoundComparison:
    """One empirical-vs-analytic row with its 3-SE slack and pass flag."""

    name: str
    empirical: float
    bound: float
    slack: float
    passed: bool


@dataclass
class ExperimentReport:
    sigma: int
    n: int
    trials: int
    algo: str
    master_seed: int
    mean_delta: float
    se_delta: float
    ell_grid: list[int]
    tail_empirical: list[float]
    t_grid: list[float]
    mgf_empirical: list[float]
    comparisons: list[BoundComparison]
    fallback_count: int
    elapsed_seconds: float = field(compare=False, default=0.0)
    records: list[TrialRecord] = field(compare=False, repr=False, default_factory=list)


def empirical_mgf(records: list[TrialRecord], t: float, sigma: int) -> float:
    """Sample mean of exp(t * delta) over the records.

    sigma fixes the valid exponent range [0, 0.1 ln sigma].
    """
    if not records:
        raise OutOfDomainError("empirical_mgf needs at least one record")
    hi = t_max(sigma)
    if t < 0 or t > hi + 1e-12:
        raise OutOfDomainError(f"t={t} outside [0, {hi:.6g}]")
    deltas = np.asarray([r.delta for r in records], dtype=np.float64)
    return float(np.mean(np.exp(t * deltas)))


def _run_trial_scan(sigma: int, n: int, rng_spec: RngSpec, index: int) -> TrialRecord:
    s = sample_string(sigma, n, rng_spec.trial_rng(index))
    l_value, per_value, f_value = kernels.trial_stats(s.symbols)
    return TrialRecord(
        trial_index=index,
        delta=n - l_value,
        l_value=l_value,
        per_value=per_value,
        f_value=f_value,
        fallback_used=False,
    )


def _run_trial_reduction(
    sigma: int, n: int, rng_spec: RngSpec, index: int, cfg: ReductionConfig
) -> TrialRecord:
    s = sample_string(sigma, n, rng_spec.trial_rng(index))
    outcome = unbordered_via_period(s, cfg)
    pi = kernels.failure_table(s.symbols)
    per_value = n - int(pi[n - 1])
    b = int(pi[n - 1])
    if b == 0:
        f_value = n
    else:
        while int(pi[b - 1]) != 0:
            b = int(pi[b - 1])
        f_value = b
    return TrialRecord(
        trial_index=index,
        delta=n - outcome.value,
        l_value=outcome.value,
        per_value=per_value,
        f_value=f_value,
        fallback_used=outcome.fallback_used,
        side_work=outcome.work_outside_period,
    )


def run_experiment(
    sigma: int,
    n: int,
    trials: int,
    rng: RngSpec,
    algo: str = "scan",
    *,
    ell_grid: tuple[int, ...] | None = None,
    t_grid: tuple[float, ...] | None = None,
    workers: int = 1,
    check: bool = False,
    config: ReductionConfig | None = None,
) -> ExperimentReport:
    """Run the Monte Carlo experiment and aggregate the report.

    algo selects how L is computed per trial: "scan", "reduction" or
    "brute". With check=True, a 1% subsample is re-verified against the
    brute oracle (for n <= 2000) and every bound comparison must pass,
    else CheckFailedError is raised.
    """
    if sigma < 2:
        raise AlphabetTooSmallError(f"experiments require sigma >= 2, got {sigma}")
    if n < 1 or trials < 1:
        raise OutOfDomainError("n and trials must be >= 1")
    if algo not in ("scan", "reduction", "brute"):
        raise UnknownAlgorithmError(f"unknown algorithm tag {algo!r}")

    started = time.perf_counter()
    if algo == "reduction":
        cfg = config if config is not None else ReductionConfig.for_length(sigma, n)

        def one(i: int) -> TrialRecord:
            return _run_trial_reduction(sigma, n, rng, i, cfg)

    elif algo == "brute":

        def one(i: int) -> TrialRecord:
            s = sample_string(sigma, n, rng.trial_rng(i))
            res = brute_force_longest_unbordered(s)
            l_value, per_value, f_value = res.length, *_per_and_f(s.symbols)
            return TrialRecord(i, n - l_value, l_value, per_value, f_value, False)

    else:

        def one(i: int) -> TrialRecord:
            return _run_trial_scan(sigma, n, rng, i)

    records: list[TrialRecord | None] = [None] * trials
    if workers <= 1:
        for i in range(trials):
            records[i] = one(i)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for i, rec in enumerate(pool.map(one, range(trials))):
                records[i] = rec
    records = list(records)  # all slots filled; order fixed by index

    deltas = np.asarray([r.delta for r in records], dtype=np.float64)
    mean_delta = float(np.mean(deltas))
    se_delta = float(np.std(deltas, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0

    ells = list(ell_grid if ell_grid is not None else DEFAULT_ELL_GRID)
    hi = t_max(sigma)
    ts = list(t_grid if t_grid is not None else [f * hi for f in DEFAULT_T_FRACTIONS])

    comparisons: list[BoundComparison] = []
    lower = mean_delta_lower_bound(sigma, n)
    upper = mean_delta_upper_bound(sigma)
    slack = 3.0 * se_delta
    comparisons.append(
        BoundComparison("mean_lower", mean_delta, lower, slack, mean_delta >= lower - slack)
    )
    comparisons.append(
        BoundComparison("mean_upper", mean_delta, upper, slack, mean_delta <= upper + slack)
    )

    tail_empirical = []
    for ell in ells:
        p_hat = float(np.mean(deltas >= ell))
        tail_empirical.append(p_hat)
        se = math.sqrt(p_hat * (1.0 - p_hat) / trials)
        bound = delta_tail_bound(sigma, ell)
        comparisons.append(
            BoundComparison(
                f"tail_ell_{ell}", p_hat, bound, 3.0 * se, p_hat <= bound + 3.0 * se
            )
        )

    mgf_empirical = []
    for t in ts:
        values = np.exp(t * deltas)
        m_hat = float(np.mean(values))
        mgf_empirical.append(m_hat)
        se = float(np.std(values, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
        bound = mgf_bound(sigma, t)
        comparisons.append(
            BoundComparison(
                f"mgf_t_{t:.6g}", m_hat, bound, 3.0 * se, m_hat <= bound + 3.0 * se
            )
        )

    report = ExperimentReport(
        sigma=sigma,
        n=n,
        trials=trials,
        algo=algo,
        master_seed=rng.master_seed,
        mean_delta=mean_delta,
        se_delta=se_delta,
        ell_grid=ells,
        tail_empirical=tail_empirical,
        t_grid=ts,
        mgf_empirical=mgf_empirical,
        comparisons=comparisons,
        fallback_count=sum(1 for r in records if r.fallback_used),
        elapsed_seconds=time.perf_counter() - started,
        records=records,
    )

    if check:
        _audit(report, rng)
    return report


def _per_and_f(symbols: np.ndarray) -> tuple[int, int]:
    n = int(symbols.size)
    pi = kernels.failure_table(symbols)
    per_value = n - int(pi[n - 1])
    b = int(pi[n - 1])
    if b == 0:
        return per_value, n
    while int(pi[b - 1]) != 0:
        b = int(pi[b - 1])
    return per_value, b


def _audit(report: ExperimentReport, rng: RngSpec) -> None:
    """Re-verify a subsample against the brute oracle and the bound rows."""
    if report.n <= AUDIT_MAX_N:
        for rec in report.records[::AUDIT_STRIDE]:
            s = sample_string(report.sigma, report.n, rng.trial_rng(rec.trial_index))
            oracle = brute_force_longest_unbordered(s)
            if oracle.length != rec.l_value:
                raise CheckFailedError(
                    f"trial {rec.trial_index}: algorithm reported L={rec.l_value}, "
                    f"oracle found {oracle.length}"
                )
    failed = [c.name for c in report.comparisons if not c.passed]
    if failed:
        raise CheckFailedError(f"bound comparisons failed: {', '.join(failed)}")


CSV_HEADER = "trial,delta,l,per,f,fallback"


def emit_report(report: ExperimentReport, format: str) -> bytes:
    """Serialize the report: per-trial CSV rows or the JSON summary."""
    if format == "csv":
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for r in report.records:
            fb = "true" if r.fallback_used else "false"
            buf.write(
                f"{r.trial_index},{r.delta},{r.l_value},{r.per_value},{r.f_value},{fb}\n"
            )
        return buf.getvalue().encode()
    if format == "json":
        payload = {
            "sigma": report.sigma,
            "n": report.n,
            "trials": report.trials,
            "algo": report.algo,
            "master_seed": report.master_seed,
            "mean_delta": report.mean_delta,
            "se_delta": report.se_delta,
            "ell_grid": report.ell_grid,
            "tail_empirical": report.tail_empirical,
            "t_grid": report.t_grid,
            "mgf_empirical": report.mgf_empirical,
            "comparisons": [
                {
                    "name": c.name,
                    "empirical": c.empirical,
                    "bound": c.bound,
                    "slack": c.slack,
                    "passed": c.passed,
                }
                for c in report.comparisons
            ],
            "fallback_count": report.fallback_count,
            "elapsed_seconds": report.elapsed_seconds,
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    raise UnknownFormatError(f"unknown report format {format!r}")


def parse_report(data: bytes | str) -> ExperimentReport:
    """Rebuild an ExperimentReport from its JSON summary (records empty)."""
    obj = json.loads(data)
    return ExperimentReport(
        sigma=obj["sigma"],
        n=obj["n"],
        trials=obj["trials"],
        algo=obj["algo"],
        master_seed=obj["master_seed"],
        mean_delta=obj["mean_delta"],
        se_delta=obj["se_delta"],
        ell_grid=list(obj["ell_grid"]),
        tail_empirical=list(obj["tail_empirical"]),
        t_grid=list(obj["t_grid"]),
        mgf_empirical=list(obj["mgf_empirical"]),
        comparisons=[
            BoundComparison(
                name=c["name"],
                empirical=c["empirical"],
                bound=c["bound"],
                slack=c["slack"],
                passed=c["passed"],
            )
            for c in obj["comparisons"]
        ],
        fallback_count=obj["fallback_count"],
        elapsed_seconds=obj["elapsed_seconds"],
    )


def parse_trial_csv(data: bytes | str) -> list[TrialRecord]:
    """Rebuild the per-trial records from CSV produced by emit_report."""
    text = data.decode() if isinstance(data, bytes) else data
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise UnknownFormatError("missing or malformed CSV header")
    out = []
    for ln in lines[1:]:
        trial, delta, l, per, f, fb = ln.split(",")
        out.append(
            TrialRecord(
                trial_index=int(trial),
                delta=int(delta),
                l_value=int(l),
                per_value=int(per),
                f_value=int(f),
                fallback_used=fb == "true",
            )
        )
    return out
