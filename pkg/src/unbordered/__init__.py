"""Maximal unbordered factors and shortest periods of strings.

Provides the border/period primitives, a brute-force oracle and an
early-stopping scan for the longest unbordered factor, reductions in both
directions between that problem and shortest-period computation, analytic
bound functions for the gap n - L on uniformly random strings, and a
seeded Monte Carlo harness that checks the bounds empirically.
"""

from ._backend import BACKEND
from .bounds import (
    BoundEvaluation,
    delta_tail_bound,
    mean_delta_lower_bound,
    mean_delta_upper_bound,
    mgf_bound,
    t_max,
)
from .core import (
    AlphabetSpec,
    FactorSpan,
    FailureTable,
    SymbolString,
    failure_table,
    is_unbordered,
    longest_border,
    shortest_border,
    shortest_period,
)
from .errors import (
    AlphabetTooSmallError,
    CheckFailedError,
    DomainError,
    EmptyInputError,
    OutOfDomainError,
    UnknownAlgorithmError,
    UnknownFormatError,
)
from .experiment import (
    ExperimentReport,
    RngSpec,
    TrialRecord,
    empirical_mgf,
    emit_report,
    parse_report,
    parse_trial_csv,
    run_experiment,
    sample_string,
)
from .factors import (
    UnborderedResult,
    brute_force_longest_unbordered,
    maximal_unbordered_factors,
    scan_longest_unbordered,
)
from .reductions import (
    ReductionConfig,
    ReductionOutcome,
    ReductionWitness,
    failure_table_period,
    gap_threshold,
    period_via_unbordered,
    sentineled_string,
    unbordered_via_period,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetSpec",
    "AlphabetTooSmallError",
    "BACKEND",
    "BoundEvaluation",
    "CheckFailedError",
    "DomainError",
    "EmptyInputError",
    "ExperimentReport",
    "FactorSpan",
    "FailureTable",
    "OutOfDomainError",
    "ReductionConfig",
    "ReductionOutcome",
    "ReductionWitness",
    "RngSpec",
    "SymbolString",
    "TrialRecord",
    "UnborderedResult",
    "UnknownAlgorithmError",
    "UnknownFormatError",
    "brute_force_longest_unbordered",
    "delta_tail_bound",
    "empirical_mgf",
    "emit_report",
    "failure_table",
    "failure_table_period",
    "gap_threshold",
    "is_unbordered",
    "longest_border",
    "maximal_unbordered_factors",
    "mean_delta_lower_bound",
    "mean_delta_upper_bound",
    "mgf_bound",
    "parse_report",
    "parse_trial_csv",
    "period_via_unbordered",
    "run_experiment",
    "sample_string",
    "scan_longest_unbordered",
    "sentineled_string",
    "shortest_border",
    "shortest_period",
    "t_max",
    "unbordered_via_period",
]
