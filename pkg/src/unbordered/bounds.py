"""Analytic bound functions for delta = n - L over uniformly random strings.

Everything is driven by the closed-form upper bound on the moment
generating function E[exp(t * delta)],

    mgf_bound(sigma, t) = (s^3 - s^2 e^{2t}) / (s^3 - 2 s^2 e^{2t} + e^{4t}),

valid for alphabet size sigma >= 2 and 0 <= t <= 0.1 * ln(sigma). The
mean bound optimizes (mgf_bound - 1) / t over t, the tail bound optimizes
mgf_bound * exp(-t * ell) (a Chernoff/Markov step), and the matching
lower bound on the mean is P(first symbol = last symbol) = 1 / sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AlphabetTooSmallError, OutOfDomainError

# The optimizer grid starts just above 0 to skip the removable singularity
# of (mgf_bound - 1) / t.
_GRID_POINTS = 1024
_GRID_START = 1e-6
_T_SLACK = 1e-12  # tolerate one ulp of rounding at the domain endpoint


def t_max(sigma: int) -> float:
    """Upper end of the valid exponent range, 0.1 * ln(sigma)."""
    _require_sigma(sigma)
    return 0.1 * math.log(sigma)


def _require_sigma(sigma: int) -> None:
    if sigma < 2:
        raise AlphabetTooSmallError(f"bounds require sigma >= 2, got {sigma}")


def mgf_bound(sigma: int, t: float) -> float:
    """Closed-form upper bound on E[exp(t * delta)], any string length."""
    _require_sigma(sigma)
    hi = 0.1 * math.log(sigma)
    if t < 0 or t > hi + _T_SLACK:
        raise OutOfDomainError(f"t={t} outside [0, 0.1*ln({sigma})] = [0, {hi:.6g}]")
    x = math.exp(2.0 * t)
    s2 = float(sigma) * sigma
    s3 = s2 * sigma
    return (s3 - s2 * x) / (s3 - 2.0 * s2 * x + x * x)


def _grid_golden_min(f, lo: float, hi: float):
    """Minimize f on [lo, hi]: dense grid, then golden-section refinement.

    The grid guards against non-unimodality; golden section then narrows
    the best bracket. Returns (t_star, f(t_star)).
    """
    step = (hi - lo) / (_GRID_POINTS - 1)
    best_k = 0
    best_v = math.inf
    for k in range(_GRID_POINTS):
        v = f(lo + k * step)
        if v < best_v:
            best_v = v
            best_k = k
    a = lo + max(best_k - 1, 0) * step
    b = lo + min(best_k + 1, _GRID_POINTS - 1) * step
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(80):
        if b - a < 1e-14:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    if best_v < fc and best_v < fd:
        return lo + best_k * step, best_v
    return (c, fc) if fc < fd else (d, fd)


def mean_delta_upper_bound(sigma: int) -> float:
    """min over t in (0, 0.1 ln sigma] of (mgf_bound(sigma, t) - 1) / t."""
    _require_sigma(sigma)
    hi = t_max(sigma)

    def objective(t: float) -> float:
        return (mgf_bound(sigma, t) - 1.0) / t

    _, value = _grid_golden_min(objective, _GRID_START, hi)
    return value


def delta_tail_bound(sigma: int, ell: int) -> float:
    """Upper bound on P(delta >= ell): min(1, min_t mgf_bound * e^{-t*ell})."""
    _require_sigma(sigma)
    if ell < 0:
        raise OutOfDomainError(f"ell must be >= 0, got {ell}")
    hi = t_max(sigma)

    def objective(t: float) -> float:
        return mgf_bound(sigma, t) * math.exp(-t * ell)

    _, value = _grid_golden_min(objective, _GRID_START, hi)
    return min(1.0, value)


def mean_delta_lower_bound(sigma: int, n: int) -> float:
    """Lower bound 1/sigma on E[delta] for n >= 2 (0 below that).

    delta >= 1 exactly when the string is bordered, and a border of length
    1 alone occurs with probability 1/sigma.
    """
    _require_sigma(sigma)
    if n < 2:
        return 0.0
    return 1.0 / sigma


@dataclass(frozen=True)
class BoundEvaluation:
    """mgf_bound evaluated at one (sigma, t) point, with derived bounds."""

    sigma: int
    t: float
    c_of_t: float

    @classmethod
    def at(cls, sigma: int, t: float) -> "BoundEvaluation":
        return cls(sigma=sigma, t=t, c_of_t=mgf_bound(sigma, t))

    def expectation_bound(self) -> float:
        """(c_of_t - 1) / t; undefined at t = 0."""
        if self.t <= 0:
            raise OutOfDomainError("expectation bound needs t > 0")
        return (self.c_of_t - 1.0) / self.t

    def tail(self, ell: int) -> float:
        """min(1, c_of_t * exp(-t * ell))."""
        if ell < 0:
            raise OutOfDomainError(f"ell must be >= 0, got {ell}")
        return min(1.0, self.c_of_t * math.exp(-self.t * ell))


def bounds_table(sigma: int, n: int = 2, ell_grid: tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64)) -> dict:
    """Summary used by the CLI: optimal t, bounds, and a tail-bound row."""
    _require_sigma(sigma)
    hi = t_max(sigma)
    t_star, exp_bound = _grid_golden_min(
        lambda t: (mgf_bound(sigma, t) - 1.0) / t, _GRID_START, hi
    )
    return {
        "sigma": sigma,
        "n": n,
        "t_star": t_star,
        "c_at_t_star": mgf_bound(sigma, t_star),
        "c_at_t_max": mgf_bound(sigma, hi),
        "expectation_bound": exp_bound,
        "lower_bound": mean_delta_lower_bound(sigma, n),
        "tail": {str(ell): delta_tail_bound(sigma, ell) for ell in ell_grid},
    }
