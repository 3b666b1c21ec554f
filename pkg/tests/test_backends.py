"""Compiled and pure-Python kernels must be interchangeable."""

import numpy as np
import pytest

from unbordered import _kernels_py

compiled = pytest.importorskip(
    "unbordered._kernels", reason="compiled extension not built"
)


def test_backend_names():
    assert _kernels_py.BACKEND_NAME == "python"
    assert compiled.BACKEND_NAME == "cython"


def test_parity_on_random_inputs():
    rng = np.random.default_rng(0)
    for _ in range(1500):
        sigma = int(rng.integers(1, 6))
        n = int(rng.integers(1, 60))
        a = rng.integers(0, sigma, n)
        assert compiled.failure_table(a).tolist() == _kernels_py.failure_table(a).tolist()
        assert compiled.scan_max_unbordered(a) == _kernels_py.scan_max_unbordered(a)
        assert compiled.brute_max_unbordered(a) == _kernels_py.brute_max_unbordered(a)
        assert compiled.trial_stats(a) == _kernels_py.trial_stats(a)


def test_parity_on_adversarial_runs():
    cases = [
        [0] * 50,
        [0, 1] * 30,
        [0] * 20 + [1] + [0] * 20,
        list(range(8)) * 5,
    ]
    for case in cases:
        a = np.asarray(case, dtype=np.int64)
        assert compiled.failure_table(a).tolist() == _kernels_py.failure_table(a).tolist()
        assert compiled.scan_max_unbordered(a) == _kernels_py.scan_max_unbordered(a)
        assert compiled.trial_stats(a) == _kernels_py.trial_stats(a)
