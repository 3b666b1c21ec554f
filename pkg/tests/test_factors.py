"""Longest unbordered factor: oracle, scan, and the witness lists."""

import numpy as np
import pytest

import oracles
from unbordered import (
    EmptyInputError,
    FactorSpan,
    SymbolString,
    brute_force_longest_unbordered,
    maximal_unbordered_factors,
    sample_string,
    scan_longest_unbordered,
    shortest_period,
    is_unbordered,
)

S = SymbolString.from_text


def symbols(text):
    vals = oracles.as_symbols(text)
    return SymbolString.from_symbols(vals, max(vals) + 1)


def test_worked_example():
    s = S("1011001101")
    for res in (brute_force_longest_unbordered(s), scan_longest_unbordered(s)):
        assert res.length == 6
        assert res.witness.as_tuple() == (1, 6)


def test_trivial_examples():
    res = brute_force_longest_unbordered(symbols("aaaa"))
    assert (res.length, res.witness.as_tuple()) == (1, (1, 1))
    res = brute_force_longest_unbordered(symbols("ab"))
    assert (res.length, res.witness.as_tuple()) == (2, (1, 2))
    res = scan_longest_unbordered(symbols("abab"))
    assert (res.length, res.witness.as_tuple()) == (2, (1, 2))
    res = scan_longest_unbordered(symbols("a"))
    assert (res.length, res.witness.as_tuple()) == (1, (1, 1))


def test_empty_raises():
    for op in (brute_force_longest_unbordered, scan_longest_unbordered,
               maximal_unbordered_factors):
        with pytest.raises(EmptyInputError):
            op(S(""))


def test_algorithm_tags():
    s = S("0110")
    assert brute_force_longest_unbordered(s).algorithm == "brute"
    assert scan_longest_unbordered(s).algorithm == "scan"


def test_brute_matches_definition_oracle():
    # up to n = 10 against the direct factor-by-factor check
    for n in range(1, 11):
        for bits in oracles.binary_strings(n):
            got = brute_force_longest_unbordered(SymbolString.from_symbols(bits, 2))
            length, start0 = oracles.max_unbordered_brute(bits)
            assert got.length == length
            assert got.witness.start == start0 + 1


def test_scan_matches_brute_exhaustive_binary():
    for n in range(1, 15):
        for bits in oracles.binary_strings(n):
            s = SymbolString.from_symbols(bits, 2)
            brute = brute_force_longest_unbordered(s)
            scan = scan_longest_unbordered(s)
            assert scan.length == brute.length, bits
            assert scan.witness == brute.witness, bits


@pytest.mark.parametrize("sigma", [2, 3, 4])
def test_scan_matches_brute_random(sigma):
    rng = np.random.default_rng(1234 + sigma)
    for _ in range(10_000):
        n = int(rng.integers(1, 65))
        s = sample_string(sigma, n, rng)
        brute = brute_force_longest_unbordered(s)
        scan = scan_longest_unbordered(s)
        assert scan.length == brute.length
        assert scan.witness == brute.witness


def test_length_never_exceeds_period():
    rng = np.random.default_rng(99)
    for _ in range(2000):
        sigma = int(rng.integers(2, 5))
        s = sample_string(sigma, int(rng.integers(1, 80)), rng)
        assert scan_longest_unbordered(s).length <= shortest_period(s)


def test_witness_factor_is_unbordered():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        s = sample_string(2, int(rng.integers(1, 64)), rng)
        res = scan_longest_unbordered(s)
        assert res.witness.length == res.length
        assert is_unbordered(s.factor(res.witness))


def test_maximal_factors_worked_example():
    spans = maximal_unbordered_factors(S("1011001101"))
    assert [sp.as_tuple() for sp in spans] == [(1, 6), (5, 10)]


def test_maximal_factors_trivial():
    assert [sp.as_tuple() for sp in maximal_unbordered_factors(symbols("ab"))] == [(1, 2)]
    assert [sp.as_tuple() for sp in maximal_unbordered_factors(symbols("aaaa"))] == [
        (1, 1), (2, 2), (3, 3), (4, 4)]


def test_maximal_factors_matches_oracle():
    for n in range(1, 12):
        for bits in oracles.binary_strings(n):
            s = SymbolString.from_symbols(bits, 2)
            got = [sp.as_tuple() for sp in maximal_unbordered_factors(s)]
            assert got == oracles.all_maximal_spans_brute(bits), bits


def test_maximal_factors_all_unbordered_and_longer_all_bordered():
    rng = np.random.default_rng(17)
    for _ in range(300):
        s = sample_string(2, int(rng.integers(2, 40)), rng)
        spans = maximal_unbordered_factors(s)
        length = spans[0].length
        for sp in spans:
            assert sp.length == length
            assert is_unbordered(s.factor(sp))
        for i in range(1, len(s) - length + 1):
            assert not is_unbordered(s.factor(FactorSpan(i, i + length)))


def test_scan_start_counter_within_contract():
    rng = np.random.default_rng(23)
    for _ in range(2000):
        s = sample_string(2, int(rng.integers(1, 100)), rng)
        res = scan_longest_unbordered(s)
        assert res.starts_processed <= len(s) - res.length + 2
