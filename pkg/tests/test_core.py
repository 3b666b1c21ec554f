"""String types and border/period primitives."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from unbordered import (
    AlphabetSpec,
    AlphabetTooSmallError,
    EmptyInputError,
    FactorSpan,
    OutOfDomainError,
    SymbolString,
    failure_table,
    is_unbordered,
    longest_border,
    shortest_border,
    shortest_period,
)

S = SymbolString.from_text


def symbols(text, sigma=None):
    vals = oracles.as_symbols(text)
    return SymbolString.from_symbols(vals, sigma or max(vals, default=0) + 1)


small_binary = st.lists(st.integers(0, 1), min_size=1, max_size=24)


class TestTypes:
    def test_alphabet_requires_positive_sigma(self):
        with pytest.raises(AlphabetTooSmallError):
            AlphabetSpec(0)

    def test_symbols_must_fit_alphabet(self):
        with pytest.raises(OutOfDomainError):
            SymbolString.from_symbols([0, 3], sigma=2)

    def test_sentinel_value_is_allowed(self):
        s = SymbolString.from_symbols([0, 2, 1], sigma=2)  # 2 = sentinel
        assert s.to_text() == "0$1"

    def test_from_text_infers_smallest_alphabet(self):
        assert S("1011001101").alphabet.sigma == 2
        assert S("abab").alphabet.sigma == 12

    def test_from_text_rejects_symbol_outside_sigma(self):
        with pytest.raises(OutOfDomainError):
            SymbolString.from_text("012", sigma=2)

    def test_from_text_rejects_unknown_character(self):
        with pytest.raises(OutOfDomainError):
            SymbolString.from_text("0$1")

    def test_text_round_trip(self):
        for text in ("1011001101", "abcXYZ009", ""):
            assert S(text, sigma=62).to_text() == text

    def test_symbols_are_read_only(self):
        s = S("0101")
        with pytest.raises(ValueError):
            s.symbols[0] = 1

    def test_factor_spans_are_one_based_inclusive(self):
        s = S("1011001101")
        assert s.factor(FactorSpan(1, 6)) == S("101100")
        assert s.factor(FactorSpan(5, 10)) == S("001101")
        with pytest.raises(OutOfDomainError):
            s.factor(FactorSpan(5, 11))

    def test_span_validation(self):
        with pytest.raises(OutOfDomainError):
            FactorSpan(0, 3)
        with pytest.raises(OutOfDomainError):
            FactorSpan(4, 3)
        assert FactorSpan(2, 5).length == 4


class TestFailureTable:
    def test_worked_example(self):
        ft = failure_table(S("1011001101"))
        assert ft.pi.tolist() == [0, 0, 1, 1, 2, 0, 1, 1, 2, 3]
        assert ft.border_of_prefix(1) == 0
        assert ft.border_of_prefix(10) == 3

    def test_unary_run(self):
        assert failure_table(symbols("aaaa")).pi.tolist() == [0, 1, 2, 3]

    def test_two_distinct_symbols(self):
        assert failure_table(symbols("ab")).pi.tolist() == [0, 0]

    def test_empty_raises(self):
        with pytest.raises(EmptyInputError):
            failure_table(S(""))

    def test_exhaustive_binary_up_to_12(self):
        # agrees with direct prefix/suffix comparison on every prefix
        for n in range(1, 13):
            for bits in oracles.binary_strings(n):
                got = failure_table(SymbolString.from_symbols(bits, 2)).pi.tolist()
                assert got == oracles.failure_table_brute(bits), bits

    @given(small_binary)
    @settings(max_examples=200)
    def test_pi_invariants(self, bits):
        pi = failure_table(SymbolString.from_symbols(bits, 2)).pi.tolist()
        n = len(bits)
        for m in range(1, n + 1):
            assert 0 <= pi[m - 1] < m
        for m in range(1, n):
            assert pi[m] <= pi[m - 1] + 1


class TestPeriodAndBorders:
    def test_worked_example_values(self):
        s = S("1011001101")
        assert shortest_period(s) == 7
        assert longest_border(s) == 3
        assert shortest_border(s) == 1
        assert not is_unbordered(s)
        assert is_unbordered(S("101100"))

    def test_trivial_values(self):
        assert shortest_period(symbols("aaaa")) == 1
        assert shortest_period(symbols("abab")) == 2
        assert shortest_period(S("")) == 0
        assert is_unbordered(symbols("a"))
        assert shortest_border(symbols("ab")) == 2
        assert shortest_border(symbols("abab")) == 2
        assert longest_border(symbols("ab")) == 0
        assert longest_border(symbols("aaaa")) == 3

    def test_empty_raises(self):
        empty = S("")
        for op in (is_unbordered, shortest_border, longest_border):
            with pytest.raises(EmptyInputError):
                op(empty)

    @given(small_binary)
    @settings(max_examples=200)
    def test_unbordered_equivalences(self, bits):
        s = SymbolString.from_symbols(bits, 2)
        n = len(bits)
        assert is_unbordered(s) == (shortest_period(s) == n)
        assert is_unbordered(s) == (longest_border(s) == 0)
        assert is_unbordered(s) == (shortest_border(s) == n)

    @given(small_binary)
    @settings(max_examples=200)
    def test_period_matches_definition(self, bits):
        s = SymbolString.from_symbols(bits, 2)
        assert shortest_period(s) == oracles.period_brute(tuple(bits))

    def test_factor_period_never_exceeds_string_period(self):
        # every factor of every binary string up to length 10
        for n in range(1, 11):
            for bits in oracles.binary_strings(n):
                s = SymbolString.from_symbols(bits, 2)
                p = shortest_period(s)
                for i in range(1, n + 1):
                    for j in range(i, n + 1):
                        assert shortest_period(s.factor(FactorSpan(i, j))) <= p

    def test_shortest_border_never_in_upper_half(self):
        # exhaustive for binary strings up to length 14
        for n in range(1, 15):
            for bits in oracles.binary_strings(n):
                f = shortest_border(SymbolString.from_symbols(bits, 2))
                assert f == n or 2 * f <= n, bits

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=48))
    @settings(max_examples=200)
    def test_shortest_border_matches_brute(self, vals):
        s = SymbolString.from_symbols(vals, 4)
        assert shortest_border(s) == oracles.shortest_border_brute(tuple(vals))
