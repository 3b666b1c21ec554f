"""String representation and border/period primitives.

Symbols are integers 0..sigma-1 over an explicit alphabet; the value sigma
itself is reserved as the sentinel used by the period reduction. Public
spans are 1-based inclusive, storage is a 0-based numpy array.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import AlphabetTooSmallError, EmptyInputError, OutOfDomainError

# Character i of this table renders symbol value i; covers sigma <= 62.
TEXT_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
SENTINEL_CHAR = "$"
MAX_TEXT_SIGMA = len(TEXT_SYMBOLS)

_CHAR_TO_SYMBOL = {c: i for i, c in enumerate(TEXT_SYMBOLS)}


@dataclass(frozen=True)
class AlphabetSpec:
    """Integer alphabet of size sigma, symbol values 0..sigma-1.

    sigma >= 1 is accepted everywhere; the probabilistic bounds additionally
    require sigma >= 2 and enforce that themselves.
    """

    sigma: int

    def __post_init__(self) -> None:
        if self.sigma < 1:
            raise AlphabetTooSmallError(f"alphabet size must be >= 1, got {self.sigma}")

    @property
    def sentinel(self) -> int:
        """Symbol value reserved for the out-of-alphabet sentinel."""
        return self.sigma


@dataclass(frozen=True)
class SymbolString:
    """Immutable sequence of integer symbols over an AlphabetSpec.

    Symbol values must lie in [0, sigma]; the value sigma is legal only as
    the sentinel introduced by the period reduction and never comes out of
    the text codec or the samplers.
    """

    symbols: np.ndarray
    alphabet: AlphabetSpec

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.symbols, dtype=np.int64)
        if arr.ndim != 1:
            raise OutOfDomainError("symbols must be a 1-D sequence")
        arr.setflags(write=False)
        object.__setattr__(self, "symbols", arr)
        if arr.size:
            lo, hi = int(arr.min()), int(arr.max())
            if lo < 0 or hi > self.alphabet.sigma:
                raise OutOfDomainError(
                    f"symbol values must lie in [0, {self.alphabet.sigma}] "
                    f"(sentinel included), found range [{lo}, {hi}]"
                )

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolString):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(
            self.symbols, other.symbols
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.symbols.tobytes()))

    def __repr__(self) -> str:
        if len(self) <= 64 and self.alphabet.sigma <= MAX_TEXT_SIGMA:
            body = self.to_text()
        else:
            body = f"<{len(self)} symbols>"
        return f"SymbolString({body!r}, sigma={self.alphabet.sigma})"

    @classmethod
    def from_symbols(cls, values, sigma: int) -> "SymbolString":
        return cls(np.asarray(values, dtype=np.int64), AlphabetSpec(sigma))

    @classmethod
    def from_text(cls, text: str, sigma: int | None = None) -> "SymbolString":
        """Decode a text-format string (0-9, a-z, A-Z map to 0..61).

        With sigma=None the smallest alphabet containing every symbol is
        used. The sentinel character is not accepted on input.
        """
        try:
            values = [_CHAR_TO_SYMBOL[c] for c in text]
        except KeyError as exc:
            raise OutOfDomainError(f"character {exc.args[0]!r} is not a text symbol")
        if sigma is None:
            sigma = max(values, default=0) + 1
        if sigma > MAX_TEXT_SIGMA:
            raise OutOfDomainError(
                f"text format supports sigma <= {MAX_TEXT_SIGMA}, got {sigma}"
            )
        bad = [v for v in values if v >= sigma]
        if bad:
            raise OutOfDomainError(
                f"symbol value {bad[0]} does not fit an alphabet of size {sigma}"
            )
        return cls(np.asarray(values, dtype=np.int64), AlphabetSpec(sigma))

    def to_text(self) -> str:
        """Render as text; the sentinel value renders as '$'."""
        if self.alphabet.sigma > MAX_TEXT_SIGMA:
            raise OutOfDomainError(
                f"text format supports sigma <= {MAX_TEXT_SIGMA}, "
                f"got {self.alphabet.sigma}"
            )
        sentinel = self.alphabet.sentinel
        return "".join(
            SENTINEL_CHAR if v == sentinel else TEXT_SYMBOLS[v]
            for v in self.symbols.tolist()
        )

    def factor(self, span: "FactorSpan") -> "SymbolString":
        """Substring designated by a 1-based inclusive span."""
        if span.end > len(self):
            raise OutOfDomainError(
                f"span {span.as_tuple()} exceeds string length {len(self)}"
            )
        return SymbolString(self.symbols[span.start - 1 : span.end], self.alphabet)


@dataclass(frozen=True, order=True)
class FactorSpan:
    """1-based inclusive index pair (start, end) designating a factor."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.end < self.start:
            raise OutOfDomainError(f"invalid span ({self.start}, {self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def as_tuple(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class FailureTable:
    """Longest-proper-border lengths for every prefix.

    pi[k] (0-based storage) is the border length of the prefix of length
    k + 1; use border_of_prefix for the 1-based view.
    """

    pi: np.ndarray

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.pi, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "pi", arr)

    def __len__(self) -> int:
        return int(self.pi.size)

    def border_of_prefix(self, m: int) -> int:
        """Longest proper border length of the length-m prefix, 1 <= m <= n."""
        if not 1 <= m <= len(self):
            raise OutOfDomainError(f"prefix length {m} outside [1, {len(self)}]")
        return int(self.pi[m - 1])


def _require_nonempty(s: SymbolString, op: str) -> None:
    if len(s) == 0:
        raise EmptyInputError(f"{op} requires a non-empty string")


def failure_table(s: SymbolString) -> FailureTable:
    """Failure table of s, computed in linear time."""
    _require_nonempty(s, "failure_table")
    return FailureTable(kernels.failure_table(s.symbols))


def shortest_period(s: SymbolString) -> int:
    """Smallest p >= 1 with s[i] = s[i+p] for all valid i; 0 for empty s."""
    n = len(s)
    if n == 0:
        return 0
    pi = kernels.failure_table(s.symbols)
    return n - int(pi[n - 1])


def is_unbordered(s: SymbolString) -> bool:
    """True iff the only border of s is s itself."""
    _require_nonempty(s, "is_unbordered")
    pi = kernels.failure_table(s.symbols)
    return int(pi[len(s) - 1]) == 0


def longest_border(s: SymbolString) -> int:
    """Length of the longest proper border of s (0 if unbordered)."""
    _require_nonempty(s, "longest_border")
    pi = kernels.failure_table(s.symbols)
    return int(pi[len(s) - 1])


def shortest_border(s: SymbolString) -> int:
    """Length of the shortest border of s; equals len(s) iff unbordered.

    Walks the border chain of the full string: the shortest border is the
    last non-zero entry before the chain hits 0. Never returns a value in
    (n/2, n) for n >= 2.
    """
    _require_nonempty(s, "shortest_border")
    n = len(s)
    pi = kernels.failure_table(s.symbols)
    b = int(pi[n - 1])
    if b == 0:
        return n
    while int(pi[b - 1]) != 0:
        b = int(pi[b - 1])
    return b
