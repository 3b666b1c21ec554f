"""String file formats.

Text format: one string per line, symbols rendered through the 62-char
table (sigma <= 62). Integer format: a `sigma=<k>` header line, then one
string per line as whitespace-separated symbol values; no sigma limit.
"""

from __future__ import annotations

from .core import AlphabetSpec, SymbolString
from .errors import OutOfDomainError, UnknownFormatError


def write_strings(strings: list[SymbolString], format: str = "text") -> str:
    if format == "text":
        return "".join(s.to_text() + "\n" for s in strings)
    if format == "int":
        if not strings:
            raise OutOfDomainError("integer format needs at least one string")
        sigma = strings[0].alphabet.sigma
        if any(s.alphabet.sigma != sigma for s in strings):
            raise OutOfDomainError("integer format requires one common alphabet")
        lines = [f"sigma={sigma}"]
        lines += [" ".join(str(v) for v in s.symbols.tolist()) for s in strings]
        return "\n".join(lines) + "\n"
    raise UnknownFormatError(f"unknown string format {format!r}")


def parse_strings(text: str, sigma: int | None = None) -> list[SymbolString]:
    """Parse either format, auto-detected by the `sigma=` header.

    For the text format, a given sigma applies to every line; otherwise the
    smallest alphabet covering the whole file is used. For the integer
    format a given sigma must match the header.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines and lines[0].startswith("sigma="):
        header_sigma = int(lines[0].split("=", 1)[1])
        if sigma is not None and sigma != header_sigma:
            raise OutOfDomainError(
                f"requested sigma={sigma} conflicts with header sigma={header_sigma}"
            )
        alphabet = AlphabetSpec(header_sigma)
        out = []
        for ln in lines[1:]:
            values = [int(tok) for tok in ln.split()]
            out.append(SymbolString.from_symbols(values, header_sigma))
        return out
    if sigma is None:
        decoded = [SymbolString.from_text(ln) for ln in lines]
        sigma = max((s.alphabet.sigma for s in decoded), default=1)
    return [SymbolString.from_text(ln, sigma) for ln in lines]


def read_strings(path: str, sigma: int | None = None) -> list[SymbolString]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_strings(fh.read(), sigma)
