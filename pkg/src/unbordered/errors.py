"""Exception taxonomy shared by the whole package.

All input-validation failures derive from DomainError so the CLI can map
them to a single exit code.
"""


class DomainError(ValueError):
    """Invalid input for an operation (bad alphabet, range, format, ...)."""


class EmptyInputError(DomainError):
    """Operation requires a non-empty string."""


class OutOfDomainError(DomainError):
    """Numeric argument outside the valid domain."""


class AlphabetTooSmallError(DomainError):
    """Alphabet size below the minimum the operation supports."""


class UnknownAlgorithmError(DomainError):
    """Algorithm tag not recognized."""


class UnknownFormatError(DomainError):
    """Serialization format tag not recognized."""


class CheckFailedError(Exception):
    """A self-check requested via run_experiment(check=True) did not hold."""
