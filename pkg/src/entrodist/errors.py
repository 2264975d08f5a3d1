"""Exception types shared across the package."""


class EntrodistError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceededError(EntrodistError):
    """An enumeration would exceed the configured operation budget."""


class InfeasibleParameterError(EntrodistError, ValueError):
    """Parameters are outside the domain where the requested quantity exists."""


class MatrixFormatError(EntrodistError, ValueError):
    """A matrix text file could not be parsed; message carries the line number."""


class RankDropError(EntrodistError):
    """Puncturing merged codewords (the punctured generator lost rank)."""


class SearchExhaustedError(EntrodistError):
    """A randomized search used up its trial budget without success."""
