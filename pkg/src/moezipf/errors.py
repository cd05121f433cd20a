"""Exception hierarchy shared by every module of the package."""


class MOEZipfError(Exception):
    """Base class for all package errors."""


class DomainError(MOEZipfError, ValueError):
    """An argument lies outside the domain of the function."""


class AccuracyError(MOEZipfError, ArithmeticError):
    """The requested accuracy could not be reached within the work budget."""


class NumericalError(MOEZipfError, ArithmeticError):
    """A quantity underflowed or became non-finite."""


class DegenerateData(MOEZipfError, ValueError):
    """The sample carries no information about a parameter."""


class ConvergenceError(MOEZipfError, RuntimeError):
    """An iterative fit stopped before converging.

    The best point reached so far is available as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NoRoot(MOEZipfError, RuntimeError):
    """An estimating equation has no sign change inside the search bracket."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DegenerateCells(MOEZipfError, ValueError):
    """A chi-square cell has (numerically) zero expected count."""


class ParseError(MOEZipfError, ValueError):
    """An input file could not be parsed."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class EmptyData(MOEZipfError, ValueError):
    """An input file held no usable observations."""


class ZeroValue(MOEZipfError, ValueError):
    """A zero observation was found while zeros are configured as errors."""
