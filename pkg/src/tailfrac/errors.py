"""Exception types shared across the package."""


class ConvergenceError(RuntimeError):
    """An iterative numeric scheme failed to reach its tolerance."""


class DataFormatError(ValueError):
    """A data file could not be parsed.

    Carries the offending path and, when known, the 1-based line number.
    """

    def __init__(self, message, path=None, line=None):
        super().__init__(message)
        self.path = path
        self.line = line


class DegenerateDataError(ValueError):
    """Input data is structurally valid but unusable for estimation."""
