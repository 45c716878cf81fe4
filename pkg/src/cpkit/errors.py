"""Exception and warning types shared across the package."""


class UnsupportedModelError(ValueError):
    """The requested operation is not defined for this wall model."""


class ZeroFrequencyError(ValueError):
    """Permittivity diverges at zero frequency.

    Callers should use the dedicated zero-frequency reflection path instead
    of evaluating eps(i*0) numerically.
    """


class TableError(ValueError):
    """Tabulated data failed validation."""


class ConfigError(Exception):
    """Bad registry entry, configuration file or command-line input."""


class ConvergenceError(RuntimeError):
    """A quadrature or series failed to converge.

    Carries the last error estimate so callers can report diagnostics.
    """

    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class ValidityWarning(UserWarning):
    """An asymptotic expression was evaluated outside its validated window."""
