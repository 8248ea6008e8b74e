"""Exception types shared across the package."""


class NetmediateError(Exception):
    """Base class for all package errors."""


class InvalidSizeError(NetmediateError, ValueError):
    pass


class InvalidConfigError(NetmediateError, ValueError):
    pass


class InvalidInputError(NetmediateError, ValueError):
    pass


class SingularDesignError(NetmediateError, ValueError):
    """Raised when the regressor matrix is rank deficient.

    Carries the name of the offending column in ``column``.
    """

    def __init__(self, column: str, message: str | None = None):
        self.column = column
        super().__init__(message or f"design matrix is singular: column {column!r} is degenerate")


class WeakInstrumentError(NetmediateError, ValueError):
    """Raised when Z'X is numerically singular; carries first-stage diagnostics."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class NumericFailureError(NetmediateError, RuntimeError):
    pass


class UndefinedContrastError(NetmediateError, ValueError):
    pass


class ReferentialIntegrityError(NetmediateError, ValueError):
    pass


class AggregateFailureError(NetmediateError, RuntimeError):
    pass
