"""Exception types shared across the package."""


class SkewdError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SkewdError, ValueError):
    """A distribution or model parameter violates its constraints."""


class DimensionError(SkewdError, ValueError):
    """Array shapes are inconsistent or too small for the operation."""


class ConstructionError(SkewdError, ValueError):
    """A basis or design object cannot be built from the given data."""


class DegenerateDataError(SkewdError, ValueError):
    """Input data is degenerate (constant column, zero variance, ...)."""


class ConfigurationError(SkewdError, ValueError):
    """A run or optimizer configuration is invalid."""
