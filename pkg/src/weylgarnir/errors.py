"""Exception hierarchy shared by every module of the package."""


class WeylGarnirError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WeylGarnirError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(WeylGarnirError, ValueError):
    """Unsupported root-system label, rank, or option."""


class ResourceError(WeylGarnirError):
    """A computation would exceed a configured safety cap."""


class PreconditionError(WeylGarnirError):
    """An operation was called on an object that fails its hypothesis."""


class ConsistencyError(WeylGarnirError):
    """An internal lookup failed although its hypotheses were satisfied."""


class InvariantViolation(WeylGarnirError, AssertionError):
    """A proven identity failed to hold; always indicates a bug."""
