"""Exception types shared across the package."""

from .exact.series import TruncationError


class EngineError(RuntimeError):
    """An internal consistency check failed; the result cannot be trusted."""


class OracleCapError(ValueError):
    """The brute-force oracle was asked for a degree above its cap."""


class ResourceError(ValueError):
    """A request exceeds the configured computational budget."""


__all__ = ["EngineError", "OracleCapError", "ResourceError", "TruncationError"]
