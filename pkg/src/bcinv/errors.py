"""Exception types shared across the package."""

from .ring import RingError, RingMismatchError


class InconsistencyError(RuntimeError):
    """A constructed certificate failed its recheck, or two decision routes
    disagreed.  Never raised on valid inputs unless there is a bug."""


class TheoremViolation(InconsistencyError):
    """An asserted equivalence was falsified; ``dump`` holds the full case."""

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message)
        self.dump = dump or {}


class PreconditionError(ValueError):
    """A stated hypothesis of the operation does not hold for the inputs."""


__all__ = ["RingError", "RingMismatchError", "InconsistencyError", "TheoremViolation", "PreconditionError"]
