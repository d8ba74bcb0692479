"""Exception types shared across the package."""


class CapExceededError(RuntimeError):
    """A configured size cap (group order, enumeration, algebra dim) was hit."""


class FactorizationError(ValueError):
    """The triple (G, L, F) is not an exact factorization."""


class NotNilpotentError(ValueError):
    """Lower central series stabilized above the trivial group."""


class NotFrobeniusError(ValueError):
    """The semidirect product input is not a Frobenius group."""


class OracleError(RuntimeError):
    """The Wedderburn oracle could not decompose its input.

    Signals a non-split or non-semisimple algebra, or a wrong prime.
    """


class ConsistencyError(AssertionError):
    """A mathematically guaranteed cross-check failed.

    Raised when two independent computations of the same quantity disagree;
    this always indicates a defect, never a legitimate input condition.
    """


class CycleParseError(ValueError):
    """Malformed cycle-notation string; carries the failing offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position
