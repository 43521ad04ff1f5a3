"""Exception types shared across the package."""


class NormControlError(Exception):
    """Base class for all package-specific errors."""


class GroupMismatchError(NormControlError):
    """Operands live on different groups or have the wrong shape."""


class HypothesisViolated(NormControlError):
    """Input fails a stated precondition of a certified pipeline.

    The message names the violated hypothesis (e.g. "requires delta > 1/3").
    """


class NotInvertible(NormControlError):
    """A Gelfand value is zero (below the near-zero cutoff).

    ``where`` is the offending dual character's coordinates, or the string
    "phi_inf" when the scalar part itself vanishes.
    """

    def __init__(self, message, where=None, value=None):
        super().__init__(message)
        self.where = where
        self.value = value


class SamplingExhausted(NormControlError):
    """Rejection sampling hit its attempt budget without an admissible draw."""


class ConsistencyError(NormControlError):
    """An inequality implied by the hypotheses failed numerically.

    This indicates an implementation bug (or inputs far outside tolerance),
    never a legitimate runtime condition; it is raised so such events are
    surfaced instead of silently producing an uncertified result.
    """
