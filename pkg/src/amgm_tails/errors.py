"""Exception hierarchy shared by all modules."""


class BoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BoundsError, ValueError):
    """An argument lies outside the domain of a function."""


class RegionError(DomainError):
    """The query point is not in the region an operation requires."""


class NoSignChange(BoundsError, ValueError):
    """A bracket does not straddle a root."""


class NoSignChangeWithinCap(NoSignChange):
    """Upward bracket expansion hit its doubling cap without a sign change."""


class MaxIterations(BoundsError, RuntimeError):
    """An iterative method did not reach its tolerance within the cap."""


class InvalidInterval(DomainError):
    """A search interval is empty or reversed."""


class NearDegenerateError(BoundsError, ArithmeticError):
    """The root z_v escaped to infinity (left tail with v too close to 1)."""


class QNotBelowOne(DomainError):
    """The simple bound q_v is clamped at 1, so the gap diagnostic is undefined."""


class GenerationFailure(BoundsError, RuntimeError):
    """Rejection sampling of a feasible distribution hit its retry cap."""
