"""Exception types shared across the package."""


class UntangleError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(UntangleError, ValueError):
    """Malformed or out-of-contract input (bad graph, non-convex points, ...)."""


class CapacityError(UntangleError):
    """Input exceeds an exhaustive-search cap."""


class UnsupportedInstanceError(UntangleError):
    """Certificate requested for an instance the certificates do not cover."""


class OccupiedPointError(UntangleError):
    """Move rejected: the destination point is already occupied."""
