"""Exception hierarchy shared by all modules."""


class FatbundlesError(Exception):
    """Base class for every error raised by this package."""


class InvalidRootDatum(FatbundlesError, ValueError):
    pass


class DimensionError(FatbundlesError, ValueError):
    pass


class InvalidSubsystem(FatbundlesError, ValueError):
    pass


class DegenerateBase(FatbundlesError):
    """The complement m is zero, so there are no horizontal directions."""


class InvariantViolation(FatbundlesError, ValueError):
    pass


class InvalidPolytope(FatbundlesError, ValueError):
    pass


class NoEscapeDirection(FatbundlesError):
    """A translation direction lies in a wall that the polytope meets."""

    def __init__(self, message, wall=None):
        super().__init__(message)
        self.wall = wall
