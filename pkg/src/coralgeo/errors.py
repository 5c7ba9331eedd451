"""Exception types shared across the package."""


class CoralGeoError(Exception):
    """Base class for package-specific failures."""


class ParameterError(CoralGeoError, ValueError):
    """An argument violates an operation's precondition."""


class SingularPointError(CoralGeoError, ArithmeticError):
    """The requested quantity is undefined at a degenerate surface point."""
