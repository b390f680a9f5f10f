"""Exception types shared across the package.

Everything numerical raises a subclass of FracqError so the CLI can map
"our" failures to exit code 3 and leave genuine bugs as tracebacks.
"""


class FracqError(Exception):
    """Base class for all errors raised by fracq."""


class DomainError(FracqError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(FracqError):
    """Evaluation requested at (or within tolerance of) a pole."""


class ParamError(FracqError):
    """Structurally invalid parameter set."""


class ConvergenceError(FracqError):
    """A series or iteration failed to converge within its budget."""


class RegionError(FracqError):
    """A series expansion was requested outside its region of validity."""


class UnsupportedError(FracqError):
    """No available representation converges for the given input."""


class SingularityError(FracqError):
    """A denominator passed within tolerance of zero."""


class QuadratureError(FracqError):
    """Numerical integration failed to reach the requested tolerance."""


class ContourError(FracqError):
    """A pole lies too close to the inversion contour."""


class PoleOnPathError(FracqError):
    """The integrand's denominator vanishes on the integration path."""
