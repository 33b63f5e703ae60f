"""Exception types shared across the package."""


class PhelixError(Exception):
    """Base class for all library errors."""


class DegenerateInputError(PhelixError):
    """Raised for inputs the algebra cannot meaningfully process.

    Examples: gcd of two zero polynomials, a hodograph that is identically
    zero, a proportional Hopf pair (zero Wronskian).
    """


class LineDegeneracyError(DegenerateInputError):
    """Raised when a computation needs curvature but the curve is a straight line."""


class UnsupportedDegreeError(PhelixError):
    """Raised when an input exceeds the degree a routine is defined for."""


class NotRationalFrameError(PhelixError):
    """Raised when the Frenet frame cannot be expressed with exact rational entries."""


class InternalInconsistencyError(PhelixError):
    """Raised when two independent computation routes disagree.

    This signals a bug (or a counterexample to the classification
    equivalence), never a bad
    input; the CLI maps it to its own exit code so it is impossible to
    confuse with ordinary failures.
    """


class SpecParseError(PhelixError):
    """Raised for malformed curve-specification documents."""
