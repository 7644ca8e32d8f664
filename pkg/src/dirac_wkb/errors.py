"""Exception types shared across the toolkit.

All errors raised by this package derive from ToolkitError so callers (and
the CLI) can catch one base class.
"""


class ToolkitError(Exception):
    """Base class for every error raised by dirac_wkb."""


class DomainError(ToolkitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BadBracket(ToolkitError, ValueError):
    """Root bracket endpoints do not straddle a sign change."""


class NoConvergence(ToolkitError, RuntimeError):
    """An iterative scheme hit its iteration/level cap before converging."""


class ConvergenceFailure(ToolkitError, RuntimeError):
    """The eigensolver failed to converge."""


class DimensionMismatch(ToolkitError, ValueError):
    """Vector/matrix dimensions are incompatible."""


class AboveThreshold(ToolkitError, ValueError):
    """The requested quantized state lies above the continuum threshold."""


class ExclusionZone(ToolkitError, ValueError):
    """Evaluation point falls inside a turning-point exclusion zone."""


class DivergentAtTurningPoint(ToolkitError, ZeroDivisionError):
    """Quantity is evaluated too close to a turning point to be meaningful."""


class CountMismatchWarning(UserWarning):
    """Cross-method spectra have different lengths; comparison is truncated."""
