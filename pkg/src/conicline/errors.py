"""Exception types shared across the package.

Validation failures raise subclasses of :class:`ConicLineError`.  The CLI maps
:class:`ConicLineError` to exit code 1 and :class:`TheoremContradiction` to
exit code 2 (a certified geometric input violating a proved inequality can
only mean an implementation bug, so it gets its own unambiguous signal).
"""


class ConicLineError(Exception):
    """Base class for all input-validation and computation errors."""


class InvalidInput(ConicLineError):
    """Input outside the supported domain (zero polynomial, degree cap, ...)."""


class RequiresSquarefree(ConicLineError):
    """Operation needs a square-free polynomial."""


class PrecisionExhausted(ConicLineError):
    """Refinement iteration cap hit without a decision.

    Unreachable for the degree <= 8 inputs this package produces; raising it
    signals an internal bug, not a user error.
    """


class DuplicateCurve(ConicLineError):
    """Two proportional curves where distinct ones are required."""


class NonOrdinarySingularity(ConicLineError):
    """A tangency was certified somewhere in the arrangement."""


class ForbiddenFullPoint(ConicLineError):
    """Some point lies on every curve of the arrangement."""


class UndefinedSlope(ConicLineError):
    """Characteristic number requested while the second Chern number is 0."""


class UnsupportedCoverCase(ConicLineError):
    """Cover construction outside its stated (p, d, k) domain."""


class GenerationFailed(ConicLineError):
    """Random generation hit its retry cap without a valid arrangement."""


class NotApplicableForPrime(ConicLineError):
    """Cover-side quantity requested for a prime where it is not defined."""


class SyntheticAssignmentUnavailable(ConicLineError):
    """No consistent per-curve incidence assignment exists for a bare profile."""


class TheoremContradiction(ConicLineError):
    """A proved inequality failed on certified geometric input."""
