"""Exception taxonomy.

Every error raised by the library derives from KhariboundError so callers
(and the CLI exit-code mapper) can distinguish domain failures from bugs.
"""
from __future__ import annotations


class KhariboundError(Exception):
    """Base class for all library-level failures."""


class InvalidDegree(KhariboundError):
    """Operation needs a (higher) positive degree: empty, all-zero, or
    degree-zero polynomial where at least degree one is required, or a
    numerator order exceeding what the analysis supports."""


class DegenerateLeadingCoefficient(KhariboundError):
    """Leading coefficient is (or may be) zero where it must not be."""


class DegreeDropOnSegment(KhariboundError):
    """A polynomial segment does not keep constant degree, so endpoint
    stability does not certify the segment."""


class DegreeDropPossible(KhariboundError):
    """An interval family's leading coefficient interval contains zero, so
    some members drop degree and vertex results do not certify the family."""


class DegreeDrop(KhariboundError):
    """A constructed polynomial (e.g. a closed-loop denominator) lost degree
    relative to its operands."""


class InvalidShift(KhariboundError):
    """The axis shift must be strictly positive."""


class InvalidRotation(KhariboundError):
    """The rotation coefficient must be nonzero."""


class InvalidGamma(KhariboundError):
    """The feedback gain must be strictly positive."""


class NumericallyMarginal(KhariboundError):
    """The verdict sits inside the numerical error bar of the stability
    margin: neither True nor False can be certified."""


class ZeroInclusion(KhariboundError):
    """The value set of the denominator family contains the origin at some
    frequency, so frequency-domain ratios are unbounded there."""

    def __init__(self, omega: float, message: str | None = None):
        self.omega = float(omega)
        super().__init__(message or f"value set contains 0 at omega={omega!r}")


class PoleOnAxis(KhariboundError):
    """A denominator has a root on the imaginary axis inside the analyzed
    band, so the infimum is -infinity / undefined."""

    def __init__(self, omega: float | None = None, message: str | None = None):
        self.omega = None if omega is None else float(omega)
        super().__init__(message or f"denominator vanishes on the axis (omega={omega!r})")


class DenominatorNotHurwitz(KhariboundError):
    """A denominator vertex polynomial is not Hurwitz, so the family-level
    analysis is not defined."""


class TooManyCorners(KhariboundError):
    """The requested exhaustive sampling would enumerate more than the
    supported number of coefficient combinations (2**20)."""


class SpecFileError(KhariboundError):
    """A family specification file is malformed; the message names the
    offending field."""
