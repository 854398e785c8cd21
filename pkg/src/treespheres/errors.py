"""Error classes shared across the package."""


class TreeSpheresError(Exception):
    pass


class InvalidFunction(TreeSpheresError):
    """Zero denominator or otherwise malformed rational function."""


class NotAFixedPoint(TreeSpheresError):
    pass


class DegenerateTriple(TreeSpheresError):
    """Moebius interpolation through coincident points."""


class DegenerateLimit(TreeSpheresError):
    """Specialization collapses to 0/0 or to the constant infinity."""

    def __init__(self, message, orders=None):
        super().__init__(message)
        self.orders = orders


class CoefficientPole(TreeSpheresError):
    """A coefficient has a pole at the specialization point."""


class InconsistentDegree(TreeSpheresError):
    """Fiber degree sums disagree across target vertices."""


class InvalidQuery(TreeSpheresError):
    """Malformed tree/subtree query."""


class StructuralViolation(TreeSpheresError):
    """A structural precondition of the classifier fails."""


class NoRescalingCertificate(TreeSpheresError):
    """The fixed-order-vertex test failed; no rescaling can exist here."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class TheoremContradiction(TreeSpheresError):
    """Observed structure contradicts the bicritical classification."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class TrackingFailure(TreeSpheresError):
    """No root of the tracking condition within the selection radius."""


class AmbiguousTracking(TreeSpheresError):
    """Several equidistant candidate roots; raised only in strict mode."""

    def __init__(self, message, candidates=None):
        super().__init__(message)
        self.candidates = candidates or []


class Divergent(TreeSpheresError):
    """Numeric limit coefficients grow without stabilizing."""


class DegreeInstability(TreeSpheresError):
    """Fitted degree of the numeric limit varies across samples."""


class DocumentError(TreeSpheresError):
    """Malformed document (syntax, unknown kind, or invariant violation)."""
