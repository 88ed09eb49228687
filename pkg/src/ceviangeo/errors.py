"""Exception taxonomy for the geometry engine.

Every predictable degeneracy gets its own class so callers can gate on the
exact failure mode instead of parsing messages.  All of them derive from
GeometryError, which itself is a ValueError.
"""

from __future__ import annotations


class GeometryError(ValueError):
    """Base class for all geometric degeneracy errors."""


# incidence layer

class IdenticalPoints(GeometryError):
    """Join of two projectively equal points is undefined."""


class IdenticalLines(GeometryError):
    """Meet of two projectively equal lines is undefined."""


class NotCollinear(GeometryError):
    """Operation requires collinear points."""


class UndefinedRatio(GeometryError):
    """Cross ratio or division ratio degenerates (coincident or infinite)."""


class DegenerateInput(GeometryError):
    """Construction input collapses (e.g. harmonic conjugate of a base point)."""


class InfiniteInput(GeometryError):
    """Operation requires ordinary (finite) points."""


# triangle layer

class DegenerateTriangle(GeometryError):
    """Triangle vertices must be ordinary, distinct and non-collinear."""


class PointOnSideline(GeometryError):
    """Cevian construction undefined for points on a side line or at a vertex."""


class DegeneratePerspector(GeometryError):
    """Anticevian construction undefined for this perspector."""


# conjugation layer

class OnSideline(GeometryError):
    """Conjugation map undefined on the side lines."""


class IsVertex(GeometryError):
    """Conjugation map undefined at the reference vertices."""


class DegenerateCircle(GeometryError):
    """Trace circle construction failed (collinear or non-ordinary traces)."""


class NonConcurrent(GeometryError):
    """Lines expected to concur do not; signals an internal inconsistency."""


class ChainDegenerate(GeometryError):
    """A stage of a composite map chain is undefined for this input."""

    def __init__(self, stage: str, message: str = ""):
        self.stage = stage
        super().__init__(f"chain undefined at stage {stage!r}" + (f": {message}" if message else ""))


class NotPerspective(GeometryError):
    """Two triangles are not perspective from a point."""


# affine layer

class CollinearSource(GeometryError):
    """Affine map from correspondence needs non-collinear source points."""


class CollinearTarget(GeometryError):
    """Affine map from correspondence needs non-collinear target points."""


class InfiniteCenter(GeometryError):
    """Half turn requires an ordinary center."""


# conic layer

class UnderDetermined(GeometryError):
    """Five-point conic system has no unique solution (degenerate point set)."""


class CollinearPoints(GeometryError):
    """Circle through three points requires them non-collinear."""


class DegenerateConic(GeometryError):
    """Pole/polar undefined for a singular conic matrix."""


class BadParameter(GeometryError):
    """Parameter outside the admissible set."""


# suite layer

class HypothesisViolated(GeometryError):
    """Configuration input violates the standing non-degeneracy hypothesis."""


class UnknownTheoremId(GeometryError):
    """No registered statement under this identifier."""


class SamplerExhausted(GeometryError):
    """Rejection sampler exceeded its retry budget."""


class FigureUnavailable(GeometryError):
    """A point required by the requested figure is missing or infinite."""
