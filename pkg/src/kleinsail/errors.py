"""Exception types shared across the package.

Every error raised by kleinsail derives from KleinSailError, so callers can
catch the base class.  The command line tool maps these to exit code 2
(precondition / input problems) or exit code 1 (verification failures).
"""


class KleinSailError(Exception):
    """Base class for all kleinsail errors."""


# exact linear algebra

class SingularMatrix(KleinSailError):
    """Inverse or negative power requested for a matrix with zero determinant."""


# integer geometry

class DegeneratePoints(KleinSailError):
    """Two points that were required to be distinct coincide."""


class DegenerateVectors(KleinSailError):
    """Vectors that were required to be independent are dependent."""


class PointOnLine(KleinSailError):
    """A point that must lie off a line lies on it."""


class PointOnPlane(KleinSailError):
    """A point that must lie off a plane lies on it."""


class DegeneratePlane(KleinSailError):
    """Three points meant to span a plane are affinely dependent."""


class CoplanarInput(KleinSailError):
    """Two planes that must differ coincide."""


# surfaces and sails

class NonPlanarFace(KleinSailError):
    """A face cycle whose vertices do not lie in a single plane."""


class InconsistentOrientation(KleinSailError):
    """Two faces traverse a shared edge in the same direction."""


class NonManifoldEdge(KleinSailError):
    """An edge shared by more than two faces."""


class NonConvexEdge(KleinSailError):
    """An interior edge of a sail patch whose dihedral angle is not convex
    as seen from the origin."""


class TemplateOutOfRange(KleinSailError):
    """A patch was requested over an empty orbit range."""


class PrecisionExhausted(KleinSailError):
    """Interval refinement hit its bisection cap before certifying a sign."""


# stresses and projection

class PlaneThroughOrigin(KleinSailError):
    """A face plane in a lifting-coefficient denominator passes through O."""


class DegenerateTriple(KleinSailError):
    """Points meant to span a 2-dimensional affine space do not."""


class BoundaryEdge(KleinSailError):
    """A lifting coefficient was requested for an edge with only one face."""


class ImproperPlane(KleinSailError):
    """Projection plane contains O or is parallel to some vertex ray.

    The offending vertex indices, if known, are in ``self.vertices``.
    """

    def __init__(self, message, vertices=()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class ParallelStarEdges(KleinSailError):
    """Two edges of one vertex star are parallel, so no unique lifting exists."""


class MonodromyNonzero(KleinSailError):
    """Propagating a lifting around the framework is inconsistent, hence no
    lifting realises the given stresses.  Mismatching edges are in
    ``self.edges``."""

    def __init__(self, message, edges=()):
        super().__init__(message)
        self.edges = tuple(edges)


class ZeroDenominator(KleinSailError):
    """A reconstruction step divided by zero (degenerate configuration)."""


# documents and rendering

class ParseError(KleinSailError):
    """Malformed document.  Carries 1-based ``line`` and ``column`` when the
    failure came from the JSON layer."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class KindMismatch(KleinSailError):
    """Document has a different ``kind`` than the caller expected."""


class FloatRejected(KleinSailError):
    """A floating point literal appeared in a document."""


class EmptyFramework(KleinSailError):
    """Rendering was requested for a framework without edges."""
