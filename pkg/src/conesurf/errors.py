"""Exception hierarchy for the conesurf package.

Every domain error derives from :class:`ConeSurfError` so callers can
catch the whole family; the CLI maps them to exit code 2.
"""


class ConeSurfError(Exception):
    """Base class for all domain errors."""


# ---------------------------------------------------------------- mesh
class TriangleInequality(ConeSurfError):
    """A face violates the strict triangle inequality."""


class LengthMismatch(ConeSurfError):
    """Glued sides have unequal lengths."""


class NonManifold(ConeSurfError):
    """A side is glued more than once, or the complex is not a 2-manifold."""


class NotConnected(ConeSurfError):
    """The glued complex has more than one component."""


class NonOrientable(ConeSurfError):
    """The gluing scheme cannot be coherently oriented."""


class UnknownVertex(ConeSurfError):
    """Vertex id not present in the surface."""


class ParseError(ConeSurfError):
    """Malformed surface / map file."""

    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class BadProfile(ConeSurfError):
    """Non-positive radius in a surface-of-revolution profile."""


class BadParams(ConeSurfError):
    """Invalid generator parameters."""


# ---------------------------------------------------------------- plane
class Degenerate(ConeSurfError):
    """Degenerate (non-invertible) triangle or affine map."""


class HypothesisViolated(ConeSurfError):
    """A lemma hypothesis does not hold for the given data."""


# ---------------------------------------------------------------- geodesy
class HitsConePoint(ConeSurfError):
    """Geodesic ran into a cone point; carries the partial path."""

    def __init__(self, message, partial=None, vertex=None):
        super().__init__(message)
        self.partial = partial
        self.vertex = vertex


class LeavesBoundary(ConeSurfError):
    """Geodesic left through the boundary; carries the partial path."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class Disconnected(ConeSurfError):
    """No path between the query points (defensive; valid surfaces are connected)."""


class NotSimple(ConeSurfError):
    """Cutting chain intersects itself."""


class NotClosed(ConeSurfError):
    """Cutting chain is not closed."""


class NotDisk(ConeSurfError):
    """Cut region is not a disk."""


class NotAnnulus(ConeSurfError):
    """Surface is not an annulus (needed for girth / end operations)."""


# ---------------------------------------------------------------- flatten
class AnglesTooSmall(ConeSurfError):
    """A corner angle undercuts the sweep threshold."""


class CurvatureTooLarge(ConeSurfError):
    """Omega-prime exceeds the admissible budget."""


class SweepObstruction(ConeSurfError):
    """The parallelogram sweep broke down; indicates violated preconditions."""

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class PreconditionViolated(ConeSurfError):
    """Subdivision preconditions not met."""


class NoConvergence(ConeSurfError):
    """Apex recursion failed to shrink the curvature budget (corpus bug)."""


class PeakPoint(ConeSurfError):
    """Surface carries a peak point; refused at pipeline entry."""


class SplitFailure(ConeSurfError):
    """No admissible splitting point found."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class DegeneratePiece(ConeSurfError):
    """A PL map piece is degenerate."""


class SurfaceMismatch(ConeSurfError):
    """Composition endpoints disagree."""


class OverlayFailure(ConeSurfError):
    """Triangulation overlay failed on degenerate input."""


# ---------------------------------------------------------------- assemble
class SchemeGluingMismatch(ConeSurfError):
    """Partition scheme identifies sides with unequal lengths."""


class CurvatureOutOfRange(ConeSurfError):
    """Curvature argument outside the admissible range."""


class NotIsomorphic(ConeSurfError):
    """Combinatorial schemes are not isomorphic."""


# ---------------------------------------------------------------- ends
class CannotTrim(ConeSurfError):
    """No admissible boundary polygon found while trimming an end (defensive)."""


class ConditionsViolated(ConeSurfError):
    """End does not meet the trapezoid-construction entry conditions."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class EventDeadlock(ConeSurfError):
    """Neither sweep event is reachable (signals a geodesy bug)."""


class ZeroSpeed(ConeSurfError):
    """Operation requires nonzero growth speed."""


class NonzeroSpeed(ConeSurfError):
    """Operation requires zero growth speed."""
