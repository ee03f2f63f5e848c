"""Exception types raised by the bjgeo library.

Every operation documents which of these it can raise; anything else
escaping the library is a bug.
"""


class BjgeoError(Exception):
    """Base class for all bjgeo errors."""


class DimensionMismatch(BjgeoError):
    """Vector, functional or operator dimensions are inconsistent."""


class ZeroVector(BjgeoError):
    """A non-zero vector was required."""


class ZeroImage(BjgeoError):
    """The operator maps the base point to zero where that is not allowed."""


class AsymmetricBall(BjgeoError):
    """Vertex or facet data is not closed under negation."""


class DegenerateBall(BjgeoError):
    """The unit ball is not full-dimensional (or is unbounded)."""


class BadExponent(BjgeoError):
    """The exponent p is outside (1, infinity)."""


class EuclideanExponent(BadExponent):
    """p = 2 was supplied where the construction requires p != 2."""


class SingularOperator(BjgeoError):
    """Inverse of a singular operator was requested."""


class NotOrthogonalInput(BjgeoError):
    """The supplied direction is not Birkhoff-James orthogonal to the base point."""


class NotSupportFunctional(BjgeoError):
    """The supplied functional does not support the base point."""


class SubspaceNotOrthogonal(BjgeoError):
    """A basis vector of the subspace is not orthogonal to the base point."""


class DimensionTooSmall(BjgeoError):
    """The ambient dimension is too small for the construction."""


class SmoothPoint(BjgeoError):
    """A non-smooth base point was required."""


class HypothesisViolated(BjgeoError):
    """A structural hypothesis of the check does not hold for the input."""


class DependentFunctionals(BjgeoError):
    """Two functionals that must be linearly independent are dependent."""


class NotPolyhedral(BjgeoError):
    """The operation is defined only on polyhedral-kind spaces."""


class InsufficientSmoothness(BjgeoError):
    """An extreme point does not admit enough independent support functionals."""


class UnsupportedSpace(BjgeoError):
    """The space kind is outside the operation's scope."""


class NotUnitVectors(BjgeoError):
    """All members of the set must lie on the unit sphere."""
