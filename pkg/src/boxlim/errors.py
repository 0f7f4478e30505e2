"""Domain errors shared across the package.

Every error carries a machine-readable ``code`` (the class name) and a
human-readable ``detail``; the CLI serializes them as
``{"error": code, "detail": detail}`` and exits with status 1.
"""

from __future__ import annotations

__all__ = [
    "LimitAlgebraError",
    "EmptyIndexSet",
    "EmptyList",
    "DimensionMismatch",
    "TooLarge",
    "ZeroVector",
    "DegeneratePair",
    "InvalidCombination",
    "OrthantViolation",
    "InvalidCoefficients",
    "NotAMember",
    "NegativeRadius",
    "NotOrthogonal",
    "NotRightAngled",
    "NotOnUnitSquare",
    "ZeroArgument",
    "DegenerateConfiguration",
    "NotParallel",
]


class LimitAlgebraError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "LimitAlgebraError"

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.code = cls.__name__

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail


class EmptyIndexSet(LimitAlgebraError):
    """n-ary evaluation requested over an empty index set."""


class EmptyList(LimitAlgebraError):
    """An operation that needs at least one value got an empty list."""


class DimensionMismatch(LimitAlgebraError):
    """Vector/matrix dimensions do not agree."""


class TooLarge(LimitAlgebraError):
    """Input exceeds the supported size (determinants stop at n = 8)."""


class ZeroVector(LimitAlgebraError):
    """A nonzero vector is required (angle denominators vanish)."""


class DegeneratePair(LimitAlgebraError):
    """Two distinct points are required (x = y)."""


class InvalidCombination(LimitAlgebraError):
    """Hull coefficients must lie in [0,1] with maximum exactly 1."""


class OrthantViolation(LimitAlgebraError):
    """Points do not share a single closed orthant."""


class InvalidCoefficients(LimitAlgebraError):
    """Coefficients fail their required exact constraint."""


class NotAMember(LimitAlgebraError):
    """The point is not (certifiably) in the required set."""


class NegativeRadius(LimitAlgebraError):
    """Ball radii must be nonnegative."""


class NotOrthogonal(LimitAlgebraError):
    """The limit inner product of the pair is nonzero."""


class NotRightAngled(LimitAlgebraError):
    """The three-point form of the triple is nonzero."""


class NotOnUnitSquare(LimitAlgebraError):
    """Angle parametrization requires max(|x1|,|x2|) = 1 exactly."""


class ZeroArgument(LimitAlgebraError):
    """The argument of zero is undefined (polar form of 0)."""


class DegenerateConfiguration(LimitAlgebraError):
    """The configuration has vanishing limit determinant."""


class NotParallel(LimitAlgebraError):
    """The two lines are not parallel (directions not collinear)."""
