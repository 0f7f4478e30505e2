"""The limit distance d⊞, its ultrametric laws, ball geometry, and Ϝ-convergence.

d⊞(x,y) = max_i |x_i ⊟ y_i| has the closed form: 0 when x = y, otherwise the
largest of max(|x_i|, |y_i|) over the coordinates where x and y disagree.
Closed balls decompose coordinatewise: a coordinate with |center_k| > radius
is pinned exactly to the center value, every other coordinate is free within
[−radius, radius].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DimensionMismatch, NegativeRadius
from .scalars import ScalarLike, ScalarQ, ZERO, q
from .linalg import Vec, vec

__all__ = [
    "Fixed",
    "Free",
    "BallDescriptor",
    "dist_boxplus",
    "ball_describe",
    "ball_contains",
    "f_limit_check",
]


def dist_boxplus(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> ScalarQ:
    """Limit distance: the dominant disagreeing magnitude (an ultrametric)."""
    xv, yv = vec(x), vec(y)
    if len(xv) != len(yv):
        raise DimensionMismatch(f"dim {len(xv)} vs {len(yv)}")
    best = ZERO
    for a, b in zip(xv, yv):
        if a != b:
            m = max(abs(a), abs(b))  # = |a ⊟ b| whenever a ≠ b
            if m > best:
                best = m
    return best


@dataclass(frozen=True)
class Fixed:
    """Ball coordinate pinned exactly to the center value."""

    value: ScalarQ


@dataclass(frozen=True)
class Free:
    """Ball coordinate free within [−bound, bound]; bound equals the radius."""

    bound: ScalarQ


@dataclass(frozen=True)
class BallDescriptor:
    """Exact coordinatewise description of a closed ball of d⊞."""

    center: Vec
    radius: ScalarQ
    coords: tuple  # per-coordinate Fixed(value) | Free(bound)


def ball_describe(x: Sequence[ScalarLike], alpha: ScalarLike) -> BallDescriptor:
    """Describe the closed ball around x of radius alpha, coordinate by coordinate.

    |x_k| > alpha pins coordinate k to x_k; |x_k| ≤ alpha frees it within
    [−alpha, alpha].  The degenerate regimes (single point, Chebyshev ball
    around the origin) fall out of the same rule.
    """
    center = vec(x)
    a = q(alpha)
    if a < 0:
        raise NegativeRadius(f"radius {a} < 0")
    coords = tuple(Fixed(v) if abs(v) > a else Free(a) for v in center)
    return BallDescriptor(center=center, radius=a, coords=coords)


def ball_contains(b: BallDescriptor, z: Sequence[ScalarLike]) -> bool:
    """Exact membership of z per the descriptor."""
    zv = vec(z)
    if len(zv) != len(b.coords):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(b.coords)}")
    for tag, v in zip(b.coords, zv):
        if isinstance(tag, Fixed):
            if v != tag.value:
                return False
        else:
            if abs(v) > tag.bound:
                return False
    return True


def _as_eps(eps: Union[ScalarLike, float]) -> ScalarQ:
    if isinstance(eps, float):
        return q(Fraction(eps))  # exact binary value of the float
    return q(eps)


def f_limit_check(
    sequence: Sequence[Sequence[ScalarLike]],
    x: Sequence[ScalarLike],
    eps: Union[ScalarLike, float] = 1e-6,
) -> bool:
    """Does the sequence converge to x in the limit sense?

    Nonzero coordinates of x must be attained exactly at some index and stay
    exact afterwards; zero coordinates must satisfy |z_k| ≤ eps over the last
    quarter of the sequence.
    """
    xv = vec(x)
    seq = [vec(zk) for zk in sequence]
    if not seq:
        return False
    for zk in seq:
        if len(zk) != len(xv):
            raise DimensionMismatch("sequence element dimension differs from target")
    bound = _as_eps(eps)
    n = len(seq)
    tail_start = n - max(1, n // 4)
    for i, xi in enumerate(xv):
        if xi != 0:
            attained = None
            for k, zk in enumerate(seq):
                if zk[i] == xi:
                    attained = k
                    break
            if attained is None:
                return False
            if any(zk[i] != xi for zk in seq[attained:]):
                return False
        else:
            if any(abs(zk[i]) > bound for zk in seq[tail_start:]):
                return False
    return True
