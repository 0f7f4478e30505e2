"""Two-point limit hulls, same-orthant hulls, membership, and distance decomposition.

A two-point hull point is a coordinatewise n-ary limit sum of
(t·x, r·x, s·y, w·y) with coefficients in [0,1] and maximum exactly 1.
Membership is decided by enumerating a finite candidate set of coefficient
breakpoints: every coordinate of a member is either 0, a scaled coordinate
of x, or a scaled coordinate of y, so the scaling factors are pinned to
ratio breakpoints (plus magnitude-tie solutions, which is where cancellation
can occur).  Completeness of that candidate set is conjectural; it is
cross-validated against dense grid sampling in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    EmptyList,
    InvalidCoefficients,
    InvalidCombination,
    NotAMember,
    OrthantViolation,
)
from .linalg import Vec, nary_vec_boxplus, scale, vec
from .metric import dist_boxplus
from .scalars import ONE, ZERO, ScalarLike, ScalarQ, _nary, q

__all__ = [
    "HullCombination",
    "co_point",
    "co_contains",
    "co_orthant",
    "dist_decomposition_check",
    "chain_distance",
]


@dataclass(frozen=True)
class HullCombination:
    """Hull coefficients (t, r, s, w) ∈ [0,1]⁴ with max = 1."""

    t: ScalarQ
    r: ScalarQ
    s: ScalarQ
    w: ScalarQ

    def __post_init__(self):
        for name in ("t", "r", "s", "w"):
            object.__setattr__(self, name, q(getattr(self, name)))
        cs = (self.t, self.r, self.s, self.w)
        if any(c < 0 or c > 1 for c in cs):
            raise InvalidCombination("coefficients must lie in [0, 1]")
        if max(cs) != 1:
            raise InvalidCombination("maximum coefficient must be exactly 1")

    def as_tuple(self) -> tuple:
        return (self.t, self.r, self.s, self.w)


def _pair(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> tuple[Vec, Vec]:
    xv, yv = vec(x), vec(y)
    if len(xv) != len(yv):
        raise DimensionMismatch(f"dim {len(xv)} vs {len(yv)}")
    return xv, yv


def co_point(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], c: HullCombination
) -> Vec:
    """The hull point with coefficients c: coordinatewise Ϝ of (t·x_i, r·x_i, s·y_i, w·y_i)."""
    xv, yv = _pair(x, y)
    if not isinstance(c, HullCombination):
        c = HullCombination(*c)
    t, r, s, w = c.as_tuple()
    return tuple(
        _nary((t * a, r * a, s * b, w * b)) for a, b in zip(xv, yv)
    )


def _coord_feasible(zi: ScalarQ, xi: ScalarQ, yi: ScalarQ) -> bool:
    # a hull coordinate is 0, or a [0,1]-multiple of x_i, or of y_i
    if zi == 0:
        return True
    if xi != 0 and (zi > 0) == (xi > 0) and abs(zi) <= abs(xi):
        return True
    if yi != 0 and (zi > 0) == (yi > 0) and abs(zi) <= abs(yi):
        return True
    return False


def _hull_candidates(xv: Vec, yv: Vec, zv: Vec) -> list:
    """Coefficient breakpoints: {0,1}, the |z|/|x| and |z|/|y| ratios, one
    round of magnitude-tie solutions t|x_i| = s|y_i| anchored in the base set."""
    cand = {ZERO, ONE}
    for zi, xi in zip(zv, xv):
        if xi != 0:
            r = abs(zi) / abs(xi)
            if r <= 1:
                cand.add(r)
    for zi, yi in zip(zv, yv):
        if yi != 0:
            r = abs(zi) / abs(yi)
            if r <= 1:
                cand.add(r)
    for c in list(cand):
        for xi, yi in zip(xv, yv):
            if yi != 0 and xi != 0:
                for r in (c * abs(xi) / abs(yi), c * abs(yi) / abs(xi)):
                    if r <= 1:
                        cand.add(r)
    return sorted(cand)


def co_contains(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], z: Sequence[ScalarLike]
) -> bool:
    """Decide hull membership of z by exact candidate enumeration.

    Enumerates (t, r, s, w) over the breakpoint candidates with the
    symmetries t ≥ r, s ≥ w factored out and max = 1 enforced; each
    surviving combination is verified coordinatewise in exact arithmetic.
    """
    xv, yv = _pair(x, y)
    zv = vec(z)
    if len(zv) != len(xv):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(xv)}")
    if not all(_coord_feasible(zi, xi, yi) for zi, xi, yi in zip(zv, xv, yv)):
        return False

    pairs = list(zip(zv, xv, yv))

    def matches(t: ScalarQ, r: ScalarQ, s: ScalarQ, w: ScalarQ) -> bool:
        for zi, xi, yi in pairs:
            if _nary((t * xi, r * xi, s * yi, w * yi)) != zi:
                return False
        return True

    cand = _hull_candidates(xv, yv, zv)
    # max = 1 with t >= r and s >= w canonicalized: either t = 1 or s = 1
    for s in cand:
        for w in cand:
            if w > s:
                break
            for r in cand:
                if matches(ONE, r, s, w):
                    return True
    for t in cand:
        if t == 1:
            continue
        for r in cand:
            if r > t:
                break
            for w in cand:
                if matches(t, r, ONE, w):
                    return True
    return False


def co_orthant(
    points: Sequence[Sequence[ScalarLike]], coeffs: Sequence[ScalarLike]
) -> Vec:
    """Hull point of finitely many same-orthant points.

    Coefficients must lie in [0,1] with maximum exactly 1; all points must
    share one closed orthant (per coordinate, no mixed strict signs).  The
    result is the coordinatewise n-ary limit sum of the scaled points —
    which here collapses to the signed coordinatewise extremum.
    """
    pts = [vec(p) for p in points]
    if not pts:
        raise EmptyList("no points")
    n = len(pts[0])
    for p in pts[1:]:
        if len(p) != n:
            raise DimensionMismatch("points of mixed dimensions")
    ts = [q(t) for t in coeffs]
    if len(ts) != len(pts):
        raise InvalidCoefficients(f"{len(ts)} coefficients for {len(pts)} points")
    if any(t < 0 or t > 1 for t in ts):
        raise InvalidCoefficients("coefficients must lie in [0, 1]")
    if max(ts) != 1:
        raise InvalidCoefficients("maximum coefficient must be exactly 1")
    for i in range(n):
        col = [p[i] for p in pts]
        if any(v > 0 for v in col) and any(v < 0 for v in col):
            raise OrthantViolation(f"coordinate {i + 1} has mixed signs")
    return nary_vec_boxplus([scale(t, p) for t, p in zip(ts, pts)])


def dist_decomposition_check(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], z: Sequence[ScalarLike]
) -> bool:
    """For a hull member z: does d(x,y) = max(d(x,z), d(z,y)) hold exactly?

    Raises NotAMember when the membership search cannot certify z.
    """
    if not co_contains(x, y, z):
        raise NotAMember("z is not a certified member of the hull of x, y")
    return dist_boxplus(x, y) == max(dist_boxplus(x, z), dist_boxplus(z, y))


def chain_distance(points: Sequence[Sequence[ScalarLike]]) -> ScalarQ:
    """Largest consecutive distance along a chain of points.

    Under the chain decomposition hypotheses (consecutive hulls decompose the
    end-to-end hull and meet only at shared endpoints — asserted by the
    caller, not decidable here), this equals the end-to-end distance.
    """
    pts = [vec(p) for p in points]
    if len(pts) < 2:
        return ZERO
    return max(dist_boxplus(a, b) for a, b in zip(pts, pts[1:]))
