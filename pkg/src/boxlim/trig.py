"""Limit orthogonality and the trigonometry of the unit square.

The three-point inner form decides right angles in the limit algebra; for
orthogonal pairs it comes with an explicit cancellation pairing and an exact
Pythagorean identity.  Angles live on the boundary of the sup-norm unit
square, parameterized by a period-8 piecewise-linear coordinate with its own
cosine and sine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .deform import DEFAULT_P_GRID, DEFAULT_TOL, _pp, _signed_root
from .errors import (
    DimensionMismatch,
    NotOnUnitSquare,
    NotOrthogonal,
    NotRightAngled,
    ZeroVector,
)
from .linalg import Vec, det_infty, inner_infty, norm_infty, vec
from .metric import dist_boxplus
from .scalars import ONE, ZERO, ScalarLike, ScalarQ, _nary, q, qfloor

import mpmath as mp

__all__ = [
    "AngleParam",
    "OrthogonalPartition",
    "inner3_limit",
    "is_f_right_angled",
    "orthogonal_pairing",
    "pythagoras_check",
    "cos_infty",
    "sin_infty",
    "alpha",
    "alpha_inv",
    "pcos",
    "psin",
]


def _pair_dims(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> tuple[Vec, Vec]:
    xv, yv = vec(x), vec(y)
    if len(xv) != len(yv):
        raise DimensionMismatch(f"dim {len(xv)} vs {len(yv)}")
    return xv, yv


def inner3_limit(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], z: Sequence[ScalarLike]
) -> ScalarQ:
    """Three-point inner form: the limit sum of the 4n-term multiset
    {x_i y_i} ∪ {−x_i z_i} ∪ {−y_i z_i} ∪ {z_i²}."""
    xv, yv = _pair_dims(x, y)
    zv = vec(z)
    if len(zv) != len(xv):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(xv)}")
    terms = []
    for a, b, c in zip(xv, yv, zv):
        terms.append(a * b)
        terms.append(-a * c)
        terms.append(-b * c)
        terms.append(c * c)
    return _nary(terms)


def is_f_right_angled(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], z: Sequence[ScalarLike]
) -> bool:
    """True iff the triangle [x, y, z] has a limit right angle at z."""
    return inner3_limit(x, y, z) == 0


@dataclass(frozen=True)
class OrthogonalPartition:
    """Index pairs (1-based) whose products cancel exactly, plus at most one
    leftover index whose product is 0."""

    pairs: tuple
    leftover: int | None = None


def orthogonal_pairing(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike]
) -> OrthogonalPartition:
    """Explicit cancellation witness for ⟨x, y⟩∞ = 0.

    Zero limit sum forces the signed products to cancel pairwise within
    each magnitude level, so a perfect matching of opposite-sign products
    exists (zero products pair among themselves, at most one left over).
    Deterministic: indices are matched in increasing order per level.
    """
    xv, yv = _pair_dims(x, y)
    if inner_infty(xv, yv) != 0:
        raise NotOrthogonal("inner product is nonzero")
    products = [a * b for a, b in zip(xv, yv)]
    levels: dict = {}
    zeros = []
    for i, p in enumerate(products, start=1):
        if p == 0:
            zeros.append(i)
        else:
            levels.setdefault(abs(p), ([], []))[0 if p > 0 else 1].append(i)
    pairs = []
    for mag in sorted(levels, reverse=True):
        pos, neg = levels[mag]
        if len(pos) != len(neg):
            # unreachable when the limit sum is 0: the top unbalanced level
            # would survive cancellation
            raise NotOrthogonal(f"unbalanced level {mag}")
        pairs.extend(zip(pos, neg))
    while len(zeros) >= 2:
        pairs.append((zeros.pop(0), zeros.pop(0)))
    leftover = zeros[0] if zeros else None
    return OrthogonalPartition(tuple(tuple(p) for p in pairs), leftover)


def pythagoras_check(
    x: Sequence[ScalarLike],
    y: Sequence[ScalarLike],
    z: Sequence[ScalarLike],
    p_grid: Sequence = DEFAULT_P_GRID,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Pythagorean identity for a limit right angle at z.

    Exact part: d(x, y) = max(d(x, z), d(y, z)) in the limit ultrametric.
    Deformed part: at each p, the squared deformed distances satisfy the
    p-deformed addition identity — equivalently the exact power sums obey
    S_xy = S_xz + S_yz, checked through signed roots within tol.
    """
    xv, yv = _pair_dims(x, y)
    zv = vec(z)
    tol = float(tol)
    if len(zv) != len(xv):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(xv)}")
    if inner3_limit(xv, yv, zv) != 0:
        raise NotRightAngled("no limit right angle at z")
    lhs = dist_boxplus(xv, yv)
    rhs = max(dist_boxplus(xv, zv), dist_boxplus(yv, zv))
    if lhs != rhs:
        return False
    for p_like in p_grid:
        p = _pp(p_like)
        k = p.exponent
        s_xy = sum(((a**k - b**k) ** 2 for a, b in zip(xv, yv)), ZERO)
        s_xz = sum(((a**k - c**k) ** 2 for a, c in zip(xv, zv)), ZERO)
        s_yz = sum(((b**k - c**k) ** 2 for b, c in zip(yv, zv)), ZERO)
        with mp.workprec(p.working_precision):
            left = _signed_root(s_xy, 2 * k)
            right = _signed_root(s_xz + s_yz, 2 * k)
            if abs(left - right) > tol:
                return False
    return True


def cos_infty(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> ScalarQ:
    """Limit cosine: ⟨x, y⟩∞ / (‖x‖∞ ‖y‖∞), an exact rational in [−1, 1]."""
    xv, yv = _pair_dims(x, y)
    nx, ny = norm_infty(xv), norm_infty(yv)
    if nx == 0 or ny == 0:
        raise ZeroVector("cosine needs nonzero vectors")
    return inner_infty(xv, yv) / (nx * ny)


def sin_infty(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> ScalarQ:
    """Limit sine in dimension 2: |x, y|∞ / (‖x‖∞ ‖y‖∞) with x, y as columns."""
    xv, yv = _pair_dims(x, y)
    if len(xv) != 2:
        raise DimensionMismatch("limit sine lives in dimension 2")
    nx, ny = norm_infty(xv), norm_infty(yv)
    if nx == 0 or ny == 0:
        raise ZeroVector("sine needs nonzero vectors")
    d = det_infty(((xv[0], yv[0]), (xv[1], yv[1])))
    return d / (nx * ny)


# ---------------------------------------------------------------------------
# the unit-square angle coordinate


@dataclass(frozen=True)
class AngleParam:
    """Angle coordinate on the unit-square boundary, reduced into [0, 8)."""

    theta: ScalarQ

    def __post_init__(self):
        t = q(self.theta)
        t = t - 8 * qfloor(t / 8)
        object.__setattr__(self, "theta", t)


def _reduce8(theta: ScalarLike) -> ScalarQ:
    t = q(theta)
    return t - 8 * qfloor(t / 8)


def pcos(theta: ScalarLike) -> ScalarQ:
    """Period-8 piecewise-linear cosine of the square."""
    t = _reduce8(theta)
    if t < 1:
        return ONE
    if t < 3:
        return 2 - t
    if t < 5:
        return -ONE
    if t < 7:
        return t - 6
    return ONE


def psin(theta: ScalarLike) -> ScalarQ:
    """Period-8 piecewise-linear sine of the square."""
    t = _reduce8(theta)
    if t < 1:
        return t
    if t < 3:
        return ONE
    if t < 5:
        return 4 - t
    if t < 7:
        return -ONE
    return t - 8


def alpha(z: Sequence[ScalarLike]) -> AngleParam:
    """Angle of a point on the unit-square boundary (max(|z₁|, |z₂|) = 1)."""
    zv = vec(z)
    if len(zv) != 2:
        raise DimensionMismatch("angles live in dimension 2")
    z1, z2 = zv
    if max(abs(z1), abs(z2)) != 1:
        raise NotOnUnitSquare("point is not on the unit-square boundary")
    if z1 == 1 and 0 <= z2 <= 1:
        return AngleParam(z2)
    if z2 == 1:
        return AngleParam(2 - z1)
    if z1 == -1:
        return AngleParam(4 - z2)
    if z2 == -1:
        return AngleParam(6 + z1)
    # remaining: z1 == 1 with -1 < z2 < 0
    return AngleParam(8 + z2)


def alpha_inv(theta) -> Vec:
    """Inverse angle map: the boundary point (pcos θ, psin θ)."""
    t = theta.theta if isinstance(theta, AngleParam) else q(theta)
    return (pcos(t), psin(t))
