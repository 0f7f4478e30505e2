"""Limit lines through two points: equations, membership, half-lines, parallels.

A line point is a coordinatewise n-ary limit sum of (t·x, r·x, s·y, w·y)
where the coefficient quadruple itself has n-ary limit sum exactly 1.  In
2D (and for n points in nD) the line has an exact equation: unit-row
replacement determinants give coefficients a and a constant c with

    lower_smile(a_i z_i)  ≤  c  ≤  upper_smile(a_i z_i)

characterizing membership, and both generators satisfy it by construction.

General nD membership has no known closed decision procedure; the
certificate search enumerates a finite breakpoint candidate set in stages
(exact arithmetic, deterministic order), and NotFound is advisory — backed
by a structural grid probe over the coefficient box.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateConfiguration,
    DegeneratePair,
    DimensionMismatch,
    InvalidCoefficients,
    NotParallel,
)
from .linalg import Vec, det_infty, vec
from .scalars import (
    ONE,
    ZERO,
    ScalarLike,
    ScalarQ,
    _nary,
    boxminus,
    lower_form,
    q,
    upper_form,
)

__all__ = [
    "LineForm",
    "HalfLine",
    "LineMembership",
    "line_point",
    "hyperplane_form",
    "line2d_form",
    "line_contains_2d",
    "line_contains_nd",
    "line_grid_probe",
    "half_lines",
    "is_parallel",
    "parallel_ratio",
    "parallel_normal_form",
]


@dataclass(frozen=True)
class LineForm:
    """Exact line/hyperplane equation: lower smile ≤ constant ≤ upper smile."""

    coeffs: Vec
    constant: ScalarQ
    orientation: str = "lower_form(coeffs, z) <= constant <= upper_form(coeffs, z)"


@dataclass(frozen=True)
class HalfLine:
    """Points offset + t·direction for t ≥ t_min (supports are disjoint).

    sense is +1 when direction = x ⊟ y and −1 when direction = y ⊟ x,
    fixing which certificate pattern reproduces point(t) from (x, y).
    """

    offset: Vec
    direction: Vec
    t_min: ScalarQ = ONE
    sense: int = 1

    def point(self, t: ScalarLike) -> Vec:
        t = q(t)
        return tuple(o + t * d for o, d in zip(self.offset, self.direction))

    def certificate(self, t: ScalarLike) -> tuple:
        """Line-membership coefficients of point(t) relative to the generators."""
        t = q(t)
        if self.sense >= 0:
            return (ONE, t, -t, ZERO)
        return (-t, ZERO, ONE, t)


@dataclass(frozen=True)
class LineMembership:
    """Outcome of the nD membership search; NotFound is advisory only."""

    found: bool
    certificate: tuple | None = None

    def __bool__(self) -> bool:
        return self.found


def _pair(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> tuple[Vec, Vec]:
    xv, yv = vec(x), vec(y)
    if len(xv) != len(yv):
        raise DimensionMismatch(f"dim {len(xv)} vs {len(yv)}")
    if xv == yv:
        raise DegeneratePair("two distinct points are required")
    return xv, yv


def line_point(
    x: Sequence[ScalarLike],
    y: Sequence[ScalarLike],
    t: ScalarLike,
    r: ScalarLike,
    s: ScalarLike,
    w: ScalarLike,
) -> Vec:
    """The line point with coefficients (t, r, s, w); their limit sum must be 1."""
    xv, yv = _pair(x, y)
    t, r, s, w = q(t), q(r), q(s), q(w)
    if _nary((t, r, s, w)) != 1:
        raise InvalidCoefficients("coefficient quadruple must have limit sum 1")
    return tuple(_nary((t * a, r * a, s * b, w * b)) for a, b in zip(xv, yv))


# ---------------------------------------------------------------------------
# exact equations (2D and nD hyperplanes)


def hyperplane_form(points: Sequence[Sequence[ScalarLike]]) -> LineForm:
    """Exact hyperplane equation through n points of dimension n.

    Points are the columns of the configuration matrix V; coefficient i is
    the limit determinant of V with row i replaced by the all-ones row and
    the constant is the limit determinant of V itself (must be nonzero).
    """
    pts = [vec(p) for p in points]
    n = len(pts)
    if n == 0:
        raise DimensionMismatch("no points")
    for p in pts:
        if len(p) != n:
            raise DimensionMismatch(f"need {n} points of dimension {n}")
    rows = [tuple(p[i] for p in pts) for i in range(n)]
    constant = det_infty(rows)
    if constant == 0:
        raise DegenerateConfiguration("limit determinant of the configuration is 0")
    ones = (ONE,) * n
    coeffs = tuple(
        det_infty([ones if i == k else rows[i] for i in range(n)]) for k in range(n)
    )
    form = LineForm(coeffs=coeffs, constant=constant)
    for p in pts:
        if not line_contains_2d(form, p):
            raise DegenerateConfiguration("a generator fails its own equation")
    return form


def line2d_form(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> LineForm:
    """Exact 2D line equation through two distinct points (via hyperplane_form)."""
    xv, yv = _pair(x, y)
    if len(xv) != 2:
        raise DimensionMismatch("line equations live in dimension 2")
    return hyperplane_form([xv, yv])


def line_contains_2d(f: LineForm, z: Sequence[ScalarLike]) -> bool:
    """Exact membership: lower smile ≤ constant ≤ upper smile of coeffs·z."""
    zv = vec(z)
    if len(zv) != len(f.coeffs):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(f.coeffs)}")
    return lower_form(f.coeffs, zv) <= f.constant <= upper_form(f.coeffs, zv)


# ---------------------------------------------------------------------------
# nD membership certificates


def _line_candidates(xv: Vec, yv: Vec, zv: Vec) -> list:
    """Breakpoint candidates for certificate coefficients, in a fixed order.

    {0, ±1}, the signed ratios ±z_i/x_i and ±z_i/y_i, and one augmentation
    round of magnitude-tie solutions (±c·x_i/y_i, ±c·y_i/x_i) — ties are
    where coordinates can cancel inside a combination.
    """
    base = {ZERO, ONE, -ONE}
    for zi, xi in zip(zv, xv):
        if xi != 0:
            base.add(zi / xi)
            base.add(-(zi / xi))
    for zi, yi in zip(zv, yv):
        if yi != 0:
            base.add(zi / yi)
            base.add(-(zi / yi))
    cand = set(base)
    for c in base:
        for xi, yi in zip(xv, yv):
            if xi != 0 and yi != 0:
                for r in (c * xi / yi, c * yi / xi):
                    cand.add(r)
                    cand.add(-r)
    return sorted(cand, key=lambda v: (abs(v), v))


def _count_valid_bounded(quad: tuple) -> bool:
    # all |entries| <= 1: limit sum is 1 iff the +1s strictly outnumber the -1s
    plus = 0
    minus = 0
    for v in quad:
        if v == 1:
            plus += 1
        elif v == -1:
            minus += 1
    return plus > minus


def line_contains_nd(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], z: Sequence[ScalarLike]
) -> LineMembership:
    """Search for an exact membership certificate (t, r, s, w) for z.

    Stages (deterministic, first hit wins): the generators themselves; the
    cancellation families (1, c, −c, 0) and (c, 0, 1, −c); one-slot-one plus
    a cancelling pair and a bounded slot; all-bounded quadruples.  A returned
    certificate is exact and final; NotFound is advisory (the candidate set
    is conjecturally complete), cross-checkable with line_grid_probe.
    """
    xv, yv = _pair(x, y)
    zv = vec(z)
    if len(zv) != len(xv):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(xv)}")

    pairs = list(zip(zv, xv, yv))

    def matches(t: ScalarQ, r: ScalarQ, s: ScalarQ, w: ScalarQ) -> bool:
        for zi, xi, yi in pairs:
            if _nary((t * xi, r * xi, s * yi, w * yi)) != zi:
                return False
        return True

    def member(t, r, s, w) -> LineMembership:
        return LineMembership(True, (t, r, s, w))

    # stage 0: generators
    if zv == xv:
        return member(ONE, ZERO, ZERO, ZERO)
    if zv == yv:
        return member(ZERO, ZERO, ONE, ZERO)

    cand = _line_candidates(xv, yv, zv)
    bounded = [c for c in cand if abs(c) <= 1]

    # stage 1: cancellation families (always valid coefficient quadruples)
    for c in cand:
        if matches(ONE, c, -c, ZERO):
            return member(ONE, c, -c, ZERO)
        if matches(c, ZERO, ONE, -c):
            return member(c, ZERO, ONE, -c)

    # stage 2: one slot fixed to 1, one cancelling pair, one bounded slot
    for c in cand:
        for u in bounded:
            if u == -1:
                continue  # residual {1, u} must keep limit sum 1
            for quad in (
                (ONE, u, c, -c),
                (c, -c, ONE, u),
                (ONE, c, -c, u),
                (u, c, ONE, -c),
            ):
                if matches(*quad):
                    return member(*quad)

    # stage 3: all-bounded quadruples (x-side and y-side unordered)
    for r in bounded:
        for s in bounded:
            for w in bounded:
                if w > s:
                    break
                quad = (ONE, r, s, w)
                if _count_valid_bounded(quad) and matches(*quad):
                    return member(*quad)
    for t in bounded:
        if t == 1:
            continue
        for r in bounded:
            if r > t:
                break
            for w in bounded:
                quad = (t, r, ONE, w)
                if _count_valid_bounded(quad) and matches(*quad):
                    return member(*quad)
    return LineMembership(False, None)


def line_grid_probe(
    x: Sequence[ScalarLike],
    y: Sequence[ScalarLike],
    z: Sequence[ScalarLike],
    step: ScalarLike = q(1, 32),
    bound: ScalarLike = 8,
) -> LineMembership:
    """Exhaustive certificate search over a coefficient grid (advisory oracle).

    Sound and complete over the grid: a quadruple with limit sum 1 either has
    all entries in [−1, 1] with the +1s outnumbering the −1s, or contains an
    exactly cancelling pair (c, −c) with |c| > 1 next to a residual pair
    (1, v) with v ≠ −1 — only those shapes are enumerated, in exact
    arithmetic, so no grid point is missed.
    """
    xv, yv = _pair(x, y)
    zv = vec(z)
    if len(zv) != len(xv):
        raise DimensionMismatch(f"dim {len(zv)} vs {len(xv)}")
    step = q(step)
    bound = q(bound)
    if step <= 0 or bound < 1:
        raise ValueError("need step > 0 and bound >= 1")
    k_unit = ONE / step
    if k_unit.denominator != 1:
        raise ValueError("step must divide 1")
    k_unit = int(k_unit)
    k_bound = int((bound / step).numerator // (bound / step).denominator)

    pairs = list(zip(zv, xv, yv))

    def matches(t, r, s, w) -> bool:
        for zi, xi, yi in pairs:
            if _nary((t * xi, r * xi, s * yi, w * yi)) != zi:
                return False
        return True

    unit_vals = [i * step for i in range(-k_unit, k_unit + 1)]
    side_pairs = []  # unordered pairs (a >= b) with their ±1 counts
    for ia, a in enumerate(unit_vals):
        for b in unit_vals[: ia + 1]:
            plus = (a == 1) + (b == 1)
            minus = (a == -1) + (b == -1)
            side_pairs.append((a, b, plus, minus))

    # shape A: everything within [-1, 1]
    for t, r, p1, m1 in side_pairs:
        for s, w, p2, m2 in side_pairs:
            if p1 + p2 > m1 + m2 and matches(t, r, s, w):
                return LineMembership(True, (t, r, s, w))

    # shape B: cancelling pair beyond magnitude 1 plus residual (1, v)
    big_vals = [i * step for i in range(k_unit + 1, k_bound + 1)]
    for c in big_vals:
        for v in unit_vals:
            if v == -1:
                continue
            for quad in (
                (c, -c, ONE, v),
                (ONE, v, c, -c),
                (ONE, c, -c, v),
                (ONE, -c, c, v),
                (v, c, ONE, -c),
                (v, -c, ONE, c),
            ):
                if matches(*quad):
                    return LineMembership(True, quad)
    return LineMembership(False, None)


# ---------------------------------------------------------------------------
# half-lines and parallels


def half_lines(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike]
) -> tuple[HalfLine, HalfLine]:
    """The two half-lines inside the line: shared part plus stretched difference.

    The offset keeps the coordinates where x and y agree (zero elsewhere);
    the directions are x ⊟ y and y ⊟ x; points offset + t·direction for
    t ≥ 1 carry the exact membership certificate (1, t, −t, 0).
    """
    xv, yv = _pair(x, y)
    offset = tuple(a if a == b else ZERO for a, b in zip(xv, yv))
    d1 = tuple(boxminus(a, b) for a, b in zip(xv, yv))
    d2 = tuple(boxminus(b, a) for a, b in zip(xv, yv))
    return (HalfLine(offset, d1, sense=1), HalfLine(offset, d2, sense=-1))


def _collinear_ratio(d1: Vec, d2: Vec):
    """α with d1 = α·d2 exactly, or None."""
    alpha = None
    for a, b in zip(d1, d2):
        if b == 0:
            if a != 0:
                return None
        else:
            r = a / b
            if alpha is None:
                alpha = r
            elif r != alpha:
                return None
    if alpha is None or alpha == 0:
        return None
    return alpha


def is_parallel(
    x: Sequence[ScalarLike],
    y: Sequence[ScalarLike],
    u: Sequence[ScalarLike],
    v: Sequence[ScalarLike],
) -> bool:
    """True iff the difference directions x ⊟ y and u ⊟ v are exactly collinear."""
    xv, yv = _pair(x, y)
    uv, vv = _pair(u, v)
    if len(xv) != len(uv):
        raise DimensionMismatch(f"dim {len(xv)} vs {len(uv)}")
    dxy = tuple(boxminus(a, b) for a, b in zip(xv, yv))
    duv = tuple(boxminus(a, b) for a, b in zip(uv, vv))
    return _collinear_ratio(dxy, duv) is not None


def parallel_ratio(
    x: Sequence[ScalarLike],
    y: Sequence[ScalarLike],
    u: Sequence[ScalarLike],
    v: Sequence[ScalarLike],
) -> ScalarQ:
    """The exact α with x ⊟ y = α·(u ⊟ v); raises NotParallel if none exists."""
    xv, yv = _pair(x, y)
    uv, vv = _pair(u, v)
    if len(xv) != len(uv):
        raise DimensionMismatch(f"dim {len(xv)} vs {len(uv)}")
    dxy = tuple(boxminus(a, b) for a, b in zip(xv, yv))
    duv = tuple(boxminus(a, b) for a, b in zip(uv, vv))
    alpha = _collinear_ratio(dxy, duv)
    if alpha is None:
        raise NotParallel("difference directions are not collinear")
    return alpha


def parallel_normal_form(
    x: Sequence[ScalarLike],
    y: Sequence[ScalarLike],
    u: Sequence[ScalarLike],
    v: Sequence[ScalarLike],
) -> tuple[Vec, ScalarQ, ScalarQ]:
    """Shared coefficients for two parallel 2D lines, with both constants.

    Returns (a, c, d): the first line is lower ≤ c ≤ upper in the smile forms
    of a·z, and the second is the same with constant d — its own constant
    rescaled by the direction ratio.  Rescaling by a negative ratio swaps the
    two smile branches, which is exactly compensated by the branch swap under
    negative scaling, so the normalized predicate keeps its shape.
    """
    form_d = line2d_form(x, y)
    form_e = line2d_form(u, v)
    xv, yv = vec(x), vec(y)
    uv, vv = vec(u), vec(v)
    dxy = tuple(boxminus(a, b) for a, b in zip(xv, yv))
    duv = tuple(boxminus(a, b) for a, b in zip(uv, vv))
    beta = _collinear_ratio(duv, dxy)  # u ⊟ v = beta·(x ⊟ y)
    if beta is None:
        raise NotParallel("difference directions are not collinear")
    if form_e.coeffs != tuple(beta * a for a in form_d.coeffs):
        raise DegenerateConfiguration("coefficient vectors are not proportional")
    return (form_d.coeffs, form_d.constant, form_e.constant / beta)
