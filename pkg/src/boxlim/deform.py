"""Finite-p deformed arithmetic: the independent convergence oracle.

Every limit operation in this package is the p → ∞ limit of ordinary
arithmetic transported through the odd power map φ_p(λ) = λ^(2p+1).  This
module evaluates the finite-p side: power sums are computed in exact
rational arithmetic, and only the final odd root is taken in
arbitrary-precision floating point (mpmath), at a working precision that
grows with p.  Exact cancellations therefore stay exactly zero at every p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from mpmath import mp, mpf

from .errors import DegeneratePair, DimensionMismatch, EmptyList, TooLarge, ZeroVector
from .scalars import ScalarLike, ScalarQ, q

__all__ = [
    "PParam",
    "ConvergenceReport",
    "DEFAULT_P_GRID",
    "DEFAULT_TOL",
    "p_sum",
    "exact_power_sum_is_zero",
    "p_inner",
    "p_norm",
    "p_dist",
    "p_det",
    "p_matvec",
    "p_cos",
    "p_sin",
    "co_p_sample",
    "line_p_sample",
    "converge",
]

DEFAULT_P_GRID = (1, 2, 4, 8, 16, 32)
DEFAULT_TOL = 1e-6


def _min_precision(p: int) -> int:
    # (2p+1)-th powers of near-1 ratios need headroom beyond double precision
    return 64 + 16 * (2 * p + 1)


@dataclass(frozen=True)
class PParam:
    """Deformation parameter p plus the binary working precision for roots."""

    p: int
    working_precision: int = 0  # 0 means "use the minimum for this p"

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("p must be a nonnegative integer")
        least = _min_precision(self.p)
        if self.working_precision == 0:
            object.__setattr__(self, "working_precision", least)
        elif self.working_precision < least:
            raise ValueError(
                f"working_precision {self.working_precision} < required {least} for p={self.p}"
            )

    @property
    def exponent(self) -> int:
        """The odd exponent 2p+1 of the power map."""
        return 2 * self.p + 1


def _pp(pp: PParam | int) -> PParam:
    return pp if isinstance(pp, PParam) else PParam(int(pp))


def _to_mpf(v: ScalarQ) -> mpf:
    """Exact rational -> mpf at the current working precision."""
    return mpf(int(v.numerator)) / mpf(int(v.denominator))


def _signed_root(value, k: int):
    """Real k-th root with the odd-root sign convention (k odd unless value >= 0)."""
    if value == 0:
        return mpf(0)
    if value > 0:
        return mp.root(value, k)
    return -mp.root(-value, k)


def _qvec(x: Sequence[ScalarLike]) -> tuple:
    return tuple(q(v) for v in x)


def _real(v) -> mpf:
    """Loose real parameter (oracle side only): floats allowed here."""
    if isinstance(v, (int, float)) or type(v) is mpf:
        return mpf(v)
    return _to_mpf(q(v))


def _same_dim(x: tuple, y: tuple):
    if len(x) != len(y):
        raise DimensionMismatch(f"dim {len(x)} vs {len(y)}")


# ---------------------------------------------------------------------------
# deformed scalar/vector operations


def p_sum(values: Sequence[ScalarLike], pp: PParam | int) -> mpf:
    """(Σ x_i^(2p+1))^(1/(2p+1)) — the deformed indexed sum, converging to Ϝ."""
    pp = _pp(pp)
    vals = _qvec(values)
    if not vals:
        raise EmptyList("deformed sum of an empty list")
    k = pp.exponent
    total = sum(v**k for v in vals)  # exact
    with mp.workprec(pp.working_precision):
        return _signed_root(_to_mpf(q(total)), k)


def exact_power_sum_is_zero(values: Sequence[ScalarLike], p: int) -> bool:
    """Exact rational test Σ x_i^(2p+1) = 0 (no floating point involved)."""
    k = 2 * int(p) + 1
    return sum(v**k for v in _qvec(values)) == 0


def p_inner(x: Sequence[ScalarLike], y: Sequence[ScalarLike], pp: PParam | int) -> mpf:
    """(Σ (x_i y_i)^(2p+1))^(1/(2p+1)), converging to the limit inner product."""
    xv, yv = _qvec(x), _qvec(y)
    _same_dim(xv, yv)
    return p_sum([a * b for a, b in zip(xv, yv)], pp)


def p_norm(x: Sequence[ScalarLike], pp: PParam | int) -> mpf:
    """(Σ |x_i|^(2(2p+1)))^(1/(2(2p+1))), converging to the Chebyshev norm."""
    pp = _pp(pp)
    xv = _qvec(x)
    k2 = 2 * pp.exponent
    total = sum(v**k2 for v in xv)  # even powers: exact and nonnegative
    with mp.workprec(pp.working_precision):
        if total == 0:
            return mpf(0)
        return mp.root(_to_mpf(q(total)), k2)


def p_dist(x: Sequence[ScalarLike], y: Sequence[ScalarLike], pp: PParam | int) -> mpf:
    """(Σ |x_i^(2p+1) − y_i^(2p+1)|²)^(1/(2(2p+1))), converging to the limit distance."""
    pp = _pp(pp)
    xv, yv = _qvec(x), _qvec(y)
    _same_dim(xv, yv)
    k = pp.exponent
    total = sum((a**k - b**k) ** 2 for a, b in zip(xv, yv))  # exact, >= 0
    with mp.workprec(pp.working_precision):
        if total == 0:
            return mpf(0)
        return mp.root(_to_mpf(q(total)), 2 * k)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def p_det(A: Sequence[Sequence[ScalarLike]], pp: PParam | int) -> mpf:
    """Signed odd root of the exact permutation sum of entry powers."""
    pp = _pp(pp)
    rows = [_qvec(row) for row in A]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("matrix must be square")
    if n > 8:
        raise TooLarge(f"determinant limited to n <= 8, got {n}")
    k = pp.exponent
    powered = [[v**k for v in row] for row in rows]
    total = q(0)
    for perm in itertools.permutations(range(n)):
        prod = powered[0][perm[0]]
        for i in range(1, n):
            prod = prod * powered[i][perm[i]]
        total += _perm_sign(perm) * prod
    with mp.workprec(pp.working_precision):
        return _signed_root(_to_mpf(q(total)), k)


def p_matvec(
    A: Sequence[Sequence[ScalarLike]], x: Sequence[ScalarLike], pp: PParam | int
) -> tuple:
    """Coordinatewise deformed sum of row products (matrix action at finite p)."""
    xv = _qvec(x)
    rows = [_qvec(row) for row in A]
    for row in rows:
        _same_dim(row, xv)
    return tuple(p_sum([a * b for a, b in zip(row, xv)], pp) for row in rows)


def p_cos(x: Sequence[ScalarLike], y: Sequence[ScalarLike], pp: PParam | int) -> mpf:
    """Deformed cosine ⟨x,y⟩_p / (‖x‖_p ‖y‖_p)."""
    pp = _pp(pp)
    xv, yv = _qvec(x), _qvec(y)
    _same_dim(xv, yv)
    if all(v == 0 for v in xv) or all(v == 0 for v in yv):
        raise ZeroVector("deformed cosine needs nonzero vectors")
    with mp.workprec(pp.working_precision):
        return p_inner(xv, yv, pp) / (p_norm(xv, pp) * p_norm(yv, pp))


def p_sin(x: Sequence[ScalarLike], y: Sequence[ScalarLike], pp: PParam | int) -> mpf:
    """Deformed sine: 2×2 deformed determinant over the norm product (dim 2)."""
    pp = _pp(pp)
    xv, yv = _qvec(x), _qvec(y)
    _same_dim(xv, yv)
    if len(xv) != 2:
        raise DimensionMismatch("deformed sine is defined in dimension 2")
    if all(v == 0 for v in xv) or all(v == 0 for v in yv):
        raise ZeroVector("deformed sine needs nonzero vectors")
    with mp.workprec(pp.working_precision):
        det = p_det(((xv[0], yv[0]), (xv[1], yv[1])), pp)
        return det / (p_norm(xv, pp) * p_norm(yv, pp))


# ---------------------------------------------------------------------------
# deformed segments and lines


def co_p_sample(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], pp: PParam | int, t
) -> tuple:
    """Point of the deformed two-point hull at parameter t ∈ [0,1].

    Coordinates are φ_p^{-1}(t^(2p+1) φ_p(x_i) + (1 − t^(2p+1)) φ_p(y_i)).
    """
    pp = _pp(pp)
    xv, yv = _qvec(x), _qvec(y)
    _same_dim(xv, yv)
    if xv == yv:
        raise DegeneratePair("hull sampling needs two distinct points")
    with mp.workprec(pp.working_precision):
        tm = _real(t)
        if not 0 <= tm <= 1:
            raise ValueError("t must lie in [0, 1]")
        k = pp.exponent
        tk = tm**k
        out = []
        for a, b in zip(xv, yv):
            val = tk * _to_mpf(q(a**k)) + (1 - tk) * _to_mpf(q(b**k))
            out.append(_signed_root(val, k))
        return tuple(out)


def line_p_sample(
    x: Sequence[ScalarLike], y: Sequence[ScalarLike], pp: PParam | int, s
) -> tuple:
    """Point of the deformed line through x, y with coefficients (s, 1 ⊟_p s)."""
    pp = _pp(pp)
    xv, yv = _qvec(x), _qvec(y)
    _same_dim(xv, yv)
    if xv == yv:
        raise DegeneratePair("line sampling needs two distinct points")
    with mp.workprec(pp.working_precision):
        sm = _real(s)
        k = pp.exponent
        sk = sm**k
        out = []
        for a, b in zip(xv, yv):
            val = sk * _to_mpf(q(a**k)) + (1 - sk) * _to_mpf(q(b**k))
            out.append(_signed_root(val, k))
        return tuple(out)


# ---------------------------------------------------------------------------
# convergence harness


@dataclass(frozen=True)
class ConvergenceReport:
    """Errors of a finite-p evaluator against its claimed limit along a p-grid."""

    p_grid: tuple[int, ...]
    errors: tuple[float, ...]
    converged: bool
    final_error: float
    tol: float = field(default=DEFAULT_TOL)

    def as_dict(self) -> dict:
        return {
            "p": list(self.p_grid),
            "error": list(self.errors),
            "converged": self.converged,
        }


def converge(
    evaluator: Callable[[int], object],
    limit: ScalarLike,
    p_grid: Sequence[int] | None = None,
    tol: float | None = None,
) -> ConvergenceReport:
    """Evaluate |evaluator(p) − limit| along the grid.

    converged ⇔ the final error is ≤ tol *and* the last three errors are
    non-increasing (early-p oscillation near magnitude ties is expected).
    """
    grid = tuple(int(p) for p in (p_grid if p_grid is not None else DEFAULT_P_GRID))
    if not grid:
        raise ValueError("p_grid must be nonempty")
    tol = DEFAULT_TOL if tol is None else float(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lim = q(limit)
    errors = []
    for p in grid:
        val = evaluator(p)
        with mp.workprec(_min_precision(p) + 64):
            errors.append(float(abs(mpf(val) - _to_mpf(lim))))
    tail = errors[-3:]
    monotone = all(tail[i] >= tail[i + 1] for i in range(len(tail) - 1))
    final = errors[-1]
    return ConvergenceReport(
        p_grid=grid,
        errors=tuple(errors),
        converged=(final <= tol and monotone),
        final_error=final,
        tol=tol,
    )
