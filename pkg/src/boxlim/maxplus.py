"""Symmetrized Max-Plus carrier: signed log-magnitudes with transported limit ops.

Elements are 0 (the image of −∞) or a sign with an exact rational
log-magnitude; Signed(−, a) stands for a + iπ.  Transported addition keeps
the larger log-magnitude and cancels exact symmetric ties; multiplication
adds log-magnitudes and multiplies signs.  All algebraic laws hold exactly
in this encoding; the exponential bridge to floats appears only in the
dequantization helpers, since e^a is irrational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, EmptyList, InvalidCombination
from .linalg import PseudoFieldOps, SymmetricSpaceOps
from .scalars import ZERO, ScalarLike, ScalarQ, q

__all__ = [
    "MSym",
    "MZERO",
    "MONE",
    "msym",
    "mp_parse",
    "mp_format",
    "mp_boxplus",
    "mp_boxminus",
    "mp_neg",
    "mp_otimes",
    "mp_inv",
    "mp_div",
    "mp_nary",
    "mp_abs",
    "mp_abs_le",
    "mp_dist",
    "mp_dist_std",
    "psi_exp",
    "psi_ln",
    "mp_hull_point",
    "mp_hull_contains",
    "MAXPLUS_PSEUDO_FIELD",
    "maxplus_vector_space",
]


@dataclass(frozen=True)
class MSym:
    """Zero (sign 0) or Signed(±, logmag) with exact rational logmag."""

    sign: int
    logmag: ScalarQ = ZERO

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0, or +1, got {self.sign}")
        lm = ZERO if self.sign == 0 else q(self.logmag)
        object.__setattr__(self, "logmag", lm)

    def __bool__(self) -> bool:
        return self.sign != 0

    def __str__(self) -> str:
        return mp_format(self)


MZERO = MSym(0)
MONE = MSym(1, ZERO)


def msym(sign: int, logmag: ScalarLike = 0) -> MSym:
    return MSym(sign, q(logmag))


def mp_parse(text: str) -> MSym:
    """Element literals: "-inf", "3/2", "3/2+ipi"."""
    t = text.strip().replace(" ", "")
    if t in ("-inf", "-Inf", "-INF"):
        return MZERO
    if t.endswith("+ipi"):
        return MSym(-1, q(t[: -len("+ipi")]))
    return MSym(1, q(t))


def mp_format(z: MSym) -> str:
    if z.sign == 0:
        return "-inf"
    if z.sign < 0:
        return f"{z.logmag}+ipi"
    return f"{z.logmag}"


def mp_boxplus(z: MSym, w: MSym) -> MSym:
    """Transported limit sum: larger logmag wins, symmetric ties cancel."""
    if z.sign == 0:
        return w
    if w.sign == 0:
        return z
    if z.logmag > w.logmag:
        return z
    if w.logmag > z.logmag:
        return w
    return z if z.sign == w.sign else MZERO


def mp_neg(z: MSym) -> MSym:
    return MSym(-z.sign, z.logmag) if z.sign else MZERO


def mp_boxminus(z: MSym, w: MSym) -> MSym:
    return mp_boxplus(z, mp_neg(w))


def mp_otimes(z: MSym, w: MSym) -> MSym:
    """Transported product: logmags add, signs multiply, zero absorbs."""
    if z.sign == 0 or w.sign == 0:
        return MZERO
    return MSym(z.sign * w.sign, z.logmag + w.logmag)


def mp_inv(z: MSym) -> MSym:
    if z.sign == 0:
        raise ZeroDivisionError("zero element has no inverse")
    return MSym(z.sign, -z.logmag)


def mp_div(z: MSym, w: MSym) -> MSym:
    return mp_otimes(z, mp_inv(w))


def mp_nary(zs: Sequence[MSym]) -> MSym:
    """Transported n-ary limit sum: net sign per logmag level, top survivor."""
    zs = tuple(zs)
    if not zs:
        raise EmptyList("n-ary sum needs at least one element")
    net: dict = {}
    for z in zs:
        if z.sign:
            net[z.logmag] = net.get(z.logmag, 0) + z.sign
    top = None
    top_net = 0
    for lm, c in net.items():
        if c and (top is None or lm > top):
            top = lm
            top_net = c
    if top is None:
        return MZERO
    return MSym(1 if top_net > 0 else -1, top)


def mp_abs(z: MSym) -> MSym:
    return MSym(1, z.logmag) if z.sign else MZERO


def mp_abs_le(z: MSym, w: MSym) -> bool:
    """|z| ≤ |w| in the transported order (zero below everything)."""
    if z.sign == 0:
        return True
    if w.sign == 0:
        return False
    return z.logmag <= w.logmag


def mp_dist(zs: Sequence[MSym], ws: Sequence[MSym]) -> MSym:
    """Transported ultrametric: n-ary sum of |z_i ⊟ w_i|; zero iff equal."""
    zs, ws = tuple(zs), tuple(ws)
    if len(zs) != len(ws):
        raise DimensionMismatch(f"dim {len(zs)} vs {len(ws)}")
    if not zs:
        raise EmptyList("distance needs at least one coordinate")
    return mp_nary([mp_abs(mp_boxminus(a, b)) for a, b in zip(zs, ws)])


def psi_exp(z: MSym) -> float:
    """Exponential dequantization bridge (float-valued)."""
    if z.sign == 0:
        return 0.0
    return z.sign * math.exp(float(z.logmag))


def psi_ln(v: ScalarLike) -> MSym:
    """Logarithmic quantization bridge (float-accurate logmag)."""
    fv = float(v) if isinstance(v, float) else float(q(v))
    if fv == 0.0:
        return MZERO
    return MSym(1 if fv > 0 else -1, q(Fraction(math.log(abs(fv)))))


def mp_dist_std(zs: Sequence[MSym], ws: Sequence[MSym]) -> float:
    """Standard-valued ultrametric: exponential image of the transported one."""
    return psi_exp(mp_dist(zs, ws))


# ---------------------------------------------------------------------------
# convexity mirror


def _embed(values: Sequence[MSym]) -> tuple:
    """Exact order/product-preserving embedding MSym(s, l) ↦ s·2^(l·D)."""
    denoms = [int(z.logmag.denominator) for z in values if z.sign]
    d = math.lcm(*denoms) if denoms else 1
    out = []
    for z in values:
        if z.sign == 0:
            out.append(ZERO)
        else:
            e = int(z.logmag.numerator) * (d // int(z.logmag.denominator))
            mag = q(2) ** e if e >= 0 else q(1, 2 ** (-e))
            out.append(z.sign * mag)
    return tuple(out)


def mp_hull_point(
    x: Sequence[MSym], y: Sequence[MSym], coeffs: Sequence[MSym]
) -> tuple:
    """Two-point hull combination with transported coefficients.

    Coefficients must be zero or have positive sign with logmag ≤ 0, and at
    least one must be the unit — the transported picture of [0, 1] weights
    with maximum exactly 1.
    """
    xs, ys = tuple(x), tuple(y)
    if len(xs) != len(ys):
        raise DimensionMismatch(f"dim {len(xs)} vs {len(ys)}")
    cs = tuple(coeffs)
    if len(cs) != 4:
        raise InvalidCombination("need exactly four coefficients")
    for c in cs:
        if c.sign < 0 or (c.sign and c.logmag > 0):
            raise InvalidCombination("coefficients must be zero or (+, logmag ≤ 0)")
    if MONE not in cs:
        raise InvalidCombination("some coefficient must be the unit")
    t, r, s, w = cs
    return tuple(
        mp_nary(
            (mp_otimes(t, a), mp_otimes(r, a), mp_otimes(s, b), mp_otimes(w, b))
        )
        for a, b in zip(xs, ys)
    )


def mp_hull_contains(
    x: Sequence[MSym], y: Sequence[MSym], z: Sequence[MSym]
) -> bool:
    """Membership in the transported two-point hull.

    Decided through the exact embedding s·2^(l·D) into the rational carrier:
    the hull search only manipulates products, ratios, and magnitude
    comparisons of instance values, all of which the embedding preserves,
    and any certificate it returns lies in the embedded subgroup.
    """
    from .hull import co_contains

    xs, ys, zs = tuple(x), tuple(y), tuple(z)
    if not (len(xs) == len(ys) == len(zs)):
        raise DimensionMismatch("equal dimensions required")
    flat = list(xs) + list(ys) + list(zs)
    emb = _embed(flat)
    n = len(xs)
    return co_contains(emb[:n], emb[n : 2 * n], emb[2 * n :])


# ---------------------------------------------------------------------------
# axiom bundles


MAXPLUS_PSEUDO_FIELD = PseudoFieldOps(
    name="maxplus-symmetrized",
    add=mp_boxplus,
    mul=mp_otimes,
    neg=mp_neg,
    inv=mp_inv,
    zero=MZERO,
    one=MONE,
)


def maxplus_vector_space(dim: int) -> SymmetricSpaceOps:
    """Coordinatewise transported operations on MSym tuples of length dim."""

    def vadd(u, v):
        return tuple(mp_boxplus(a, b) for a, b in zip(u, v))

    def vneg(u):
        return tuple(mp_neg(a) for a in u)

    def act(lam, u):
        return tuple(mp_otimes(lam, a) for a in u)

    return SymmetricSpaceOps(
        name=f"maxplus-symmetrized^{dim}",
        field=MAXPLUS_PSEUDO_FIELD,
        vadd=vadd,
        vneg=vneg,
        act=act,
        vzero=(MZERO,) * dim,
    )
