"""Seeded rational sampling with magnitude-gap filters.

The deformation oracle converges geometrically only when no two surviving
magnitudes are close: a second magnitude at ratio ρ of the top contributes
an absolute error of order T·ρ^(2p+1), with T the top magnitude (up to ~10³
for 3×3 determinant products).  The documented filter ratio is 3/4 — at the
default final grid point p = 32 that gives ρ^65 ≈ 7.5·10⁻⁹, keeping the
worst accepted sample inside the 10⁻⁶ acceptance tolerance for every
operation, whereas a loose ratio like 9/10 (0.9^65 ≈ 10⁻³) would not
converge within tolerance at all.

Filters reject near-ties; exact ties that cancel completely are kept, since
cancellation is exact at every p.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence

from .linalg import Mat, Vec, _signed_perms
from .scalars import ScalarQ, q

__all__ = [
    "GAP_RATIO",
    "gap_ok",
    "norm_gap_ok",
    "dist_gap_ok",
    "det_gap_ok",
    "trig_gap_ok",
    "Sampler",
]

GAP_RATIO = q(3, 4)


def gap_ok(values: Sequence[ScalarQ], ratio: ScalarQ = GAP_RATIO) -> bool:
    """Oracle-friendly n-ary sums: fully cancelled levels are exact at every
    p, so only surviving magnitudes matter — the top must survive with net
    count ±1 and dominate the next surviving magnitude by the gap ratio."""
    net: dict = {}
    for v in values:
        if v:
            a = abs(v)
            net[a] = net.get(a, 0) + (1 if v > 0 else -1)
    surviving = sorted((m for m, c in net.items() if c), reverse=True)
    if not surviving:
        return True
    top = surviving[0]
    if net[top] not in (1, -1):
        return False
    return len(surviving) == 1 or surviving[1] <= ratio * top


def norm_gap_ok(x: Sequence[ScalarQ], ratio: ScalarQ = GAP_RATIO) -> bool:
    """Unique top magnitude dominating the rest (zero vector is exact)."""
    mags = sorted((abs(v) for v in x), reverse=True)
    if not mags or mags[0] == 0 or len(mags) == 1:
        return True
    return mags[1] <= ratio * mags[0]


def dist_gap_ok(
    x: Sequence[ScalarQ], y: Sequence[ScalarQ], ratio: ScalarQ = GAP_RATIO
) -> bool:
    """Within each disagreeing coordinate the two magnitudes must be gapped
    (this rejects antipodal ties a = −b), and across coordinates the top
    disagreement magnitude must be unique and gapped."""
    tops = []
    for a, b in zip(x, y):
        if a == b:
            continue
        hi, lo = max(abs(a), abs(b)), min(abs(a), abs(b))
        if lo != 0 and lo > ratio * hi:
            return False
        tops.append(hi)
    if not tops:
        return True
    tops.sort(reverse=True)
    return len(tops) == 1 or tops[1] <= ratio * tops[0]


def det_gap_ok(m: Mat, ratio: ScalarQ = GAP_RATIO) -> bool:
    """Gap condition on the signed permutation products."""
    n = len(m)
    products = [
        sign * _prod(m[i][perm[i]] for i in range(n))
        for sign, perm in _signed_perms(n)
    ]
    return gap_ok(products, ratio)


def _prod(values) -> ScalarQ:
    out = q(1)
    for v in values:
        out *= v
    return out


def trig_gap_ok(x: Vec, y: Vec, ratio: ScalarQ = GAP_RATIO) -> bool:
    """Joint filter for limit cosine and (2D) sine: gapped inner products,
    gapped determinant products, gapped norms, nonzero vectors."""
    if all(v == 0 for v in x) or all(v == 0 for v in y):
        return False
    if not gap_ok([a * b for a, b in zip(x, y)], ratio):
        return False
    if len(x) == 2 and not gap_ok((x[0] * y[1], -x[1] * y[0]), ratio):
        return False
    return norm_gap_ok(x, ratio) and norm_gap_ok(y, ratio)


class Sampler:
    """Deterministic rational sampler (seeded), with rejection helpers."""

    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)

    def rational(self, lo: int = -10, hi: int = 10, den: int = 4) -> ScalarQ:
        d = self.rng.randint(1, den)
        return q(self.rng.randint(lo * d, hi * d), d)

    def nonzero_rational(self, lo: int = -10, hi: int = 10, den: int = 4) -> ScalarQ:
        while True:
            v = self.rational(lo, hi, den)
            if v:
                return v

    def vector(self, n: int, lo: int = -10, hi: int = 10, den: int = 4) -> Vec:
        return tuple(self.rational(lo, hi, den) for _ in range(n))

    def matrix(self, n: int, lo: int = -10, hi: int = 10, den: int = 2) -> Mat:
        return tuple(self.vector(n, lo, hi, den) for _ in range(n))

    def reject(self, make: Callable, accept: Callable, tries: int = 500):
        """Draw until accept(sample) holds; deterministic for a fixed seed."""
        for _ in range(tries):
            s = make()
            if accept(s):
                return s
        raise RuntimeError(f"rejection sampling exhausted {tries} tries")

    # gap-filtered generators for the convergence suite

    def gap_tuple(self, n: int, ratio: ScalarQ = GAP_RATIO) -> tuple:
        return self.reject(lambda: self.vector(n), lambda v: gap_ok(v, ratio))

    def gap_norm_vector(self, n: int, ratio: ScalarQ = GAP_RATIO) -> Vec:
        return self.reject(lambda: self.vector(n), lambda v: norm_gap_ok(v, ratio))

    def gap_inner_pair(self, n: int, ratio: ScalarQ = GAP_RATIO) -> tuple[Vec, Vec]:
        return self.reject(
            lambda: (self.vector(n), self.vector(n)),
            lambda p: gap_ok([a * b for a, b in zip(*p)], ratio),
        )

    def gap_dist_pair(self, n: int, ratio: ScalarQ = GAP_RATIO) -> tuple[Vec, Vec]:
        return self.reject(
            lambda: (self.vector(n), self.vector(n)),
            lambda p: dist_gap_ok(p[0], p[1], ratio),
        )

    def gap_det_matrix(self, n: int, ratio: ScalarQ = GAP_RATIO) -> Mat:
        # smaller entries keep the top product magnitude (hence the absolute
        # oracle error) well inside tolerance
        return self.reject(
            lambda: self.matrix(n, lo=-6, hi=6), lambda m: det_gap_ok(m, ratio)
        )

    def gap_trig_pair(self, ratio: ScalarQ = GAP_RATIO) -> tuple[Vec, Vec]:
        return self.reject(
            lambda: (self.vector(2), self.vector(2)),
            lambda p: trig_gap_ok(p[0], p[1], ratio),
        )
