"""Runnable verification suites covering the whole library.

Each suite draws a deterministic sample (fixed seed), checks a batch of exact
identities or oracle convergences, and returns a :class:`CheckResult` with a
one-line summary.  The default sizes are the full acceptance sizes; every
suite also accepts smaller sizes for quick interactive runs.  Suites are pure
functions of their arguments — two runs with the same arguments produce the
same result object.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Callable, Sequence

from fractions import Fraction

from mpmath import mp, mpf

from .cplane import (
    cconj,
    cmod_infty,
    cplx,
    ctimes,
    from_polar,
    on_unit_square,
    polar,
)
from .deform import (
    PParam,
    converge,
    exact_power_sum_is_zero,
    line_p_sample,
    p_cos,
    p_det,
    p_dist,
    p_inner,
    p_norm,
    p_sin,
    p_sum,
)
from .errors import DegenerateConfiguration, DegeneratePair
from .hull import HullCombination, co_point
from .linalg import (
    check_pseudo_field_axioms,
    check_symmetric_space_axioms,
    det_infty,
    inner_infty,
    norm_infty,
)
from .lines import (
    line2d_form,
    line_contains_2d,
    line_contains_nd,
    line_point,
    parallel_normal_form,
    parallel_ratio,
)
from .maxplus import (
    MAXPLUS_PSEUDO_FIELD,
    MZERO,
    MSym,
    maxplus_vector_space,
    mp_boxplus,
    mp_dist_std,
    mp_otimes,
    msym,
    psi_exp,
)
from .metric import Fixed, Free, ball_contains, ball_describe, dist_boxplus
from .sampling import GAP_RATIO, Sampler
from .scalars import (
    ONE,
    ZERO,
    boxminus,
    boxplus,
    lower_form,
    nary_boxplus,
    q,
    smile_minus,
    smile_plus,
    upper_form,
)
from .trig import (
    AngleParam,
    alpha,
    alpha_inv,
    cos_infty,
    inner3_limit,
    orthogonal_pairing,
    pcos,
    psin,
    pythagoras_check,
    sin_infty,
)

__all__ = [
    "CheckResult",
    "SUITES",
    "check_complex_product",
    "check_convergence",
    "check_exact_cancellation",
    "check_lines",
    "check_maxplus_bridge",
    "check_pythagoras",
    "check_scalar_laws",
    "check_square_trig",
    "check_ultrametric",
    "check_worked_values",
    "run_all",
    "run_suite",
]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification suite."""

    name: str
    passed: bool
    samples: int
    detail: str
    elapsed: float

    def __bool__(self) -> bool:
        return self.passed

    def line(self) -> str:
        """One-line human-readable report."""
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail} [{self.elapsed:.2f}s]"


def _finish(
    name: str,
    t0: float,
    samples: int,
    problems: list[str],
    ok_detail: str,
    budget: float | None = None,
) -> CheckResult:
    elapsed = perf_counter() - t0
    passed = not problems
    detail = ok_detail if passed else f"{len(problems)} failure(s); first: {problems[0]}"
    if budget is not None:
        if elapsed >= budget:
            passed = False
            detail += f"; exceeded the {budget:.0f}s budget"
        else:
            detail += f", within the {budget:.0f}s budget"
    return CheckResult(name, passed, samples, detail, elapsed)


# ---------------------------------------------------------------------------
# 1. worked values


def check_worked_values() -> CheckResult:
    """Frozen worked values: n-ary sum, three-point product, determinants,
    and the unbounded certified family on a 3-dimensional line."""
    t0 = perf_counter()
    problems: list[str] = []

    if nary_boxplus((-3, -2, 3, 3, 1, -3)) != -2:
        problems.append("n-ary limit sum of (-3,-2,3,3,1,-3) != -2")

    if inner3_limit((1, -2, -1), (2, 3, -2), (3, 2, -3)) != 9:
        problems.append("three-point product at the worked triple != 9")

    if det_infty(((3, 1), (1, -2))) != -6:
        problems.append("limit determinant of ((3,1),(1,-2)) != -6")
    if det_infty(((-2, -6), (4, 1))) != 24:
        problems.append("limit determinant of ((-2,-6),(4,1)) != 24")
    xy = tuple(boxminus(a, b) for a, b in zip((3, 1), (1, -2)))
    uv = tuple(boxminus(a, b) for a, b in zip((-2, 4), (-6, 1)))
    if uv != tuple(2 * c for c in xy):
        problems.append("second difference direction is not twice the first")

    x, y = (3, -2, 1), (1, -1, 1)
    count = 0
    for d in range(-10, 11):
        if d in (-1, 0, 1):
            continue
        dq = q(d)
        z = (3 * dq, -2 * dq, ONE)
        if line_point(x, y, ONE, dq, -dq, ZERO) != z:
            problems.append(f"coefficients (1,{d},{-d},0) do not rebuild z_{d}")
            continue
        member = line_contains_nd(x, y, z)
        if not member or member.certificate != (ONE, dq, -dq, ZERO):
            problems.append(f"certificate search missed (1,{d},{-d},0) for z_{d}")
        count += 1

    return _finish(
        "worked-values",
        t0,
        samples=5 + count,
        problems=problems,
        ok_detail=f"all frozen values exact, {count} certified family points",
        budget=1.0,
    )


# ---------------------------------------------------------------------------
# 2. scalar laws


def check_scalar_laws(samples: int = 100_000, seed: int = 1202) -> CheckResult:
    """Exact scalar laws on random rational triples.

    Idempotence, commutativity, symmetric cancellation, weak associativity
    (on mutually non-symmetric triples), homogeneity, the magnitude bound,
    the bracket decomposition, smile associativity, the half-sum bridge, and
    the lower/upper sandwich around the n-ary sum of products.
    """
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []
    half = q(1, 2)

    for i in range(samples):
        a, b, c = s.rational(), s.rational(), s.rational()
        ab = boxplus(a, b)
        if boxplus(a, a) != a:
            problems.append(f"idempotence at {a}")
        if ab != boxplus(b, a):
            problems.append(f"commutativity at ({a},{b})")
        if boxplus(a, -a) != 0:
            problems.append(f"symmetric cancellation at {a}")

        bc = boxplus(b, c)
        ac = boxplus(a, c)
        if ab != 0 and bc != 0 and ac != 0:
            left, right = boxplus(ab, c), boxplus(a, bc)
            nary = nary_boxplus((a, b, c))
            if not (left == right == nary):
                problems.append(f"weak associativity at ({a},{b},{c})")

        if c * ab != boxplus(c * a, c * b):
            problems.append(f"homogeneity at ({a},{b},{c})")

        f3 = nary_boxplus((a, b, c))
        if abs(f3) > max(abs(a), abs(b), abs(c)):
            problems.append(f"magnitude bound at ({a},{b},{c})")

        brackets = (boxplus(a, bc), boxplus(b, ac), boxplus(c, ab))
        if any(br != 0 and br != f3 for br in brackets):
            problems.append(f"bracket values at ({a},{b},{c})")
        elif nary_boxplus(brackets) != f3:
            problems.append(f"bracket recombination at ({a},{b},{c})")

        if smile_minus((smile_minus((a, b)), c)) != smile_minus((a, b, c)):
            problems.append(f"lower smile associativity at ({a},{b},{c})")
        if smile_plus((smile_plus((a, b)), c)) != smile_plus((a, b, c)):
            problems.append(f"upper smile associativity at ({a},{b},{c})")

        if ab != half * (smile_minus((a, b)) + smile_plus((a, b))):
            problems.append(f"half-sum bridge at ({a},{b})")

        coeffs, values = (a, b, c), (b, c, a)
        f = nary_boxplus(tuple(u * v for u, v in zip(coeffs, values)))
        if not lower_form(coeffs, values) <= f <= upper_form(coeffs, values):
            problems.append(f"sandwich at ({a},{b},{c})")

        if problems and len(problems) > 5:
            break

    return _finish(
        "scalar-laws",
        t0,
        samples=samples,
        problems=problems,
        ok_detail=f"{samples} random triples, ten laws each, zero failures",
        budget=10.0,
    )


# ---------------------------------------------------------------------------
# 3. convergence oracle


def check_convergence(
    per_op: int = 500,
    p_grid: Sequence[int] = (1, 2, 4, 8, 16, 32),
    tol: float = 1e-6,
    seed: int = 1203,
) -> CheckResult:
    """Finite-p convergence to the limit values on gap-filtered random inputs.

    Each operation (n-ary sum, inner product, norm, distance, 3×3
    determinant, cosine/sine) is sampled ``per_op`` times; near-ties are
    excluded by the documented magnitude-gap filter so the geometric error
    term dominates.  Every report must end ≤ tol with a non-increasing tail.
    """
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []
    worst = 0.0

    def draws():
        rng = s.rng
        for _ in range(per_op):
            vals = s.gap_tuple(rng.randint(3, 6))
            yield "sum", (lambda p, v=vals: p_sum(v, p)), nary_boxplus(vals)
        for _ in range(per_op):
            x, y = s.gap_inner_pair(rng.randint(2, 5))
            yield "inner", (lambda p, a=x, b=y: p_inner(a, b, p)), inner_infty(x, y)
        for _ in range(per_op):
            x = s.gap_norm_vector(rng.randint(2, 5))
            yield "norm", (lambda p, a=x: p_norm(a, p)), norm_infty(x)
        for _ in range(per_op):
            x, y = s.gap_dist_pair(rng.randint(2, 5))
            yield "dist", (lambda p, a=x, b=y: p_dist(a, b, p)), dist_boxplus(x, y)
        for _ in range(per_op):
            m = s.gap_det_matrix(3)
            yield "det", (lambda p, a=m: p_det(a, p)), det_infty(m)
        for _ in range(per_op):
            x, y = s.gap_trig_pair()
            yield "cos", (lambda p, a=x, b=y: p_cos(a, b, p)), cos_infty(x, y)
            yield "sin", (lambda p, a=x, b=y: p_sin(a, b, p)), sin_infty(x, y)

    total = 0
    for op, evaluator, limit in draws():
        total += 1
        report = converge(evaluator, limit, p_grid=p_grid, tol=tol)
        worst = max(worst, report.final_error)
        if not report.converged:
            problems.append(f"{op} sample with final error {report.final_error:.3g}")
            if len(problems) > 5:
                break

    return _finish(
        "convergence",
        t0,
        samples=total,
        problems=problems,
        ok_detail=(
            f"{total} oracle runs across six operations, "
            f"worst final error {worst:.3g} <= {tol:g}"
        ),
        budget=60.0,
    )


# ---------------------------------------------------------------------------
# 4. exact cancellation


def check_exact_cancellation(samples: int = 1000, seed: int = 1204) -> CheckResult:
    """Tuples with limit sum 0 have every odd power sum exactly 0 (p ≤ 5)."""
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    for _ in range(samples):
        values: list = []
        for _ in range(s.rng.randint(1, 4)):
            v = s.nonzero_rational()
            values += [v, -v]
        if s.rng.random() < 0.25:
            values.append(ZERO)
        s.rng.shuffle(values)
        if nary_boxplus(values) != 0:
            problems.append(f"limit sum of paired tuple {values} is nonzero")
            continue
        for p in range(1, 6):
            if not exact_power_sum_is_zero(values, p):
                problems.append(f"power sum p={p} nonzero on {values}")
                break

    return _finish(
        "exact-cancellation",
        t0,
        samples=samples,
        problems=problems,
        ok_detail=f"{samples} cancelling tuples, odd power sums 3..11 all exactly 0",
    )


# ---------------------------------------------------------------------------
# 5. ultrametric


def check_ultrametric(
    triples: int = 100_000, balls: int = 10_000, seed: int = 1205
) -> CheckResult:
    """Exact metric laws, ball-descriptor equivalence, and the four worked
    ball regimes around center (3, 2)."""
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    for i in range(triples):
        n = s.rng.randint(1, 4)
        x, y, z = s.vector(n), s.vector(n), s.vector(n)
        if i % 128 == 0:
            y = x
        dxy, dxz, dyz = dist_boxplus(x, y), dist_boxplus(x, z), dist_boxplus(y, z)
        if dxy != dist_boxplus(y, x):
            problems.append(f"symmetry at ({x},{y})")
        if dist_boxplus(x, x) != 0 or (dxy == 0) != (x == y):
            problems.append(f"identity of indiscernibles at ({x},{y})")
        if dxy > max(dxz, dyz) or dxz > max(dxy, dyz) or dyz > max(dxy, dxz):
            problems.append(f"strong triangle at ({x},{y},{z})")
        two = sorted((dxy, dxz, dyz))
        if two[2] != two[1]:
            problems.append(f"two largest distances differ at ({x},{y},{z})")
        if problems and len(problems) > 5:
            break

    for _ in range(balls):
        n = s.rng.randint(1, 3)
        center = s.vector(n)
        radius = abs(s.rational())
        if s.rng.random() < 0.5:
            z = tuple(
                ci if s.rng.random() < 0.5 else ci + s.rational(-2, 2)
                for ci in center
            )
        else:
            z = s.vector(n)
        described = ball_contains(ball_describe(center, radius), z)
        direct = dist_boxplus(center, z) <= radius
        if described != direct:
            problems.append(f"ball equivalence at ({center},{radius},{z})")
            break

    # the four regimes of the closed ball around (3, 2)
    regimes = (
        (q(1), (Fixed(q(3)), Fixed(q(2)))),      # 0 <= alpha < 2: the point itself
        (q(5, 2), (Fixed(q(3)), Free(q(5, 2)))),  # 2 <= alpha < 3: a vertical segment
        (q(3), (Free(q(3)), Free(q(3)))),         # alpha = 3: the square [-3,3]^2
        (q(4), (Free(q(4)), Free(q(4)))),         # alpha > 3: the square [-a,a]^2
    )
    for radius, coords in regimes:
        if ball_describe((3, 2), radius).coords != coords:
            problems.append(f"worked ball regime at radius {radius}")
    probes = (
        (q(1), (3, 2), True),        # the center itself
        (q(1), (3, 1), False),       # second coordinate is pinned below radius 2
        (q(5, 2), (3, -2), True),    # vertical segment through (3, *)
        (q(5, 2), (q(5, 2), 0), False),  # first coordinate stays pinned at 3
        (q(3), (-3, 3), True),       # corner of the square [-3, 3]^2
        (q(4), (-4, 4), True),       # corner of the square [-4, 4]^2
        (q(4), (q(9, 2), 0), False),  # outside the square
    )
    for radius, pt, expect in probes:
        if ball_contains(ball_describe((3, 2), radius), pt) != expect:
            problems.append(f"worked ball probe at radius {radius}, point {pt}")

    return _finish(
        "ultrametric",
        t0,
        samples=triples + balls,
        problems=problems,
        ok_detail=(
            f"{triples} exact metric triples, {balls} ball equivalences, "
            "four worked regimes"
        ),
    )


# ---------------------------------------------------------------------------
# 6. right angles


def check_pythagoras(
    samples: int = 1000,
    p_grid: Sequence[int] = (1, 2, 4, 8, 16),
    tol: float = 1e-6,
    seed: int = 1206,
) -> CheckResult:
    """Constructed limit right angles at the origin satisfy the exact
    hypotenuse identity and the deformed squared identity within tol.

    Half the triples pair coordinates into cancelling products; the other
    half are planar Euclidean right angles (y a scaled rotation of x).
    """
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    for i in range(samples):
        if i % 2 == 0:
            xs: list = []
            ys: list = []
            for _ in range(s.rng.randint(1, 3)):
                a, b, f = (
                    s.nonzero_rational(),
                    s.nonzero_rational(),
                    s.nonzero_rational(-4, 4),
                )
                xs += [f * a, a]
                ys += [b, -f * b]
            if s.rng.random() < 0.3:
                xs.append(ZERO)
                ys.append(s.rational())
            perm = list(range(len(xs)))
            s.rng.shuffle(perm)
            x = tuple(xs[j] for j in perm)
            y = tuple(ys[j] for j in perm)
        else:
            a, b = s.nonzero_rational(), s.rational()
            f = s.nonzero_rational(-4, 4)
            x = (a, b)
            y = (-f * b, f * a)
        z = (ZERO,) * len(x)

        part = orthogonal_pairing(x, y)
        products = [u * v for u, v in zip(x, y)]
        seen: list[int] = []
        for i1, i2 in part.pairs:
            seen += [i1, i2]
            if products[i1 - 1] + products[i2 - 1] != 0:
                problems.append(f"pairing mismatch at ({x},{y})")
        if part.leftover is not None:
            seen.append(part.leftover)
            if products[part.leftover - 1] != 0:
                problems.append(f"nonzero leftover at ({x},{y})")
        if sorted(seen) != list(range(1, len(x) + 1)):
            problems.append(f"pairing does not cover ({x},{y})")

        if not pythagoras_check(x, y, z, p_grid=p_grid, tol=tol):
            problems.append(f"squared identity fails at ({x},{y})")
        if problems and len(problems) > 5:
            break

    return _finish(
        "pythagoras",
        t0,
        samples=samples,
        problems=problems,
        ok_detail=(
            f"{samples} right-angled triples, exact hypotenuse and "
            f"deformed identity <= {tol:g} at p <= {max(p_grid)}"
        ),
    )


# ---------------------------------------------------------------------------
# 7. square trigonometry


def check_square_trig(
    theta_samples: int = 100_000,
    roundtrips: int = 10_000,
    pairs: int = 200,
    p_grid: Sequence[int] = (1, 2, 4, 8),
    tol: float = 1e-9,
    seed: int = 1207,
) -> CheckResult:
    """Square cosine/sine laws: boundary identity, period 8, angle
    round-trips, and the deformed unit-circle identity within tol."""
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    for i in range(theta_samples):
        theta = s.rational(-20, 20, den=8)
        c, sn = pcos(theta), psin(theta)
        if max(abs(c), abs(sn)) != 1:
            problems.append(f"boundary identity at theta={theta}")
        if i % 10 == 0:
            for k in (-2, -1, 1, 2):
                if pcos(theta + 8 * k) != c or psin(theta + 8 * k) != sn:
                    problems.append(f"period 8 at theta={theta}, k={k}")
                    break
        if problems and len(problems) > 5:
            break

    for i in range(roundtrips):
        if i % 2 == 0:
            theta = s.rational(-20, 20, den=8)
            if alpha(alpha_inv(theta)) != AngleParam(theta):
                problems.append(f"angle round-trip at theta={theta}")
        else:
            u = s.rational(-1, 1, den=8)
            side = s.rng.randrange(4)
            z = ((ONE, u), (u, ONE), (-ONE, u), (u, -ONE))[side]
            if alpha_inv(alpha(z)) != z:
                problems.append(f"boundary round-trip at z={z}")
        if problems and len(problems) > 5:
            break

    def nonzero_vec2():
        return s.reject(lambda: s.vector(2), lambda v: any(v))

    worst = 0.0
    for _ in range(pairs):
        x, y = nonzero_vec2(), nonzero_vec2()
        for p in p_grid:
            k = 2 * p + 1
            with mp.workprec(PParam(p).working_precision):
                c = p_cos(x, y, p)
                sn = p_sin(x, y, p)
                r = (c ** (2 * k) + sn ** (2 * k)) ** (mpf(1) / k)
                err = float(abs(r - 1))
            worst = max(worst, err)
            if err > tol:
                problems.append(f"deformed circle identity at ({x},{y}), p={p}")
                break

    return _finish(
        "square-trig",
        t0,
        samples=theta_samples + roundtrips + pairs,
        problems=problems,
        ok_detail=(
            f"{theta_samples} boundary identities, {roundtrips} round-trips, "
            f"deformed circle within {worst:.3g} <= {tol:g}"
        ),
    )


# ---------------------------------------------------------------------------
# 8. complex product


def check_complex_product(samples: int = 10_000, seed: int = 1208) -> CheckResult:
    """Exact laws of the limit complex product: multiplicative modulus,
    conjugate square, unit-square closure, and polar round-trips."""
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    for _ in range(samples):
        z = cplx(s.rational(), s.rational())
        w = cplx(s.rational(), s.rational())
        if cmod_infty(ctimes(z, w)) != cmod_infty(z) * cmod_infty(w):
            problems.append(f"modulus multiplicativity at ({z},{w})")
        if ctimes(z, cconj(z)) != cplx(cmod_infty(z) ** 2, 0):
            problems.append(f"conjugate square at {z}")
        if cmod_infty(z) != 0:
            m, theta = polar(z)
            if from_polar(m, theta) != z:
                problems.append(f"polar round-trip at {z}")
        u = from_polar(1, s.rational(-20, 20, den=8))
        v = from_polar(1, s.rational(-20, 20, den=8))
        uv = ctimes(u, v)
        if not on_unit_square(u) or not on_unit_square(uv):
            problems.append(f"unit-square closure at ({u},{v})")
        if problems and len(problems) > 5:
            break

    return _finish(
        "complex-product",
        t0,
        samples=samples,
        problems=problems,
        ok_detail=f"{samples} random pairs, all four complex laws exact",
    )


# ---------------------------------------------------------------------------
# 9. lines


def _nondegenerate_pair(s: Sampler) -> tuple:
    def ok(pair) -> bool:
        try:
            line2d_form(*pair)
        except (DegenerateConfiguration, DegeneratePair):
            return False
        return True

    return s.reject(lambda: (s.vector(2), s.vector(2)), ok)


def _hull_combination(s: Sampler) -> HullCombination:
    coeffs = [s.rational(0, 1, den=4) for _ in range(4)]
    coeffs[s.rng.randrange(4)] = ONE
    return HullCombination(*coeffs)


def _line_sample_ok(x, y, coeff, form) -> bool:
    """Gap filter for deformed line samples: each coordinate's two terms are
    magnitude-separated, and the limit point's form products have no
    opposite-sign tie at the top (the two tie-sensitive error sources)."""
    zlim = []
    for a, b in zip(x, y):
        u, v = abs(coeff * a), abs(b)
        if u and v and min(u, v) > GAP_RATIO * max(u, v):
            return False
        zlim.append(boxplus(coeff * a, b))
    products = [a * c for a, c in zip(form.coeffs, zlim)]
    top = max(abs(p) for p in products)
    if top:
        at_top = [p for p in products if abs(p) == top]
        if len(at_top) > 1 and len(set(at_top)) > 1:
            return False
    return True


def check_lines(
    pairs: int = 10_000,
    hull_samples: int = 10_000,
    nd_samples: int = 2_000,
    line_samples: int = 300,
    p: int = 32,
    slack: float = 1e-4,
    seed: int = 1209,
) -> CheckResult:
    """Line membership: generator self-membership, hull points on the line,
    deformed samples within slack of the form inequalities, and the worked
    parallel pair's shared normal form."""
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    for _ in range(pairs):
        x, y = _nondegenerate_pair(s)
        form = line2d_form(x, y)
        if not line_contains_2d(form, x) or not line_contains_2d(form, y):
            problems.append(f"generator self-membership at ({x},{y})")
            break

    for _ in range(hull_samples - nd_samples):
        x, y = _nondegenerate_pair(s)
        z = co_point(x, y, _hull_combination(s))
        if not line_contains_2d(line2d_form(x, y), z):
            problems.append(f"planar hull point off its line at ({x},{y},{z})")
            break

    for i in range(nd_samples):
        n = 3 + (i % 2)
        x = s.vector(n)
        y = s.reject(lambda m=n: s.vector(m), lambda v: v != x)
        z = co_point(x, y, _hull_combination(s))
        member = line_contains_nd(x, y, z)
        if not member or line_point(x, y, *member.certificate) != z:
            problems.append(f"hull point not certified at ({x},{y},{z})")
            break

    slack_q = q(Fraction(slack))
    checked = 0
    while checked < line_samples:
        x, y = _nondegenerate_pair(s)
        form = line2d_form(x, y)
        coeff = s.rational(-3, 3, den=4) / 4  # |coeff| <= 3/4
        if not _line_sample_ok(x, y, coeff, form):
            continue
        checked += 1
        zp = line_p_sample(x, y, p, coeff)
        zq = tuple(q(Fraction(float(v))) for v in zp)
        low, up = lower_form(form.coeffs, zq), upper_form(form.coeffs, zq)
        c = form.constant
        if not (low <= c + slack_q and c <= up + slack_q):
            problems.append(f"deformed sample outside slack at ({x},{y},{coeff})")
            if len(problems) > 5:
                break

    a, c, d = parallel_normal_form((3, 1), (1, -2), (-2, 4), (-6, 1))
    if (a, c, d) != ((q(-2), q(3)), q(-6), q(12)):
        problems.append("worked parallel pair normal form mismatch")
    if parallel_ratio((3, 1), (1, -2), (-2, 4), (-6, 1)) != q(1, 2):
        problems.append("worked parallel pair ratio mismatch")

    return _finish(
        "lines",
        t0,
        samples=pairs + hull_samples + line_samples,
        problems=problems,
        ok_detail=(
            f"{pairs} generator pairs, {hull_samples} hull points on their "
            f"lines, {line_samples} deformed samples within {slack:g}"
        ),
    )


# ---------------------------------------------------------------------------
# 10. max-plus bridge


def check_maxplus_bridge(
    samples: int = 10_000, tol: float = 1e-9, seed: int = 1210
) -> CheckResult:
    """Symmetrized max-plus: exact pseudo-field and symmetric-space axiom
    suites, and float transport agreement within tol."""
    t0 = perf_counter()
    s = Sampler(seed)
    problems: list[str] = []

    def mrand() -> MSym:
        if s.rng.random() < 0.1:
            return MZERO
        return msym(s.rng.choice((-1, 1)), s.rational(-6, 6))

    field_report = check_pseudo_field_axioms(
        [(mrand(), mrand(), mrand()) for _ in range(samples)],
        MAXPLUS_PSEUDO_FIELD,
    )
    if not field_report:
        problems.append(
            f"pseudo-field axiom {field_report.failed_axiom} "
            f"at {field_report.witness}"
        )

    space = maxplus_vector_space(3)
    vrand = lambda: tuple(mrand() for _ in range(3))  # noqa: E731
    space_report = check_symmetric_space_axioms(
        space, [(mrand(), mrand(), vrand(), vrand()) for _ in range(samples)]
    )
    if not space_report:
        problems.append(
            f"space axiom {space_report.failed_axiom} at {space_report.witness}"
        )

    worst = 0.0
    for _ in range(samples):
        z, w = mrand(), mrand()
        lhs = psi_exp(mp_boxplus(z, w))
        rhs = float(
            boxplus(q(Fraction(psi_exp(z))), q(Fraction(psi_exp(w))))
        )
        err = abs(lhs - rhs)
        lhs2 = psi_exp(mp_otimes(z, w))
        err = max(err, abs(lhs2 - psi_exp(z) * psi_exp(w)))
        zs, ws = (z, mrand()), (w, mrand())
        xz = tuple(q(Fraction(psi_exp(v))) for v in zs)
        xw = tuple(q(Fraction(psi_exp(v))) for v in ws)
        err = max(err, abs(mp_dist_std(zs, ws) - float(dist_boxplus(xz, xw))))
        worst = max(worst, err)
        if err > tol:
            problems.append(f"float transport off by {err:.3g} at ({z},{w})")
            break

    return _finish(
        "maxplus-bridge",
        t0,
        samples=3 * samples,
        problems=problems,
        ok_detail=(
            f"{samples} axiom samples exact per suite, float transport "
            f"within {worst:.3g} <= {tol:g}"
        ),
    )


# ---------------------------------------------------------------------------
# registry


SUITES: dict[str, Callable[..., CheckResult]] = {
    "worked-values": check_worked_values,
    "scalar-laws": check_scalar_laws,
    "convergence": check_convergence,
    "exact-cancellation": check_exact_cancellation,
    "ultrametric": check_ultrametric,
    "pythagoras": check_pythagoras,
    "square-trig": check_square_trig,
    "complex-product": check_complex_product,
    "lines": check_lines,
    "maxplus-bridge": check_maxplus_bridge,
}


def run_suite(name: str, **overrides) -> CheckResult:
    """Run one suite by registry name."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**overrides)


def run_all(names: Sequence[str] | None = None) -> list[CheckResult]:
    """Run the named suites (default: all ten) in registry order."""
    selected = list(SUITES) if names is None else list(names)
    return [run_suite(name) for name in selected]
