"""Vector and matrix layer over the limit sum: inner products, determinants, axioms.

Vectors are tuples of exact rationals; the n-ary limit sum is applied
coordinatewise in one pass (never as a pairwise fold — the operation is not
associative).  The limit determinant consumes the full multiset of signed
permutation products at once for the same reason.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, EmptyList, TooLarge
from .scalars import (
    ONE,
    ZERO,
    ScalarLike,
    ScalarQ,
    _nary,
    boxplus,
    q,
)

__all__ = [
    "Vec",
    "Mat",
    "vec",
    "mat",
    "vec_boxplus",
    "nary_vec_boxplus",
    "scale",
    "inner_infty",
    "norm_infty",
    "det_infty",
    "PseudoFieldOps",
    "SymmetricSpaceOps",
    "AxiomReport",
    "REAL_PSEUDO_FIELD",
    "real_vector_space",
    "check_pseudo_field_axioms",
    "check_symmetric_space_axioms",
    "subspace_closure_check",
]

Vec = tuple  # tuple of ScalarQ
Mat = tuple  # tuple of row tuples


def vec(x: str | Iterable[ScalarLike]) -> Vec:
    """Build a vector from an iterable or a comma-separated literal like "3,-1/2,0.25"."""
    if isinstance(x, str):
        return tuple(q(part) for part in x.split(","))
    return tuple(q(v) for v in x)


def mat(rows: Iterable) -> Mat:
    """Build a matrix (tuple of row vectors); squareness is checked at use sites."""
    return tuple(vec(r) for r in rows)


def _same_dim(x: Vec, y: Vec):
    if len(x) != len(y):
        raise DimensionMismatch(f"dim {len(x)} vs {len(y)}")


def vec_boxplus(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vec:
    """Coordinatewise binary limit sum."""
    xv, yv = vec(x), vec(y)
    _same_dim(xv, yv)
    return tuple(boxplus(a, b) for a, b in zip(xv, yv))


def nary_vec_boxplus(vectors: Sequence[Sequence[ScalarLike]]) -> Vec:
    """Coordinatewise n-ary limit sum over a nonempty list of vectors (one pass)."""
    vs = [vec(v) for v in vectors]
    if not vs:
        raise EmptyList("n-ary vector sum of an empty list")
    n = len(vs[0])
    for v in vs[1:]:
        if len(v) != n:
            raise DimensionMismatch(f"dim {len(v)} vs {n}")
    return tuple(_nary([v[i] for v in vs]) for i in range(n))


def scale(alpha: ScalarLike, x: Sequence[ScalarLike]) -> Vec:
    """Ordinary scalar multiple α·x (the module action is the usual one)."""
    a = q(alpha)
    return tuple(a * v for v in vec(x))


def inner_infty(x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> ScalarQ:
    """Limit inner product: one-pass n-ary limit sum of the products x_i y_i."""
    xv, yv = vec(x), vec(y)
    _same_dim(xv, yv)
    return _nary([a * b for a, b in zip(xv, yv)])


def norm_infty(x: Sequence[ScalarLike]) -> ScalarQ:
    """Chebyshev norm max_i |x_i|."""
    xv = vec(x)
    if not xv:
        return ZERO
    return max(abs(v) for v in xv)


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


_SIGNED_PERMS: dict[int, list[tuple[int, tuple[int, ...]]]] = {}


def _signed_perms(n: int) -> list[tuple[int, tuple[int, ...]]]:
    if n not in _SIGNED_PERMS:
        _SIGNED_PERMS[n] = [
            (_perm_sign(perm), perm) for perm in itertools.permutations(range(n))
        ]
    return _SIGNED_PERMS[n]


def det_infty(A: Sequence[Sequence[ScalarLike]]) -> ScalarQ:
    """Limit determinant: one-shot Ϝ over all n! signed permutation products.

    The multiset is consumed at once; folding pairwise would change results
    because the limit sum is not associative.  Guarded at n ≤ 8 (40320 terms).
    """
    rows = mat(A)
    n = len(rows)
    if n == 0:
        raise DimensionMismatch("empty matrix")
    for r in rows:
        if len(r) != n:
            raise DimensionMismatch("matrix must be square")
    if n > 8:
        raise TooLarge(f"determinant limited to n <= 8, got {n}")
    products = []
    for sign, perm in _signed_perms(n):
        prod = rows[0][perm[0]]
        for i in range(1, n):
            prod = prod * rows[i][perm[i]]
        products.append(prod if sign > 0 else -prod)
    return _nary(products)


# ---------------------------------------------------------------------------
# axiom harnesses (sampling-based, not proofs)


@dataclass(frozen=True)
class PseudoFieldOps:
    """Operation bundle for a scalar carrier to be tested against the axioms."""

    name: str
    add: Callable
    mul: Callable
    neg: Callable
    inv: Callable  # multiplicative inverse of a nonzero element
    zero: object
    one: object
    eq: Callable = operator.eq


@dataclass(frozen=True)
class SymmetricSpaceOps:
    """Operation bundle for a vector carrier over a scalar PseudoFieldOps."""

    name: str
    field: PseudoFieldOps
    vadd: Callable
    vneg: Callable
    act: Callable  # scalar action (λ, x) -> λ·x
    vzero: object
    veq: Callable = operator.eq


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom suite; carries the first counterexample if any."""

    name: str
    passed: bool
    samples: int
    failed_axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.passed


REAL_PSEUDO_FIELD = PseudoFieldOps(
    name="reals-with-limit-sum",
    add=boxplus,
    mul=operator.mul,
    neg=operator.neg,
    inv=lambda a: ONE / a,
    zero=ZERO,
    one=ONE,
)


def real_vector_space(dim: int) -> SymmetricSpaceOps:
    """The coordinate space of exact rational vectors with coordinatewise limit sum."""
    return SymmetricSpaceOps(
        name=f"rational-vectors-dim-{dim}",
        field=REAL_PSEUDO_FIELD,
        vadd=vec_boxplus,
        vneg=lambda x: tuple(-v for v in x),
        act=scale,
        vzero=(ZERO,) * dim,
    )


def check_pseudo_field_axioms(
    sample: Sequence[tuple],
    ops: PseudoFieldOps = REAL_PSEUDO_FIELD,
) -> AxiomReport:
    """Test the scalar axioms on sampled triples (λ, μ, ν); stop at the first failure.

    Covered: idempotence, commutativity, neutral element, symmetric element,
    weak associativity for mutually non-symmetric triples, commutative and
    associative multiplication with unit and inverses, and distributivity of
    multiplication over the idempotent sum.
    """
    add, mul, neg, inv = ops.add, ops.mul, ops.neg, ops.inv
    zero, one, eq = ops.zero, ops.one, ops.eq

    def fail(axiom: str, witness: tuple) -> AxiomReport:
        return AxiomReport(ops.name, False, len(sample), axiom, witness)

    for triple in sample:
        lam, mu, nu = triple
        if not eq(add(lam, lam), lam):
            return fail("add-idempotent", (lam,))
        if not eq(add(lam, mu), add(mu, lam)):
            return fail("add-commutative", (lam, mu))
        if not eq(add(lam, zero), lam):
            return fail("add-neutral", (lam,))
        if not eq(add(lam, neg(lam)), zero):
            return fail("add-symmetric-element", (lam,))
        if (
            not eq(add(lam, mu), zero)
            and not eq(add(mu, nu), zero)
            and not eq(add(lam, nu), zero)
        ):
            if not eq(add(add(lam, mu), nu), add(lam, add(mu, nu))):
                return fail("add-weak-associative", triple)
        if not eq(mul(lam, mu), mul(mu, lam)):
            return fail("mul-commutative", (lam, mu))
        if not eq(mul(mul(lam, mu), nu), mul(lam, mul(mu, nu))):
            return fail("mul-associative", triple)
        if not eq(mul(lam, one), lam):
            return fail("mul-unit", (lam,))
        if not eq(lam, zero) and not eq(mul(lam, inv(lam)), one):
            return fail("mul-inverse", (lam,))
        if not eq(mul(lam, add(mu, nu)), add(mul(lam, mu), mul(lam, nu))):
            return fail("distributivity", triple)
    return AxiomReport(ops.name, True, len(sample))


def check_symmetric_space_axioms(
    space: SymmetricSpaceOps,
    sample: Sequence[tuple],
) -> AxiomReport:
    """Test the vector-space axioms on sampled (λ, μ, x, y); stop at first failure.

    Covered: idempotent/commutative sum with neutral and symmetric elements,
    the two distributivities, action associativity, unit action, −x = (−1)·x,
    and the derived identities λ·0 = 0 and 0·x = 0.
    """
    k = space.field
    vadd, vneg, act, vzero, veq = (
        space.vadd,
        space.vneg,
        space.act,
        space.vzero,
        space.veq,
    )

    def fail(axiom: str, witness: tuple) -> AxiomReport:
        return AxiomReport(space.name, False, len(sample), axiom, witness)

    for item in sample:
        lam, mu, x, y = item
        if not veq(vadd(x, x), x):
            return fail("vadd-idempotent", (x,))
        if not veq(vadd(x, y), vadd(y, x)):
            return fail("vadd-commutative", (x, y))
        if not veq(vadd(x, vzero), x):
            return fail("vadd-neutral", (x,))
        if not veq(vadd(x, vneg(x)), vzero):
            return fail("vadd-symmetric-element", (x,))
        if not veq(act(lam, vadd(x, y)), vadd(act(lam, x), act(lam, y))):
            return fail("act-distributes-over-vadd", (lam, x, y))
        if not veq(act(k.add(lam, mu), x), vadd(act(lam, x), act(mu, x))):
            return fail("scalar-add-distributes", (lam, mu, x))
        if not veq(act(k.mul(lam, mu), x), act(lam, act(mu, x))):
            return fail("act-associative", (lam, mu, x))
        if not veq(act(k.one, x), x):
            return fail("act-unit", (x,))
        if not veq(vneg(x), act(k.neg(k.one), x)):
            return fail("neg-is-minus-one-action", (x,))
        if not veq(act(lam, vzero), vzero):
            return fail("act-on-zero-vector", (lam,))
        if not veq(act(k.zero, x), vzero):
            return fail("zero-scalar-action", (x,))
    return AxiomReport(space.name, True, len(sample))


def subspace_closure_check(
    membership: Callable[[Vec], bool],
    generators: Sequence[Sequence[ScalarLike]],
    coeffs: Sequence[Sequence[ScalarLike]],
) -> bool:
    """True iff every tested combination ⊞_i t_i·x^(i) satisfies the membership predicate.

    Each row of ``coeffs`` gives one combination over the generators
    (evaluated coordinatewise in a single n-ary pass).
    """
    gens = [vec(g) for g in generators]
    if not gens:
        raise EmptyList("no generators")
    for row in coeffs:
        ts = [q(t) for t in row]
        if len(ts) != len(gens):
            raise DimensionMismatch(f"{len(ts)} coefficients for {len(gens)} generators")
        combo = nary_vec_boxplus([scale(t, g) for t, g in zip(ts, gens)])
        if not membership(combo):
            return False
    return True
