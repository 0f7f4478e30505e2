"""Scalar limit arithmetic: the idempotent sum ⊞, its n-ary closure Ϝ, and smiles.

The binary sum keeps whichever argument has strictly larger absolute value;
exact magnitude ties resolve by the midpoint rule, which over an ordered
field means ``a ⊞ a = a`` and ``a ⊞ (−a) = 0``.  The operation is idempotent
and commutative but only weakly associative, so the n-ary version Ϝ is *not*
a fold: it is computed in one pass from signed occurrence counts (cancel
every exactly sign-symmetric group, then keep the dominant survivor).

All scalars are exact rationals.  Magnitude ties decide results, so floating
point would silently corrupt them; floats are rejected at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, EmptyIndexSet, EmptyList

try:  # gmpy2's rationals are exact and considerably faster
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - fallback carrier
    _Q = Fraction

__all__ = [
    "ScalarQ",
    "ScalarLike",
    "ZERO",
    "ONE",
    "q",
    "qfloor",
    "IndexedTuple",
    "boxplus",
    "boxminus",
    "xi",
    "residual_index_set",
    "nary_boxplus",
    "smile_minus",
    "smile_plus",
    "lower_form",
    "upper_form",
]

ScalarQ = _Q
ScalarLike = Union[ScalarQ, int, str, Fraction]

ZERO = _Q(0)
ONE = _Q(1)


def q(value: ScalarLike, den: int | None = None) -> ScalarQ:
    """Coerce ``value`` to an exact rational.

    Accepts rationals, ints, ``fractions.Fraction``, and strings: ``"7"``,
    ``"3/4"``, ``"-0.25"`` (finite decimals convert exactly).  ``q(p, q)``
    builds a quotient directly.  Floats are rejected — ties must be exact.
    """
    if den is not None:
        return _Q(value, den)
    if isinstance(value, _Q):
        return value
    if isinstance(value, int):
        return _Q(value)
    if isinstance(value, str):
        return _Q(Fraction(value.strip()))
    if isinstance(value, Fraction):
        return _Q(value)
    raise TypeError(f"no exact rational from {type(value).__name__}: {value!r}")


def qfloor(value: ScalarQ) -> int:
    """Exact floor of a rational, as a plain int."""
    return value.numerator // value.denominator


# ---------------------------------------------------------------------------
# binary operation


def boxplus(a: ScalarLike, b: ScalarLike) -> ScalarQ:
    """Binary limit sum: the argument of strictly larger magnitude survives.

    Exact ties: ``a ⊞ a = a`` and ``a ⊞ (−a) = 0`` (the midpoint rule for
    ``|a| = |b|`` has no other cases over an ordered field).
    """
    a = q(a)
    b = q(b)
    if a == b:
        return a
    ma = abs(a)
    mb = abs(b)
    if ma > mb:
        return a
    if mb > ma:
        return b
    return ZERO  # |a| = |b| with a != b forces b = -a


def boxminus(a: ScalarLike, b: ScalarLike) -> ScalarQ:
    """Limit difference ``a ⊟ b = a ⊞ (−b)``; zero iff ``a = b``."""
    return boxplus(q(a), -q(b))


# ---------------------------------------------------------------------------
# n-ary extension via symmetry counts


@dataclass(frozen=True)
class IndexedTuple:
    """Values together with the (1-based) index subset Ϝ ranges over.

    ``index_set=None`` means all positions.  An empty index set is
    representable but not evaluable (``nary_boxplus`` raises).
    """

    values: tuple
    index_set: frozenset | None = None

    def __post_init__(self):
        vals = tuple(q(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.index_set is None:
            idx = frozenset(range(1, len(vals) + 1))
        else:
            idx = frozenset(int(j) for j in self.index_set)
        for j in idx:
            if not 1 <= j <= len(vals):
                raise IndexError(f"position {j} outside 1..{len(vals)}")
        object.__setattr__(self, "index_set", idx)


def _coerce_indexed(
    x: IndexedTuple | Sequence[ScalarLike],
    index_set: Iterable[int] | None,
) -> tuple[tuple, tuple[int, ...]]:
    """Normalize input to (values, sorted 1-based positions)."""
    if isinstance(x, IndexedTuple):
        if index_set is not None:
            raise TypeError("index_set is already part of the IndexedTuple")
        return x.values, tuple(sorted(x.index_set))
    vals = tuple(q(v) for v in x)
    if index_set is None:
        return vals, tuple(range(1, len(vals) + 1))
    pos = tuple(sorted({int(j) for j in index_set}))
    for j in pos:
        if not 1 <= j <= len(vals):
            raise IndexError(f"position {j} outside 1..{len(vals)}")
    return vals, pos


def xi(
    x: IndexedTuple | Sequence[ScalarLike],
    alpha: ScalarLike,
    index_set: Iterable[int] | None = None,
) -> int:
    """Occurrence-symmetry count ξ: #{i: x_i = α} − #{i: x_i = −α} over the index set."""
    vals, pos = _coerce_indexed(x, index_set)
    a = q(alpha)
    na = -a
    plus = sum(1 for j in pos if vals[j - 1] == a)
    minus = sum(1 for j in pos if vals[j - 1] == na)
    return plus - minus


def _net_by_magnitude(vals: tuple, pos: tuple[int, ...]) -> dict:
    """Signed occurrence balance per nonzero magnitude over the given positions."""
    net: dict = {}
    for j in pos:
        v = vals[j - 1]
        if v:
            if v > 0:
                net[v] = net.get(v, 0) + 1
            else:
                net[-v] = net.get(-v, 0) - 1
    return net


def residual_index_set(
    x: IndexedTuple | Sequence[ScalarLike],
    index_set: Iterable[int] | None = None,
) -> frozenset:
    """Positions whose value group does not cancel: {j: ξ(x_j) ≠ 0} (1-based)."""
    vals, pos = _coerce_indexed(x, index_set)
    net = _net_by_magnitude(vals, pos)
    out = []
    for j in pos:
        v = vals[j - 1]
        if v and net[abs(v)] != 0:
            out.append(j)
    return frozenset(out)


def _nary(vals) -> ScalarQ:
    """One-pass Ϝ over already-coerced rationals (hot path, no bookkeeping)."""
    net: dict = {}
    for v in vals:
        if v:
            if v > 0:
                net[v] = net.get(v, 0) + 1
            else:
                net[-v] = net.get(-v, 0) - 1
    top = None
    top_net = 0
    for m, c in net.items():
        if c and (top is None or m > top):
            top = m
            top_net = c
    if top is None:
        return ZERO
    return top if top_net > 0 else -top


def nary_boxplus(
    x: IndexedTuple | Sequence[ScalarLike],
    index_set: Iterable[int] | None = None,
) -> ScalarQ:
    """n-ary limit sum Ϝ: cancel sign-symmetric groups, keep the dominant survivor.

    Equals ``boxplus`` on pairs, but is *not* a fold of it — the whole
    multiset is consumed at once.  Raises :class:`EmptyIndexSet` when there
    is nothing to evaluate.
    """
    vals, pos = _coerce_indexed(x, index_set)
    if not pos:
        raise EmptyIndexSet("n-ary limit sum over an empty index set")
    return _nary(vals[j - 1] for j in pos)


# ---------------------------------------------------------------------------
# smile operations (associative regularizations) and symmetric forms


def smile_minus(values: Sequence[ScalarLike]) -> ScalarQ:
    """Lower smile ⌣⁻: the value of maximal magnitude, minimum on ties.

    Associative, so the n-ary value is order-independent.  The all-zero
    list returns 0 (the unique consistent extension).
    """
    vals = [q(v) for v in values]
    if not vals:
        raise EmptyList("smile of an empty list")
    m = max(abs(v) for v in vals)
    if not m:
        return ZERO
    return min(v for v in vals if abs(v) == m)


def smile_plus(values: Sequence[ScalarLike]) -> ScalarQ:
    """Upper smile ⌣⁺: the value of maximal magnitude, maximum on ties."""
    vals = [q(v) for v in values]
    if not vals:
        raise EmptyList("smile of an empty list")
    m = max(abs(v) for v in vals)
    if not m:
        return ZERO
    return max(v for v in vals if abs(v) == m)


def _products(a: Sequence[ScalarLike], x: Sequence[ScalarLike]) -> list:
    av = [q(v) for v in a]
    xv = [q(v) for v in x]
    if len(av) != len(xv):
        raise DimensionMismatch(f"coefficients dim {len(av)} vs vector dim {len(xv)}")
    return [u * v for u, v in zip(av, xv)]


def lower_form(a: Sequence[ScalarLike], x: Sequence[ScalarLike]) -> ScalarQ:
    """Lower symmetric form: ⌣⁻ over the products a_i·x_i."""
    return smile_minus(_products(a, x))


def upper_form(a: Sequence[ScalarLike], x: Sequence[ScalarLike]) -> ScalarQ:
    """Upper symmetric form: ⌣⁺ over the products a_i·x_i."""
    return smile_plus(_products(a, x))
