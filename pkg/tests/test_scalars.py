"""Scalar limit arithmetic: ⊞ laws, the n-ary sum Ϝ, smiles, and symmetric forms."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boxlim import (
    boxminus,
    boxplus,
    lower_form,
    nary_boxplus,
    q,
    smile_minus,
    smile_plus,
    upper_form,
)
from boxlim.errors import EmptyIndexSet, EmptyList
from boxlim.scalars import IndexedTuple, qfloor, residual_index_set, xi

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=8).map(q)
value_lists = st.lists(rationals, min_size=1, max_size=6)


# ---------------------------------------------------------------------------
# coercion


def test_q_parses_ints_strings_fractions():
    assert q(7) == 7
    assert q("3/2") == q(3, 2)
    assert q("-0.25") == q(-1, 4)
    assert q(Fraction(5, 3)) == q(5, 3)
    assert q(" 2/4 ") == q(1, 2)


def test_q_rejects_floats():
    with pytest.raises(TypeError):
        q(0.1)


def test_qfloor_is_exact():
    assert qfloor(q(-7, 2)) == -4
    assert qfloor(q(7, 2)) == 3
    assert qfloor(q(4)) == 4


# ---------------------------------------------------------------------------
# binary sum


def test_boxplus_frozen_values():
    assert boxplus(3, 1) == 3
    assert boxplus(1, 3) == 3
    assert boxplus(-3, 3) == 0
    assert boxplus(2, 2) == 2
    assert boxplus(0, 5) == 5
    assert boxplus(-4, 1) == -4
    assert boxplus(0, 0) == 0


@given(rationals)
def test_boxplus_idempotent(a):
    assert boxplus(a, a) == a


@given(rationals, rationals)
def test_boxplus_commutative(a, b):
    assert boxplus(a, b) == boxplus(b, a)


@given(rationals)
def test_boxplus_zero_neutral(a):
    assert boxplus(a, 0) == a


@given(rationals)
def test_boxplus_symmetric_element(a):
    assert boxplus(a, -a) == 0


@given(rationals, rationals)
def test_boxplus_result_is_an_argument_or_zero(a, b):
    r = boxplus(a, b)
    assert r in (a, b, q(0))
    assert abs(r) <= max(abs(a), abs(b))


@given(rationals, rationals, rationals)
def test_boxplus_weak_associativity(a, b, c):
    # associativity holds whenever no partial sum hits a symmetric tie
    if boxplus(a, b) != 0 and boxplus(b, c) != 0 and boxplus(a, c) != 0:
        left = boxplus(boxplus(a, b), c)
        right = boxplus(a, boxplus(b, c))
        assert left == right == nary_boxplus((a, b, c))


@given(rationals, rationals, rationals)
def test_boxplus_homogeneity(c, a, b):
    assert c * boxplus(a, b) == boxplus(c * a, c * b)


@given(rationals, rationals)
def test_boxminus_is_sum_with_negation(a, b):
    assert boxminus(a, b) == boxplus(a, -b)
    assert (boxminus(a, b) == 0) == (a == b)


# ---------------------------------------------------------------------------
# n-ary sum


def test_nary_frozen_value():
    assert nary_boxplus((-3, -2, 3, 3, 1, -3)) == -2


def test_nary_empty_raises():
    with pytest.raises(EmptyIndexSet):
        nary_boxplus(())


@given(value_lists)
def test_nary_result_is_a_value_or_zero(vals):
    r = nary_boxplus(vals)
    assert r == 0 or r in vals
    assert abs(r) <= max(abs(v) for v in vals)


@given(rationals, rationals)
def test_nary_agrees_with_boxplus_on_pairs(a, b):
    assert nary_boxplus((a, b)) == boxplus(a, b)


@given(value_lists.flatmap(lambda vs: st.permutations(vs).map(lambda p: (vs, p))))
def test_nary_is_order_independent(pair):
    vals, perm = pair
    assert nary_boxplus(vals) == nary_boxplus(perm)


@given(st.lists(rationals, min_size=2, max_size=6))
def test_nary_bracket_decomposition(vals):
    # peeling one element off against the rest lands in {0, Ϝ}, and the
    # brackets recombine to Ϝ of the full list
    f = nary_boxplus(vals)
    brackets = []
    for i, v in enumerate(vals):
        rest = vals[:i] + vals[i + 1 :]
        b = boxplus(v, nary_boxplus(rest))
        assert b == 0 or b == f
        brackets.append(b)
    assert nary_boxplus(brackets) == f


@given(rationals, value_lists)
def test_nary_homogeneity(c, vals):
    assert c * nary_boxplus(vals) == nary_boxplus([c * v for v in vals])


# ---------------------------------------------------------------------------
# indexed tuples and symmetry counts


def test_xi_counts_signed_occurrences():
    assert xi((3, -3, 3), 3) == 1
    assert xi((3, -3, 3), -3) == -1
    assert xi((3, -3, 3), 5) == 0
    assert xi((3, -3, 3), 3, index_set={1, 2}) == 0


def test_residual_index_set_drops_cancelled_groups():
    assert residual_index_set((2, -2, 1)) == frozenset({3})
    assert residual_index_set((2, -2, 2)) == frozenset({1, 2, 3})
    assert residual_index_set((1, -1)) == frozenset()


@given(st.lists(rationals, min_size=1, max_size=6))
def test_residual_restriction_preserves_nary(vals):
    res = residual_index_set(vals)
    if res:
        assert nary_boxplus(vals, res) == nary_boxplus(vals)
    else:
        assert nary_boxplus(vals) == 0


def test_indexed_tuple_validates_positions():
    t = IndexedTuple((5, -5, 3))
    assert t.index_set == frozenset({1, 2, 3})
    assert nary_boxplus(IndexedTuple((5, -5, 3), frozenset({1, 3}))) == 5
    with pytest.raises(IndexError):
        IndexedTuple((1, 2), frozenset({3}))


def test_nary_over_index_subset():
    assert nary_boxplus((5, -5, 3), {1, 2}) == 0
    assert nary_boxplus((5, -5, 3), {2, 3}) == -5


# ---------------------------------------------------------------------------
# smiles and the bridge back to ⊞


def test_smile_frozen_values():
    assert smile_minus((3, -3, 2)) == -3
    assert smile_plus((3, -3, 2)) == 3
    assert smile_minus((0, 0)) == 0
    assert smile_plus((0, 0)) == 0


def test_smile_empty_raises():
    with pytest.raises(EmptyList):
        smile_minus(())
    with pytest.raises(EmptyList):
        smile_plus(())


@given(value_lists)
def test_smiles_bound_the_nary_sum(vals):
    assert smile_minus(vals) <= nary_boxplus(vals) <= smile_plus(vals)


@given(value_lists.flatmap(lambda vs: st.permutations(vs).map(lambda p: (vs, p))))
def test_smiles_are_order_independent(pair):
    vals, perm = pair
    assert smile_minus(vals) == smile_minus(perm)
    assert smile_plus(vals) == smile_plus(perm)


@given(st.lists(rationals, min_size=2, max_size=6), st.lists(rationals, min_size=2, max_size=6))
def test_smile_associativity(left, right):
    # the smiles are associative, so splitting the list any way agrees
    both = left + right
    assert smile_minus(both) == smile_minus((smile_minus(left), smile_minus(right)))
    assert smile_plus(both) == smile_plus((smile_plus(left), smile_plus(right)))


@given(rationals, rationals)
def test_half_sum_bridge(a, b):
    # ⊞ is the midpoint of the two smiles
    assert boxplus(a, b) == (smile_minus((a, b)) + smile_plus((a, b))) / 2


@given(st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.lists(rationals, min_size=n, max_size=n),
        st.lists(rationals, min_size=n, max_size=n),
    )
))
def test_symmetric_form_sandwich(pair):
    coeffs, values = pair
    products = [a * v for a, v in zip(coeffs, values)]
    f = nary_boxplus(products)
    assert lower_form(coeffs, values) <= f <= upper_form(coeffs, values)
