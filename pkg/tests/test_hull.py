"""Two-point hulls: combinations, membership, distance decomposition."""

import pytest
from hypothesis import given, settings, strategies as st

from boxlim import (
    HullCombination,
    chain_distance,
    co_contains,
    co_orthant,
    co_point,
    dist_boxplus,
    dist_decomposition_check,
    q,
    vec,
)
from boxlim.errors import (
    DimensionMismatch,
    InvalidCoefficients,
    InvalidCombination,
    NotAMember,
    OrthantViolation,
)

X, Y = vec("3,1"), vec("1,-2")

unit_coeffs = st.fractions(min_value=0, max_value=1, max_denominator=4).map(q)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(q)


def vectors(n):
    return st.lists(rationals, min_size=n, max_size=n).map(tuple)


@st.composite
def combinations(draw):
    cs = [draw(unit_coeffs) for _ in range(4)]
    cs[draw(st.integers(0, 3))] = q(1)  # max must be exactly 1
    return HullCombination(*cs)


def test_combination_validates_range_and_max():
    with pytest.raises(InvalidCombination):
        HullCombination(1, 2, 0, 0)
    with pytest.raises(InvalidCombination):
        HullCombination(q(1, 2), q(1, 2), 0, 0)
    with pytest.raises(InvalidCombination):
        HullCombination(1, q(-1, 4), 0, 0)
    assert HullCombination(1, 0, q(3, 4), 0).as_tuple() == (q(1), q(0), q(3, 4), q(0))


def test_co_point_hits_the_generators():
    assert co_point(X, Y, (1, 0, 0, 0)) == X
    assert co_point(X, Y, (0, 0, 1, 0)) == Y
    assert co_point(X, Y, (1, 1, 1, 1)) == (q(3), q(-2))  # coordinatewise x ⊞ y


def test_co_point_frozen_interior_sample():
    assert co_point(X, Y, (q(1, 2), 0, 1, 0)) == (q(3, 2), q(-2))


@settings(deadline=None)
@given(combinations())
def test_hull_points_are_members(c):
    z = co_point(X, Y, c)
    assert co_contains(X, Y, z)


@settings(deadline=None, max_examples=30)
@given(st.tuples(vectors(3), vectors(3)), combinations())
def test_hull_points_are_members_3d(pair, c):
    x, y = pair
    z = co_point(x, y, c)
    assert co_contains(x, y, z)


def test_membership_frozen_probes():
    assert co_contains(X, Y, X)
    assert co_contains(X, Y, Y)
    assert co_contains(X, Y, (3, 0))
    assert co_contains(X, Y, (q(3, 2), -2))
    assert not co_contains(X, Y, (4, 0))  # beyond every generator magnitude
    assert not co_contains(X, Y, (0, 0))  # same-sign products cannot cancel
    assert not co_contains(X, Y, (-3, 0))  # sign infeasible coordinate


def test_membership_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        co_contains(X, Y, (1, 2, 3))


def test_distance_decomposition_on_members():
    assert dist_boxplus(X, Y) == 3
    for z in (X, Y, vec("3/2,-2"), vec("3,0")):
        assert dist_decomposition_check(X, Y, z)


def test_distance_decomposition_rejects_non_members():
    with pytest.raises(NotAMember):
        dist_decomposition_check(X, Y, (4, 0))


@settings(deadline=None, max_examples=50)
@given(combinations())
def test_distance_decomposition_along_the_hull(c):
    z = co_point(X, Y, c)
    assert dist_decomposition_check(X, Y, z)


# ---------------------------------------------------------------------------
# same-orthant hulls and chains


def test_co_orthant_is_the_scaled_extremum():
    pts = [(1, 2), (3, 1), (2, 0)]
    out = co_orthant(pts, (q(1, 2), 1, q(1, 4)))
    assert out == (q(3), q(1))


def test_co_orthant_rejects_mixed_signs():
    with pytest.raises(OrthantViolation):
        co_orthant([(1, 2), (-1, 1)], (1, 1))


def test_co_orthant_validates_coefficients():
    with pytest.raises(InvalidCoefficients):
        co_orthant([(1, 2), (2, 1)], (q(1, 2), q(1, 2)))
    with pytest.raises(InvalidCoefficients):
        co_orthant([(1, 2), (2, 1)], (1,))


def test_chain_distance_equals_the_largest_step():
    chain = [(0, 0), (1, 0), (1, 3), (0, 3)]
    assert chain_distance(chain) == 3
    assert chain_distance(chain) == dist_boxplus(chain[0], chain[-1])
    assert chain_distance([(1, 1)]) == 0
