"""Symmetrized max-plus arithmetic and its exponential bridge."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from boxlim import (
    MAXPLUS_PSEUDO_FIELD,
    MZERO,
    boxplus,
    check_pseudo_field_axioms,
    check_symmetric_space_axioms,
    maxplus_vector_space,
    mp_boxplus,
    mp_dist,
    mp_dist_std,
    mp_format,
    mp_nary,
    mp_otimes,
    mp_parse,
    msym,
    psi_exp,
    psi_ln,
    q,
)
from boxlim.errors import DimensionMismatch
from boxlim.maxplus import (
    MONE,
    mp_abs,
    mp_abs_le,
    mp_boxminus,
    mp_div,
    mp_hull_contains,
    mp_hull_point,
    mp_inv,
    mp_neg,
)

logmags = st.fractions(min_value=-6, max_value=6, max_denominator=4).map(q)
elements = st.one_of(
    st.just(MZERO),
    st.tuples(st.sampled_from((1, -1)), logmags).map(lambda p: msym(*p)),
)
nonzero_elements = elements.filter(lambda z: z.sign != 0)


def test_parse_format_roundtrip():
    for text in ("-inf", "0", "-2", "3/2", "3/2+ipi", "-5/4+ipi"):
        assert mp_format(mp_parse(text)) == text


def test_parse_normalizes_whitespace():
    assert mp_parse(" 3/2 + ipi ") == msym(-1, q(3, 2))


@given(elements)
def test_zero_is_neutral(z):
    assert mp_boxplus(z, MZERO) == z
    assert mp_otimes(z, MZERO) == MZERO


@given(elements)
def test_boxplus_idempotent_and_cancelling(z):
    assert mp_boxplus(z, z) == z
    assert mp_boxplus(z, mp_neg(z)) == MZERO


@given(elements, elements)
def test_boxplus_commutative(z, w):
    assert mp_boxplus(z, w) == mp_boxplus(w, z)


def test_boxplus_dominant_magnitude():
    assert mp_boxplus(msym(1, 2), msym(-1, 1)) == msym(1, 2)
    assert mp_boxplus(msym(-1, q(5, 2)), msym(1, 2)) == msym(-1, q(5, 2))


def test_nary_net_sign_per_level():
    zs = [msym(1, 3), msym(1, 3), msym(-1, 3), msym(1, 1)]
    assert mp_nary(zs) == msym(1, 3)
    cancel = [msym(1, 2), msym(-1, 2), msym(1, 1)]
    assert mp_nary(cancel) == msym(1, 1)


@given(nonzero_elements, nonzero_elements)
def test_otimes_adds_logmags(z, w):
    out = mp_otimes(z, w)
    assert out.logmag == z.logmag + w.logmag
    assert out.sign == z.sign * w.sign


@given(nonzero_elements)
def test_inverse_and_division(z):
    assert mp_otimes(z, mp_inv(z)) == MONE
    assert mp_div(z, z) == MONE


@given(elements, elements)
def test_boxminus_is_sum_with_negation(z, w):
    assert mp_boxminus(z, w) == mp_boxplus(z, mp_neg(w))


@given(elements, elements)
def test_abs_le_totality(z, w):
    assert mp_abs_le(z, w) or mp_abs_le(w, z)
    assert mp_abs_le(MZERO, z)


def test_dist_frozen_value():
    zs = [mp_parse("0"), mp_parse("1")]
    ws = [mp_parse("0"), MZERO]
    assert mp_dist(zs, ws) == msym(1, 1)
    assert mp_dist(zs, zs) == MZERO


def test_dist_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mp_dist([MZERO], [MZERO, MZERO])


@given(st.lists(elements, min_size=1, max_size=3),
       st.lists(elements, min_size=1, max_size=3),
       st.lists(elements, min_size=1, max_size=3))
def test_dist_strong_triangle(xs, ys, zs):
    n = min(len(xs), len(ys), len(zs))
    xs, ys, zs = xs[:n], ys[:n], zs[:n]
    dxz = mp_abs(mp_dist(xs, zs))
    dxy = mp_abs(mp_dist(xs, ys))
    dyz = mp_abs(mp_dist(ys, zs))
    dominant = dyz if mp_abs_le(dxy, dyz) else dxy
    assert mp_abs_le(dxz, dominant)


# ---------------------------------------------------------------------------
# the exponential bridge


def _exact(v: float):
    from fractions import Fraction

    return q(Fraction(v))


def test_psi_exp_values_and_psi_ln_inverse():
    assert psi_exp(MZERO) == 0.0
    assert psi_exp(msym(-1, q(3, 2))) == -math.exp(1.5)
    back = psi_ln(q(-3, 2))
    assert back.sign == -1
    assert abs(float(back.logmag) - math.log(1.5)) < 1e-12
    assert psi_ln(0) == MZERO


def test_bridge_transports_the_operations():
    rng = random.Random(1312)

    def draw():
        if rng.random() < 0.1:
            return MZERO
        return msym(rng.choice((1, -1)), q(rng.randint(-24, 24), 4))

    for _ in range(300):
        z, w = draw(), draw()
        lhs = psi_exp(mp_boxplus(z, w))
        rhs = float(boxplus(_exact(psi_exp(z)), _exact(psi_exp(w))))
        assert abs(lhs - rhs) <= 1e-9
        lhs_m = psi_exp(mp_otimes(z, w))
        rhs_m = psi_exp(z) * psi_exp(w)
        assert abs(lhs_m - rhs_m) <= 1e-9


def test_standard_valued_distance_matches_the_bridge():
    zs = [msym(1, 0), msym(1, 1)]
    ws = [msym(1, 0), MZERO]
    assert abs(mp_dist_std(zs, ws) - math.exp(1.0)) < 1e-12


# ---------------------------------------------------------------------------
# axiom suites and the convexity mirror


def test_maxplus_pseudo_field_axioms_hold():
    rng = random.Random(77)

    def draw():
        if rng.random() < 0.1:
            return MZERO
        return msym(rng.choice((1, -1)), q(rng.randint(-24, 24), 4))

    sample = [(draw(), draw(), draw()) for _ in range(300)]
    report = check_pseudo_field_axioms(sample, MAXPLUS_PSEUDO_FIELD)
    assert report.passed, report.failed_axiom


def test_maxplus_symmetric_space_axioms_hold():
    rng = random.Random(78)

    def draw():
        if rng.random() < 0.1:
            return MZERO
        return msym(rng.choice((1, -1)), q(rng.randint(-24, 24), 4))

    space = maxplus_vector_space(3)
    sample = [
        (draw(), draw(), tuple(draw() for _ in range(3)), tuple(draw() for _ in range(3)))
        for _ in range(300)
    ]
    report = check_symmetric_space_axioms(space, sample)
    assert report.passed, report.failed_axiom


def test_transported_hull_membership():
    x = (msym(1, 2), msym(-1, 0))
    y = (msym(1, 0), msym(-1, 1))
    assert mp_hull_point(x, y, (MONE, MZERO, MZERO, MZERO)) == x
    assert mp_hull_point(x, y, (MZERO, MZERO, MONE, MZERO)) == y
    assert mp_hull_contains(x, y, x)
    assert mp_hull_contains(x, y, y)
    z = mp_hull_point(x, y, (msym(1, -1), MZERO, MONE, MZERO))
    assert mp_hull_contains(x, y, z)
