"""Square trigonometry: pcos/psin, angle parameters, limit angles, Pythagoras."""

import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpf

from boxlim import (
    AngleParam,
    PParam,
    alpha,
    alpha_inv,
    cos_infty,
    inner3_limit,
    is_f_right_angled,
    orthogonal_pairing,
    p_cos,
    p_sin,
    pcos,
    psin,
    pythagoras_check,
    q,
    sin_infty,
    vec,
)
from boxlim.errors import (
    DimensionMismatch,
    NotOnUnitSquare,
    NotOrthogonal,
    NotRightAngled,
    ZeroVector,
)
from boxlim.sampling import Sampler

angles = st.fractions(min_value=-20, max_value=20, max_denominator=8).map(q)


def test_pcos_psin_integer_table():
    expect = {
        0: (1, 0), 1: (1, 1), 2: (0, 1), 3: (-1, 1),
        4: (-1, 0), 5: (-1, -1), 6: (0, -1), 7: (1, -1),
    }
    for k, (c, s) in expect.items():
        assert pcos(k) == c, k
        assert psin(k) == s, k


def test_pcos_psin_fractional_values():
    assert pcos(q(1, 2)) == 1
    assert psin(q(1, 2)) == q(1, 2)
    assert pcos(q(3, 2)) == q(1, 2)
    assert pcos(q(13, 4)) == -1
    assert psin(q(13, 4)) == q(3, 4)


@given(angles)
def test_unit_square_identity(theta):
    assert max(abs(pcos(theta)), abs(psin(theta))) == 1


@given(angles, st.integers(-3, 3))
def test_period_eight(theta, k):
    assert pcos(theta + 8 * k) == pcos(theta)
    assert psin(theta + 8 * k) == psin(theta)


@given(angles)
def test_angle_roundtrip_from_theta(theta):
    assert alpha(alpha_inv(theta)) == AngleParam(theta)


@given(st.fractions(min_value=-1, max_value=1, max_denominator=8).map(q),
       st.integers(0, 3))
def test_angle_roundtrip_from_boundary_points(u, side):
    z = ((q(1), u), (u, q(1)), (q(-1), u), (u, q(-1)))[side]
    assert alpha_inv(alpha(z)) == z


def test_angle_param_reduces_mod_eight():
    assert AngleParam(q(17, 2)) == AngleParam(q(1, 2))
    assert AngleParam(-1).theta == 7


def test_alpha_rejects_off_boundary_points():
    with pytest.raises(NotOnUnitSquare):
        alpha((q(1, 2), q(1, 2)))
    with pytest.raises(DimensionMismatch):
        alpha((1, 0, 0))


# ---------------------------------------------------------------------------
# limit angles between vectors


def test_cos_sin_frozen_pair():
    assert cos_infty(vec("3,1"), vec("1,-2")) == q(1, 2)
    assert sin_infty(vec("3,1"), vec("1,-2")) == -1


def test_cos_sin_self_alignment():
    x = vec("3,1")
    assert cos_infty(x, x) == 1
    assert sin_infty(x, x) == 0


def test_cos_rejects_zero_vectors():
    with pytest.raises(ZeroVector):
        cos_infty((0, 0), (1, 1))


def test_deformed_circle_identity():
    s = Sampler(seed=41)
    for _ in range(5):
        x, y = s.gap_trig_pair()
        for p in (1, 2, 4, 8):
            k = PParam(p).exponent
            with mp.workprec(PParam(p).working_precision):
                c = p_cos(x, y, p)
                sn = p_sin(x, y, p)
                r = (c ** (2 * k) + sn ** (2 * k)) ** (mpf(1) / k)
            assert abs(r - 1) < 1e-9


# ---------------------------------------------------------------------------
# right angles


def test_inner3_frozen_values():
    assert inner3_limit(vec("3,-2,1"), vec("1,-1,1"), (0, 0, 0)) == 3
    assert inner3_limit((2, 0, 1), (1, 1, 0), (1, -1, 3)) == 9


def test_right_angle_detection():
    assert is_f_right_angled((2, 0), (0, -3), (0, 0))
    assert not is_f_right_angled((2, 0), (1, 1), (0, 0))


def test_orthogonal_pairing_structure():
    part = orthogonal_pairing((2, 1, 0), (1, -2, 5))
    assert part.pairs == ((1, 2),)
    assert part.leftover == 3


def test_orthogonal_pairing_rejects_nonzero_inner():
    with pytest.raises(NotOrthogonal):
        orthogonal_pairing((3, 1), (1, 1))


def test_pythagoras_on_a_right_triple():
    assert pythagoras_check((2, 0), (0, -3), (0, 0), p_grid=(1, 2, 4, 8), tol=1e-6)
    # tol may be an exact rational, like every other scalar input
    assert pythagoras_check((2, 0), (0, -3), (0, 0), p_grid=(1, 2), tol=q(1, 100))


def test_pythagoras_with_paired_cancellation():
    # legs built from an exact opposite-sign product pairing
    x = (q(3), q(2), q(0))
    y = (q(2), q(-3), q(5))
    assert inner3_limit(x, y, (0, 0, 0)) == 0
    assert pythagoras_check(x, y, (0, 0, 0), p_grid=(1, 2, 4), tol=1e-6)


def test_pythagoras_rejects_oblique_triples():
    with pytest.raises(NotRightAngled):
        pythagoras_check((2, 0), (1, 1), (0, 0))
