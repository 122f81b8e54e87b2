from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat3f2.errors import BadRadius, Divergent, IntegerAlpha, InvalidExponent, NonConvergent, PoleOnPath
from fermat3f2.identities.registry import ROOTS_V3_PLUS_1
from fermat3f2.numerics import (
    IntegrandSpec,
    QuadResult,
    f32_at_1,
    gamma1_double,
    poch_contour,
    pochhammer,
    quad_1d,
    tanh_sinh,
)
from fermat3f2.symbolic import eval_logcomb, trig_correction
from fermat3f2.symbolic.constants import mul, radical

SQRT2_LOG = mp.mpf("1.2464504802804610150")  # sqrt(2) log(1 + sqrt(2))


def test_quad_result_rejects_negative_error():
    with pytest.raises(ValueError):
        QuadResult(mp.mpf(1), mp.mpf(-1), 3)


@pytest.mark.parametrize("p, k, want", [(5, 0, 1), (1, 4, 24), (Fraction(1, 2), 2, Fraction(3, 4))])
def test_pochhammer(p, k, want):
    assert pochhammer(p, k) == want


# --- series ----------------------------------------------------------------------------


def test_basel():
    r = f32_at_1(1, 2, 2, tol=1e-12)
    assert abs(r.value - mp.pi**2 / 6) < 1e-12
    assert r.error >= 0


@settings(max_examples=10, deadline=None)
@given(st.fractions(Fraction(1, 10), 5, max_denominator=20))
def test_gauss_reduction(a):
    # p3 == p4 leaves 2F1(1, 1; 4; 1) = 3/2
    assert abs(f32_at_1(a, a, 4, tol=1e-10).value - mp.mpf(3) / 2) < 1e-10


def test_g1_2m_value_at_quarter():
    # F(1,1,1/2;5/4,7/4;1) = (3/4) * 2 sqrt(2) log(1+sqrt(2))
    r = f32_at_1(Fraction(1, 2), Fraction(5, 4), Fraction(7, 4), tol=1e-12)
    assert abs(r.value - Fraction(3, 4) * 2 * SQRT2_LOG) < 1e-11


def test_series_high_precision():
    r = f32_at_1(1, 2, 2, tol=1e-35, precision=50)
    with mp.workdps(50):
        assert abs(r.value - mp.pi**2 / 6) < mp.mpf(10) ** -34


def test_series_matches_direct_sum_when_fast():
    # s = 3: plain partial sums converge quickly enough for a direct oracle
    p3, p4, p5 = Fraction(1, 3), Fraction(5, 2), Fraction(17, 6)
    with mp.workdps(30):
        direct = mp.nsum(lambda k: mp.rf(mp.mpf(1) / 3, k) * mp.factorial(k) / (mp.rf(mp.mpf(5) / 2, k) * mp.rf(mp.mpf(17) / 6, k)), [0, mp.inf])
        assert abs(f32_at_1(p3, p4, p5, tol=1e-15).value - direct) < 1e-14
        assert abs(mp.hyp3f2(1, 1, p3, p4, p5, 1) - direct) < 1e-14


def test_series_errors():
    with pytest.raises(Divergent):
        f32_at_1(1, 1, 1)
    with pytest.raises(InvalidExponent):
        f32_at_1(1, -2, 5)


# --- one-dimensional quadrature -------------------------------------------------------------


def test_inverse_sqrt():
    r = quad_1d(IntegrandSpec(Fraction(-1, 2)), tol=1e-12)
    assert abs(r.value - 2) < 1e-12


def test_inverse_sqrt_over_two_minus_x():
    spec = IntegrandSpec(Fraction(-1, 2), (-1,), ((2, 1),))
    r = quad_1d(spec, tol=1e-12)
    assert abs(r.value - SQRT2_LOG) < 1e-12
    assert r.error < 1e-12


def test_half_line_matches_trig_value():
    a = Fraction(1, 6)
    spec = IntegrandSpec(3 * a, (1,), ROOTS_V3_PLUS_1, 1, (), "0inf", mul(3, radical(27, a)))
    got = quad_1d(spec, tol=1e-12).value
    want = eval_logcomb(trig_correction("sin_3m_g2", a)).mpc(30).real
    oracle = mp.quad(lambda v: 3 * (27 * v**3) ** (mp.mpf(1) / 6) / (v**3 + 1), [0, 1, mp.inf])
    assert abs(got - want) < 1e-10
    assert abs(want - oracle) < 1e-10


def test_digamma_shape():
    # (x^(1/4 - 1) - x^(1/2 - 1)) / (1 - x)
    spec = IntegrandSpec(-1, (1,), ((1, 1),), -1, ((1, Fraction(1, 4)), (-1, Fraction(1, 2))))
    r = quad_1d(spec, tol=1e-12)
    assert abs(r.value - (mp.digamma(0.5) - mp.digamma(0.25))) < 1e-11


def test_quad_errors():
    with pytest.raises(ValueError):
        quad_1d(IntegrandSpec(Fraction(-3, 2)))
    with pytest.raises(ValueError):
        quad_1d(IntegrandSpec(Fraction(1, 2), interval="0inf"))
    with pytest.raises(PoleOnPath):
        quad_1d(IntegrandSpec(0, (1,), ((Fraction(1, 2), 1),)))


def test_tanh_sinh_endpoint_singularity():
    r = tanh_sinh(lambda x, xc: mp.log(x) * mp.log(xc), tol=1e-20, precision=30)
    with mp.workdps(30):
        assert abs(r.value - (2 - mp.pi**2 / 6)) < 1e-20


# --- Pochhammer contour ---------------------------------------------------------------------


def test_contour_ordinary_case():
    r = poch_contour(Fraction(1, 2), IntegrandSpec(), tol=1e-12)
    assert abs(r.value - mp.mpf(2) / 3) < 1e-12


def test_contour_regularised_value():
    r = poch_contour(Fraction(-3, 2), IntegrandSpec(), tol=1e-12)
    assert abs(r.value + 2) < 1e-10


@pytest.mark.parametrize("alpha", [Fraction(-3, 2), Fraction(-5, 3), Fraction(-7, 4)])
def test_contour_radius_independence(alpha):
    spec = IntegrandSpec(0, (-1,), ((2, 1),))
    r1 = poch_contour(alpha, spec, eps=0.1, tol=1e-12)
    r2 = poch_contour(alpha, spec, eps=0.05, tol=1e-12)
    assert abs(r1.value - r2.value) < 1e-9


def test_contour_errors():
    with pytest.raises(IntegerAlpha):
        poch_contour(-2, IntegrandSpec())
    with pytest.raises(BadRadius):
        poch_contour(Fraction(-3, 2), IntegrandSpec(0, (-1,), ((2, 1),)), eps=1.5)


# --- double integrals -------------------------------------------------------------------------


def test_triangle_area():
    assert abs(gamma1_double(1, 1, 1).value - mp.mpf(1) / 2) < 1e-12


def test_half_power():
    assert abs(gamma1_double(1, 1, Fraction(1, 2)).value - mp.mpf(2) / 3) < 1e-12


def test_double_matches_series_reduction():
    a = Fraction(1, 2)
    series = f32_at_1(Fraction(3, 2), 2, 2, tol=1e-13).value / ((a + a) * (a + a))
    assert abs(gamma1_double(a, a, a).value - series) < 1e-10


def test_double_divergent():
    with pytest.raises(NonConvergent):
        gamma1_double(Fraction(1, 2), Fraction(-3, 4), 1)


@settings(max_examples=8, deadline=None)
@given(st.fractions(Fraction(1, 5), 3, max_denominator=12), st.fractions(Fraction(1, 2), 3, max_denominator=12),
       st.fractions(Fraction(1, 2), 3, max_denominator=12))
def test_series_matches_mpmath_hyp3f2(p3, p4, extra):
    # choose p5 so that s = p4 + p5 - p3 - 2 >= 1/2
    p5 = p3 + 2 - p4 + extra
    if p5 <= 0:
        p5 += 3
    got = f32_at_1(p3, p4, p5, tol=1e-12).value
    with mp.workdps(30):
        want = mp.hyp3f2(1, 1, mp.mpf(p3.numerator) / p3.denominator, mp.mpf(p4.numerator) / p4.denominator,
                         mp.mpf(p5.numerator) / p5.denominator, 1)
    assert abs(got - want) <= 1e-11 * abs(want)
