import random
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat3f2.errors import BranchAmbiguity, InvalidExponent, NonConvergent, ParseError, PoleOnPath, RepeatedRoot, TrigPole
from fermat3f2.symbolic import (
    LogCombination,
    RadicalMonomial,
    base_log_integral,
    closed_form_integral,
    digamma_difference,
    digamma_integral,
    eval_const,
    eval_logcomb,
    parse_expr,
    parse_logcomb,
    power_pole_integral,
    render_expr,
    render_logcomb,
    trig_correction,
)
from fermat3f2.symbolic.constants import PI, add, mul, power, radical, sub, unity, cos_pi, sin_pi
from fermat3f2.symbolic.textform import expr_from_json, expr_to_json, logcomb_from_json, logcomb_to_json

mp.mp.dps = 40


def val(x, precision=30):
    return eval_const(x, precision).mid


def q2m(q):
    return mp.mpf(q.numerator) / q.denominator


def lval(L, precision=30):
    return eval_logcomb(L, precision).mid


# --- constants -----------------------------------------------------------------------


def test_unity_half_is_minus_one():
    b = eval_const(unity(Fraction(1, 2)))
    assert b.mid == -1 and b.radius == 0


def test_unity_products_add_exponents():
    # e(1/8) e(3/8) = e(1/2) = -1 and e(1/8)^2 = e(1/4) = i
    assert mul(unity(Fraction(1, 8)), unity(Fraction(3, 8))) == parse_expr("-1")
    assert mul(unity(Fraction(1, 8)), unity(Fraction(1, 8))) == unity(Fraction(1, 4))
    assert abs(val(unity(Fraction(1, 4))) - 1j) < 1e-15


def test_radical_value_and_fourth_power():
    x = radical(2, Fraction(3, 4))
    v = eval_const(x, 40).mpc(40)
    assert abs(v - mp.root(8, 4)) < mp.mpf(10) ** -35
    assert power(x, 4) == parse_expr("8")


def test_monomial_canonical_form():
    m = RadicalMonomial.make(3, Fraction(3, 4), {12: Fraction(3, 2)})
    # 12^(3/2) = 12 * 2 * 3^(1/2); e(3/4) = -e(1/4)
    assert m.coeff == -72 and m.unity == Fraction(1, 4)
    assert m.radicals == ((3, Fraction(1, 2)),)


monos = st.builds(
    RadicalMonomial.make,
    st.fractions(-5, 5, max_denominator=6).filter(lambda q: q != 0),
    st.fractions(0, 1, max_denominator=12),
    st.dictionaries(st.sampled_from([2, 3, 5]), st.fractions(-2, 2, max_denominator=4), max_size=2),
)


@settings(max_examples=100, deadline=None)
@given(monos, monos, monos)
def test_monomial_product_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == RadicalMonomial.make(1)


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.sampled_from([2, 3, 5, 7]), st.fractions(-3, 3, max_denominator=5), min_size=1, max_size=3),
       st.fractions(-3, 3, max_denominator=5), st.fractions(-3, 3, max_denominator=5))
def test_power_of_power_on_positive_monomials(rads, p, q):
    m = RadicalMonomial.make(1, 0, rads)
    assert (m**p) ** q == m ** (p * q)


def test_cos_sin_pi():
    for q in (Fraction(1, 3), Fraction(1, 4), Fraction(2, 5), Fraction(-7, 12)):
        assert abs(val(cos_pi(q)) - complex(mp.cos(mp.pi * q))) < 1e-14
        assert abs(val(sin_pi(q)) - complex(mp.sin(mp.pi * q))) < 1e-14


# --- log combinations ----------------------------------------------------------------


def test_log_two():
    L = LogCombination.log(2)
    assert abs(eval_logcomb(L, 40).mpc(40) - mp.log(2)) < mp.mpf(10) ** -35


def test_empty_combination_is_zero():
    assert lval(LogCombination()) == 0


def test_principal_log_of_minus_one():
    L = LogCombination.log(unity(Fraction(1, 2)), coeff=mul(-1, unity(Fraction(1, 4))))
    assert abs(lval(L) - complex(mp.pi)) < 1e-14


def test_log_of_one_drops():
    assert len(LogCombination.log(1)) == 0
    assert len(LogCombination.log(2) - LogCombination.log(2)) == 0


def test_branch_ambiguity_on_zero():
    with pytest.raises(BranchAmbiguity):
        eval_logcomb(LogCombination.log(sub(power(radical(2, Fraction(1, 2)), 2), 2)))


def test_linearity():
    A = parse_logcomb("1/3+2^(1/2)*log(3)-log(1+e(1/6))")
    B = parse_logcomb("pi-e(1/4)*log(2+i)")
    assert abs(lval(A + B) - (lval(A) + lval(B))) < 1e-14


# --- text and JSON forms ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "2^(1/2)",
        "-3/4*e(1/6)*5^(2/3)",
        "(1+2^(1/2))^(-1)",
        "pi*(1-e(1/3))",
        "(3-2^(1/3))^2",
    ],
)
def test_expr_round_trip(text):
    x = parse_expr(text)
    assert parse_expr(render_expr(x)) == x
    assert expr_from_json(expr_to_json(x)) == x
    assert abs(val(parse_expr(render_expr(x))) - val(x)) < 1e-14


def test_logcomb_round_trip():
    L = base_log_integral(1, 3, 2) + trig_correction("sin_3m_g2", Fraction(1, 6))
    assert parse_logcomb(render_logcomb(L)) == L
    assert logcomb_from_json(logcomb_to_json(L)) == L


@pytest.mark.parametrize("bad", ["log(2)^2", "1/log(2)", "log(2)*log(3)", "2+", "e(x)", "3 4"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_logcomb(bad)


# --- integrals --------------------------------------------------------------------------

SQRT2_LOG = 1.246450480280461  # oracle: sqrt(2)*log(1+sqrt(2)), and the quadrature below


def test_base_log_integral_examples():
    assert abs(lval(base_log_integral(1, 2, 2)) - SQRT2_LOG) < 1e-14
    assert abs(float(mp.sqrt(2) * mp.log(1 + mp.sqrt(2))) - SQRT2_LOG) < 1e-15
    assert abs(lval(base_log_integral(1, 2, -1)) + mp.pi / 2) < 1e-14
    assert abs(lval(base_log_integral(1, 1, 2)) - mp.log(2)) < 1e-14


def _quad_pole(n, m, c):
    c = complex(c)
    return complex(mp.quad(lambda u: m * u ** (n - 1) / (c - u**m), [0, 1]))


def test_base_log_integral_random_oracle():
    rng = random.Random(7)
    cs = [2, -2, 3, -3, mul(2, unity(Fraction(1, 3))), mul(3, unity(Fraction(1, 8))), radical(2, Fraction(1, 2))]
    for _ in range(20):
        m = rng.randint(1, 9)
        n = rng.randint(1, m)
        c = rng.choice(cs)
        L = base_log_integral(n, m, c)
        assert abs(lval(L) - _quad_pole(n, m, val(c))) < 1e-10


def test_base_log_integral_errors():
    with pytest.raises(PoleOnPath):
        base_log_integral(1, 2, Fraction(1, 2))
    with pytest.raises(InvalidExponent):
        base_log_integral(3, 2, 2)


def test_power_pole_integral_recursions():
    for a in (Fraction(5, 2), Fraction(7, 3)):
        want = mp.quad(lambda x: x ** q2m(a - 1) / (3 - x), [0, 1])
        assert abs(lval(power_pole_integral(a, 3)) - want) < 1e-12
    with pytest.raises(NonConvergent):
        power_pole_integral(Fraction(-1, 2), 3)
    with pytest.raises(NonConvergent):
        power_pole_integral(0, 3, regularize=True)


def test_digamma_examples():
    L = digamma_integral(1, 2, 4)
    assert abs(lval(L) - (-mp.log(2) - mp.pi / 2)) < 1e-14
    assert abs(lval(L) - (mp.digamma(0.25) - mp.digamma(0.5))) < 1e-14
    assert len(digamma_integral(3, 3, 5)) == 0


def test_digamma_difference_oracle():
    rng = random.Random(3)
    for _ in range(10):
        a = Fraction(rng.randint(-20, 40), rng.randint(1, 12))
        b = Fraction(rng.randint(1, 40), rng.randint(1, 12))
        if a <= 0 and a.denominator == 1:
            continue
        assert abs(lval(digamma_difference(a, b)) - (mp.digamma(a) - mp.digamma(b))) < 1e-10


def test_closed_form_integral_examples():
    assert lval(closed_form_integral(Fraction(1, 2), (1,), ())) == pytest.approx(2 / 3, abs=1e-15)
    neg = closed_form_integral(Fraction(-1, 2), (-1,), ((-1, 1),))
    assert abs(lval(neg) - mp.quad(lambda x: -x**-0.5 / (x + 1), [0, 1])) < 1e-14
    pos = closed_form_integral(Fraction(-1, 2), (-1,), ((2, 1),))
    assert abs(lval(pos) - SQRT2_LOG) < 1e-14


def test_closed_form_integral_polynomial_part():
    # x^(1/3) (x^3 + 2) / ((x + 2)(x - 3))
    L = closed_form_integral(Fraction(1, 3), (2, 0, 0, 1), ((-2, 1), (3, 1)))
    want = mp.quad(lambda x: mp.cbrt(x) * (x**3 + 2) / ((x + 2) * (x - 3)), [0, 1])
    assert abs(lval(L) - want) < 1e-13


def test_closed_form_integral_errors():
    with pytest.raises(RepeatedRoot):
        closed_form_integral(Fraction(1, 2), (1,), ((2, 2),))
    with pytest.raises(PoleOnPath):
        closed_form_integral(Fraction(1, 2), (1,), ((Fraction(1, 2), 1),))
    with pytest.raises(NonConvergent):
        closed_form_integral(Fraction(-3, 2), (1,), ())


def test_regularized_pure_power():
    L = closed_form_integral(Fraction(-3, 2), (1,), (), regularize=True)
    assert lval(L) == pytest.approx(-2, abs=1e-14)


def test_trig_correction_examples():
    assert abs(lval(trig_correction("cos_2m", Fraction(1, 4))) - 2 * mp.pi) < 1e-14
    assert abs(lval(trig_correction("sin_3m_g2", 0)) - 2 * mp.pi / mp.sqrt(3)) < 1e-14
    with pytest.raises(TrigPole):
        trig_correction("cos_2m", Fraction(1, 2))
    with pytest.raises(ValueError):
        trig_correction("tan_9m", 0)


@pytest.mark.parametrize(
    "kind, f",
    [
        ("cos_2m", lambda a: 4**a * mp.pi / mp.cos(mp.pi * a)),
        ("cos_2m_shift", lambda a: 2 ** (2 * a - 1) * mp.pi / mp.cos(mp.pi * a - mp.pi / 2)),
        ("sin_3m_g2", lambda a: 3 ** (3 * a) * mp.pi / mp.sin(mp.pi * a + mp.pi / 3)),
        ("sin_3m_g3", lambda a: 3 ** (3 * a) * mp.pi / mp.sin(mp.pi * a + 2 * mp.pi / 3)),
        ("sin_4m_g2", lambda a: 4 ** (3 * a - 1) * mp.pi / (mp.sqrt(2) * mp.sin(mp.pi * a + mp.pi / 4))),
        ("cos_4m_g3", lambda a: 4 ** (3 * a - 1) * mp.pi / (mp.sqrt(2) * mp.cos(mp.pi * a + mp.pi / 4))),
    ],
)
def test_trig_kinds_match_trig_formula(kind, f):
    for a in (Fraction(1, 7), Fraction(-2, 9), Fraction(3, 10)):
        assert abs(lval(trig_correction(kind, a)) - f(q2m(a))) < 1e-12


def test_digamma_antisymmetry():
    a, b = digamma_integral(1, 3, 4), digamma_integral(3, 1, 4)
    assert abs(lval(a) + lval(b)) < 1e-15
