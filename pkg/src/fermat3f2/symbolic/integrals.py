"""Closed forms of ``int_0^1 x^a R(x) dx`` for rational ``a`` and rational
functions ``R`` with pre-factored denominators, as log combinations.

The basic building block is

    int_0^1 x^(n/m) / (c - x) dx/x
        = -g^(n-m) * sum_{i<m} e(-n i/m) * log(1 - e(i/m)/g),   g^m = c,

obtained from x = xi^m and partial fractions of m xi^(n-1) / (c - xi^m).
Exponents outside (0, 1] are shifted into it with
``J(a) = -1/(a-1) + c J(a-1)``; for a <= 0 the same recursion run backwards
gives the analytic continuation in ``a`` (the Pochhammer-regularised value).
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..errors import InvalidExponent, NonConvergent, PoleOnPath, RepeatedRoot, TrigPole
from .constants import (
    ONE,
    PI,
    ZERO,
    AlgExpr,
    Mono,
    RadicalMonomial,
    add,
    as_expr,
    cos_pi,
    div,
    mul,
    power,
    radical,
    sin_pi,
    sub,
    unity,
)
from .logcomb import LogCombination

__all__ = [
    "base_log_integral",
    "power_pole_integral",
    "digamma_integral",
    "digamma_difference",
    "closed_form_integral",
    "trig_correction",
    "TRIG_KINDS",
    "on_unit_segment",
]


def on_unit_segment(c: RadicalMonomial) -> bool:
    """Exact test for c in [0, 1] (c real, 0 <= c <= 1)."""
    if c.is_zero:
        return True
    if c.unity != 0 or c.coeff < 0:
        return False
    # c = coeff * prod p^e with e in (0,1); compare c^D with 1 exactly
    D = math.lcm(*(e.denominator for _, e in c.radicals)) if c.radicals else 1
    val = c.coeff**D
    for p, e in c.radicals:
        val *= Fraction(p) ** int(e * D)
    return val <= 1


def base_log_integral(n: int, m: int, c) -> LogCombination:
    """int_0^1 x^(n/m)/(c - x) dx/x for 0 < n <= m and c off [0, 1].

    Any m-th root g of c gives the same sum; g = c**(1/m) as defined by
    :meth:`RadicalMonomial.__pow__` is used.
    """
    c = c.m if isinstance(c, Mono) else RadicalMonomial.make(c) if not isinstance(c, RadicalMonomial) else c
    if m <= 0 or not 0 < n <= m:
        raise InvalidExponent(f"need 0 < n <= m, got n={n}, m={m}")
    if on_unit_segment(c):
        raise PoleOnPath(f"c = {Mono(c)} lies on [0, 1]")
    g = c ** Fraction(1, m)
    lead = -(g ** (n - m))
    terms = []
    for i in range(m):
        coeff = Mono(lead * RadicalMonomial.make(1, Fraction(-n * i, m)))
        arg = sub(ONE, Mono(RadicalMonomial.make(1, Fraction(i, m)) / g))
        terms.append((coeff, arg))
    return LogCombination(ZERO, tuple(terms))


def power_pole_integral(a, c, regularize: bool = False) -> LogCombination:
    """J(a, c) = int_0^1 x^a / (c - x) dx/x for any rational a not in Z_{<=0}.

    For a <= 0 the integral diverges at 0 and the analytically continued
    value is returned only when ``regularize`` is set.
    """
    a = Fraction(a)
    c = _as_mono(c)
    if a <= 0:
        if a.denominator == 1:
            raise NonConvergent(f"integer exponent {a} <= 0 has no regularised value")
        if not regularize:
            raise NonConvergent(f"exponent {a} <= 0 diverges at 0")
        # J(a) = (J(a+1) + 1/a) / c
        inner = power_pole_integral(a + 1, c, regularize) + LogCombination.const(as_expr(1 / a))
        return inner.scale(Mono(c.inverse()))
    if a > 1:
        # J(a) = -1/(a-1) + c J(a-1)
        return LogCombination.const(as_expr(-1 / (a - 1))) + power_pole_integral(a - 1, c).scale(Mono(c))
    return base_log_integral(a.numerator, a.denominator, c)


def digamma_integral(n: int, n2: int, m: int) -> LogCombination:
    """int_0^1 (x^(n2/m) - x^(n/m))/(1 - x) dx/x = psi(n/m) - psi(n2/m).

    Valid for 0 < n, n2 <= m (the right end m is the psi(1) case).
    """
    if m <= 0 or not (0 < n <= m and 0 < n2 <= m):
        raise InvalidExponent(f"need 0 < n, n' <= m, got n={n}, n'={n2}, m={m}")
    terms = []
    for i in range(1, m):
        coeff = sub(unity(Fraction(-n2 * i, m)), unity(Fraction(-n * i, m)))
        coeff = mul(-1, coeff)
        arg = sub(ONE, unity(Fraction(i, m)))
        terms.append((coeff, arg))
    return LogCombination(ZERO, tuple(terms))


def _shift_to_unit(x: Fraction) -> tuple[Fraction, AlgExpr]:
    """x -> (x0, r) with x0 in (0, 1] and psi(x) = psi(x0) + r."""
    if x <= 0 and x.denominator == 1:
        raise InvalidExponent(f"psi has a pole at {x}")
    k = math.ceil(x) - 1
    x0 = x - k
    r = Fraction(0)
    if k > 0:
        r = sum((1 / (x0 + j) for j in range(k)), Fraction(0))
    elif k < 0:
        r = -sum((1 / (x0 - j) for j in range(1, -k + 1)), Fraction(0))
    return x0, as_expr(r)


def digamma_difference(a, b) -> LogCombination:
    """psi(a) - psi(b) for rationals a, b off the non-positive integers."""
    a, b = Fraction(a), Fraction(b)
    a0, ra = _shift_to_unit(a)
    b0, rb = _shift_to_unit(b)
    m = math.lcm(a0.denominator, b0.denominator)
    core = digamma_integral(int(a0 * m), int(b0 * m), m)
    return core + LogCombination.const(sub(ra, rb))


def _as_mono(r) -> RadicalMonomial:
    if isinstance(r, RadicalMonomial):
        return r
    if isinstance(r, Mono):
        return r.m
    return RadicalMonomial.make(r)


def _poly_eval(coeffs, x: RadicalMonomial) -> AlgExpr:
    return add(*(mul(c, Mono(x**k)) for k, c in enumerate(coeffs)))


def _poly_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = add(out[i + j], mul(a, b))
    return out


def _poly_divmod(num, den):
    """Long division over AlgExpr coefficients; den has a non-zero rational
    leading coefficient."""
    num = list(num)
    lead = den[-1]
    quot = [ZERO] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        q = div(num[k + len(den) - 1], lead)
        quot[k] = q
        for j, d in enumerate(den):
            num[k + j] = sub(num[k + j], mul(q, d))
    return quot, num[: len(den) - 1]


def _is_zero(x: AlgExpr) -> bool:
    return isinstance(x, Mono) and x.m.is_zero


def _derivative_at_roots(roots, leading):
    """lead * prod_{k != j}(r_j - r_k) for each j; collapses to
    lead * n * r_j^(n-1) when the roots are all n-th roots of one constant."""
    n = len(roots)
    powers = {r**n for r in roots}
    if n > 1 and len(powers) == 1 and len(set(roots)) == n:
        return [mul(leading, n, Mono(r ** (n - 1))) for r in roots]
    out = []
    for j, rj in enumerate(roots):
        factors = [sub(Mono(rj), Mono(rk)) for k, rk in enumerate(roots) if k != j]
        out.append(mul(leading, *factors))
    return out


def closed_form_integral(alpha, numerator, roots, leading=1, regularize: bool = False) -> LogCombination:
    """int_0^1 x^alpha * N(x) / (leading * prod_j (x - r_j)) dx as a log combination.

    ``numerator`` lists coefficients of N in increasing degree; ``roots`` is a
    list of ``(root, multiplicity)`` pairs with every multiplicity 1.  With
    ``regularize`` the Pochhammer continuation is returned when the integral
    diverges at 0 (alpha + lowest degree <= -1, non-integer).
    """
    alpha = Fraction(alpha)
    num = [as_expr(c) for c in numerator]
    while len(num) > 1 and _is_zero(num[-1]):
        num.pop()
    rts = []
    for r, mult in roots:
        if mult != 1:
            raise RepeatedRoot(f"root {Mono(_as_mono(r))} has multiplicity {mult}")
        r = _as_mono(r)
        if on_unit_segment(r):
            raise PoleOnPath(f"denominator root {Mono(r)} lies on [0, 1]")
        rts.append(r)
    if len(set(rts)) != len(rts):
        raise RepeatedRoot("denominator roots are not distinct")
    leading = as_expr(leading)

    low = next((k for k, c in enumerate(num) if not _is_zero(c)), None)
    if low is None:
        return LogCombination()
    worst = alpha + low
    if worst <= -1:
        if (alpha).denominator == 1:
            raise NonConvergent(f"integer exponent {worst} <= -1 diverges at 0")
        if not regularize:
            raise NonConvergent(f"exponent {worst} <= -1 diverges at 0; pass regularize=True")

    result = LogCombination()
    if rts:
        den = [ONE]
        for r in rts:
            den = _poly_mul(den, [Mono(-r), ONE])
        den = [mul(leading, d) for d in den]
    else:
        den = [leading]
    if len(num) >= len(den):
        quot, num = _poly_divmod(num, den)
        for k, q in enumerate(quot):
            if _is_zero(q):
                continue
            e = alpha + k + 1
            if e == 0:
                raise NonConvergent("x^-1 term in the polynomial part")
            result = result + LogCombination.const(mul(q, as_expr(1 / e)))
    if not rts:
        return result

    derivs = _derivative_at_roots(rts, leading)
    for r, d in zip(rts, derivs):
        residue = div(_poly_eval(num, r), d)
        if _is_zero(residue):
            continue
        # int x^alpha/(x - r) dx = -J(alpha + 1, r)
        pole = power_pole_integral(alpha + 1, r, regularize=True)
        result = result + pole.scale(mul(-1, residue))
    return result


def _cos_kind(shift, scale_fn):
    def build(alpha):
        x = alpha + shift
        if (x - Fraction(1, 2)).denominator == 1:
            raise TrigPole(f"cos(pi*{x}) = 0")
        return div(scale_fn(alpha), cos_pi(x))

    return build


def _sin_kind(shift, scale_fn):
    def build(alpha):
        x = alpha + shift
        if x.denominator == 1:
            raise TrigPole(f"sin(pi*{x}) = 0")
        return div(scale_fn(alpha), sin_pi(x))

    return build


def _inv_sqrt2():
    return radical(2, Fraction(-1, 2))


TRIG_KINDS = {
    # 4^a pi / cos(pi a)
    "cos_2m": _cos_kind(Fraction(0), lambda a: radical(4, a)),
    # 2^(2a-1) pi / cos(pi a - pi/2)
    "cos_2m_shift": _cos_kind(Fraction(-1, 2), lambda a: radical(2, 2 * a - 1)),
    # 3^(3a) pi / sin(pi a + pi/3)
    "sin_3m_g2": _sin_kind(Fraction(1, 3), lambda a: radical(3, 3 * a)),
    # 3^(3a) pi / sin(pi a + 2pi/3)
    "sin_3m_g3": _sin_kind(Fraction(2, 3), lambda a: radical(3, 3 * a)),
    # 4^(3a-1) pi / (sqrt2 sin(pi a + pi/4))
    "sin_4m_g2": _sin_kind(Fraction(1, 4), lambda a: mul(radical(4, 3 * a - 1), _inv_sqrt2())),
    # 4^(3a-1) pi / (sqrt2 cos(pi a + pi/4))
    "cos_4m_g3": _cos_kind(Fraction(1, 4), lambda a: mul(radical(4, 3 * a - 1), _inv_sqrt2())),
}


def trig_correction(kind: str, alpha) -> LogCombination:
    """Exceptional-divisor term (algebraic number times pi) as a log combination."""
    try:
        build = TRIG_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown trig kind {kind!r}; expected one of {sorted(TRIG_KINDS)}") from None
    return LogCombination.const(mul(build(Fraction(alpha)), PI))
