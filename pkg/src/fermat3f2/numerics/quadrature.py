"""Tanh-sinh quadrature on (0, 1) and (0, oo), and the Pochhammer-regularised
integral over P(0, 1) for exponents at or below -1."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from ..errors import BadRadius, IntegerAlpha, PoleOnPath, ToleranceNotMet
from ..symbolic.constants import AlgExpr, RadicalMonomial, Mono, eval_const
from .series import QuadResult, to_mpf

__all__ = ["IntegrandSpec", "tanh_sinh", "quad_1d", "poch_contour", "to_mpc"]


def to_mpc(x, precision: int | None = None):
    """mpf/mpc value of a number, Fraction, RadicalMonomial or AlgExpr."""
    if isinstance(x, RadicalMonomial):
        x = Mono(x)
    if isinstance(x, AlgExpr):
        dps = precision or mp.mp.dps
        v = eval_const(x, max(dps, 15)).mpc(dps + 5)
        return v.real if v.imag == 0 else v
    if isinstance(x, complex):
        return mp.mpc(x)
    if isinstance(x, (mp.mpc, mp.mpf)):
        return x
    return to_mpf(x)


@dataclass(frozen=True)
class IntegrandSpec:
    """scale * x^exponent * (sum_k c_k x^(e_k)) * N(x) / (leading * prod_j (x - r_j)).

    ``numerator`` holds N's coefficients in increasing degree, ``roots`` is a
    tuple of ``(root, multiplicity)`` pairs and ``extra_powers`` a tuple of
    ``(c_k, e_k)``; an empty ``extra_powers`` means the factor 1.  Two extra
    powers with cancelling coefficients over a root at x = 1 form the
    removable "digamma shape" (x^a - x^b)/(1 - x).
    """

    exponent: object = 0
    numerator: tuple = (1,)
    roots: tuple = ()
    leading: object = 1
    extra_powers: tuple = ()
    interval: str = "01"
    scale: object = 1

    def __post_init__(self):
        if self.interval not in ("01", "0inf"):
            raise ValueError(f"interval must be '01' or '0inf', got {self.interval!r}")

    def with_exponent(self, exponent) -> "IntegrandSpec":
        return IntegrandSpec(exponent, self.numerator, self.roots, self.leading,
                             self.extra_powers, self.interval, self.scale)

    def min_exponent(self):
        """Smallest power of x at 0 (over the extra-power terms and N)."""
        base = Fraction(self.exponent) if not isinstance(self.exponent, float) else self.exponent
        low = next((k for k, c in enumerate(self.numerator) if c != 0), 0)
        extra = min((Fraction(e) for _, e in self.extra_powers), default=0)
        return base + low + extra


@dataclass
class _Compiled:
    """Numerical form of an IntegrandSpec at the current working precision."""

    exponent: object
    num: list
    den: list
    scale: object
    powers: list = field(default_factory=list)
    removable_one: bool = False

    def __call__(self, x, xc=None):
        """Value at x; xc = 1 - x, passed separately near x = 1."""
        if xc is None:
            xc = 1 - x
        nv = mp.polyval(self.num[::-1], x)
        if self.removable_one:
            # c (x^a - x^b) / (x - 1) without cancellation
            (c, a), (_, b) = self.powers
            lx = mp.log1p(-xc) if xc < 0.5 else mp.log(x)
            ratio = c * mp.exp(a * lx) * mp.expm1((b - a) * lx) / xc
            return self.scale * x**self.exponent * nv * ratio / mp.polyval(self.den[::-1], x)
        pw = sum(c * x**e for c, e in self.powers) if self.powers else 1
        return self.scale * x**self.exponent * pw * nv / mp.polyval(self.den[::-1], x)


def _realify(v):
    if isinstance(v, mp.mpc) and abs(v.imag) <= mp.mpf(10) ** (10 - mp.mp.dps) * max(abs(v.real), 1):
        return v.real
    return v


def _compile(spec: IntegrandSpec, check_path: bool = True) -> _Compiled:
    roots = [(to_mpc(r), mult) for r, mult in spec.roots]
    powers = [(to_mpc(c), to_mpc(e)) for c, e in spec.extra_powers]
    removable = False
    den = [to_mpc(spec.leading)]
    for r, mult in roots:
        on_unit = abs(mp.im(r)) < mp.eps * 10 and mp.re(r) >= 0
        hit = on_unit and (spec.interval == "0inf" or mp.re(r) <= 1)
        if hit:
            if abs(r - 1) < mp.eps * 10 and mult == 1 and len(powers) == 2 and abs(powers[0][0] + powers[1][0]) < mp.eps * 10:
                # (x - 1) is divided out by hand in _Compiled.__call__
                removable = True
                continue
            if check_path:
                raise PoleOnPath(f"denominator root {mp.nstr(r, 8)} lies on the integration path")
        for _ in range(mult):
            den = [(den[k - 1] if k else 0) - r * (den[k] if k < len(den) else 0) for k in range(len(den) + 1)]
    den = [_realify(d) for d in den]
    num = [_realify(to_mpc(c)) for c in spec.numerator]
    return _Compiled(to_mpc(spec.exponent), num, den, _realify(to_mpc(spec.scale)), powers, removable)


@lru_cache(maxsize=256)
def _level_nodes(level: int, tmax: float, dps: int):
    """New nodes of level ``level`` as (x, 1 - x, dx/dt) on (0, 1)."""
    with mp.workdps(dps):
        h = mp.mpf(2) ** -level
        kmax = int(tmax * 2**level)
        ks = range(-kmax, kmax + 1) if level == 0 else range(-kmax + (kmax + 1) % 2, kmax + 1, 2)
        out = []
        for k in ks:
            t = k * h
            u = mp.pi * mp.sinh(t)
            x = 1 / (1 + mp.exp(-u))
            xc = 1 / (1 + mp.exp(u))
            out.append((x, xc, x * xc * mp.pi * mp.cosh(t)))
        return tuple(out)


def _tmax(dps: int, decay: float) -> float:
    # integrand*weight ~ exp(-decay * pi/2 * e^t) at the ends
    decay = max(min(float(decay), 1.0), 0.02)
    return round(math.log(2 * (dps + 5) * math.log(10) / (math.pi * decay)), 2)


def tanh_sinh(f, tol=1e-8, precision: int = 30, decay: float = 0.1, min_level: int = 3, max_level: int = 10) -> QuadResult:
    """int_0^1 f(x, 1 - x) dx by the tanh-sinh rule, halving the step until
    successive levels agree to ``tol`` (relative).

    ``decay`` is the smallest 1 + (endpoint exponent) and sets the truncation
    of the t-axis.  The error estimate is the difference of the last two
    levels.
    """
    tol = to_mpf(tol)
    dps = precision + 10
    tmax = _tmax(dps, decay)
    with mp.workdps(dps):
        raw = mp.mpf(0)
        prev = None
        evaluations = 0
        for level in range(max_level + 1):
            for x, xc, w in _level_nodes(level, tmax, dps):
                raw += f(x, xc) * w
            evaluations += len(_level_nodes(level, tmax, dps))
            value = raw * mp.mpf(2) ** -level
            if prev is not None:
                err = abs(value - prev)
                if level >= min_level and err <= tol * max(abs(value), mp.mpf(10) ** -dps):
                    return QuadResult(_realify(value), err, evaluations)
            prev = value
    raise ToleranceNotMet(f"tanh-sinh did not reach tol {mp.nstr(tol, 3)} (error {mp.nstr(err, 3)})", value, err)


def quad_1d(spec: IntegrandSpec, tol=1e-8, precision: int = 30) -> QuadResult:
    """int over (0, 1) or (0, oo) of the integrand; endpoint exponents
    must exceed -1 (at 0) and the integrand must decay faster than 1/x at oo."""
    with mp.workdps(precision + 10):
        g = _compile(spec)
        low = float(spec.min_exponent())
        if low <= -1:
            raise ValueError(f"endpoint exponent {low} <= -1: use poch_contour")
        if spec.interval == "01":
            return tanh_sinh(g, tol, precision, decay=1 + low)
        # (0, oo) = (0, 1) + (1, oo); v -> 1/v maps the tail onto (0, 1)
        high = float(to_mpc(spec.exponent)) + max((float(to_mpc(e)) for _, e in spec.extra_powers), default=0)
        top = high + len(spec.numerator) - 1 - sum(m for _, m in spec.roots)
        if top >= -1:
            raise ValueError("integrand does not decay faster than 1/x at infinity")
        head = tanh_sinh(g, tol, precision, decay=1 + low)
        tail = tanh_sinh(lambda u, uc: g(1 / u) / u**2, tol, precision, decay=min(1.0, -1 - top))
        return QuadResult(_realify(head.value + tail.value), head.error + tail.error,
                          head.evaluations + tail.evaluations)


def _nearest_pole(spec: IntegrandSpec):
    dist = [abs(to_mpc(r)) for r, _ in spec.roots]
    return min(dist) if dist else mp.inf


def poch_contour(alpha, f: IntegrandSpec, eps=None, tol=1e-8, precision: int = 30) -> QuadResult:
    """Pochhammer-regularised int_0^1 x^alpha f(x) dx.

    Each power term x^(a_k) of x^alpha f is integrated as
    int_eps^1 + (e(a_k) - 1)^(-1) * (integral over the circle |x| = eps
    traversed from arg 0 to 2 pi with the branch arg x^(a_k) = 2 pi a_k t).
    The circle is parametrised by t in [0, 1]; since the integrand jumps by
    e(a_k) across t = 0 it is not periodic, so tanh-sinh is used in t as well.
    The value is independent of eps and analytic in alpha off the integers.
    """
    spec = f.with_exponent(Fraction(alpha) + Fraction(f.exponent) if not isinstance(alpha, float) else alpha + float(f.exponent))
    if spec.interval != "01":
        raise ValueError("poch_contour integrates over (0, 1) only")
    terms = list(spec.extra_powers) or [(1, 0)]
    with mp.workdps(precision + 10):
        exps = [to_mpc(spec.exponent) + to_mpc(e) for _, e in terms]
        for a in exps:
            if a == int(a):
                raise IntegerAlpha(f"exponent {mp.nstr(a, 8)} is an integer")
        pole = _nearest_pole(spec)
        if eps is None:
            eps = min(mp.mpf(1) / 2, pole / 2)
        eps = to_mpf(eps)
        if not 0 < eps < min(pole, 1):
            raise BadRadius(f"radius {mp.nstr(eps, 8)} must lie in (0, min(1, {mp.nstr(pole, 8)}))")
        g = _compile(spec)
        line = tanh_sinh(lambda u, uc: g(eps + (1 - eps) * u, (1 - eps) * uc) * (1 - eps), tol, precision, decay=1.0)
        value, error, evaluations = line.value, line.error, line.evaluations
        # contour part per power term, each with its own branch factor
        for (c, e), a in zip(terms, exps):
            single = IntegrandSpec(0, spec.numerator, spec.roots, spec.leading, (), "01", spec.scale)
            h = _compile(single, check_path=False)
            c = to_mpc(c)
            two_pi_i = 2j * mp.pi

            def on_circle(t, tc, a=a, h=h, c=c):
                # x = eps e(t), x^a = eps^a e(a t), dx = 2 pi i x dt
                x = eps * mp.expjpi(2 * t)
                return c * eps ** (a + 1) * mp.expjpi(2 * (a + 1) * t) * h(x) * two_pi_i

            ring = tanh_sinh(on_circle, tol, precision, decay=1.0)
            value += ring.value / (mp.expjpi(2 * a) - 1)
            error += ring.error / abs(mp.expjpi(2 * a) - 1)
            evaluations += ring.evaluations
        return QuadResult(_realify(value), error, evaluations)
