"""The 3F2(1, 1, p3; p4, p5; 1) series and Pochhammer symbols."""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from ..errors import Divergent, InvalidExponent, ToleranceNotMet

__all__ = ["QuadResult", "pochhammer", "f32_at_1", "to_mpf"]


@dataclass(frozen=True)
class QuadResult:
    """A numerical value with an absolute error estimate and the number of
    integrand evaluations (or series terms) it took."""

    value: object
    error: object
    evaluations: int

    def __post_init__(self):
        if self.error < 0:
            raise ValueError("error estimate must be non-negative")


def to_mpf(x):
    """Exact conversion of ints, Fractions and numeric strings to mpf at the
    current working precision."""
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def pochhammer(p, k: int):
    """Rising factorial (p)_k = p (p+1) ... (p+k-1); (p)_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1
    for j in range(k):
        out *= p + j
    return out


def _is_nonpositive_int(x) -> bool:
    return x <= 0 and x == int(x)


def _relative_target(tol, value):
    return tol * max(abs(value), mp.mpf(10) ** (-mp.mp.dps // 2))


def _log_term(x, p3, p4, p5):
    """log t(x) for the continuous extension of the series term."""
    return (
        mp.loggamma(x + 1) + mp.loggamma(x + p3) - mp.loggamma(x + p4) - mp.loggamma(x + p5)
        + mp.loggamma(p4) + mp.loggamma(p5) - mp.loggamma(p3)
    )


def _euler_maclaurin(p3, p4, p5, partial, n, orders=6):
    """sum_{k<n} t_k given, plus the tail sum_{k>=n} t_k from the
    Euler-Maclaurin formula; the last correction term is the error bound."""

    lead = mp.gammaprod([p4, p5], [p3])
    big = mp.mpf(10) ** mp.mp.dps

    def t(x):
        if x > big:
            # t(x) = lead * x^(p3-p4-p5+1) * (1 + O(1/x))
            return lead * x ** (p3 - p4 - p5 + 1)
        # loggamma differences cancel about log10(x) digits
        with mp.workdps(mp.mp.dps + int(mp.log10(x + 1)) + 10):
            return +mp.exp(_log_term(x, p3, p4, p5))

    # int_n^oo t(x) dx with x = n w^(-r), r = 1/(delta-1): the algebraic
    # decay x^(-delta) turns into a bounded integrand on (0, 1]
    r = 1 / (p4 + p5 - p3 - 2)
    tail = mp.quad(lambda w: t(n * w ** (-r)) * n * r * w ** (-r - 1), [0, mp.mpf(1) / 4, 1])
    tail += t(n) / 2
    last = mp.mpf(0)
    for j in range(1, orders + 1):
        last = -mp.bernoulli(2 * j) / mp.factorial(2 * j) * mp.diff(t, n, 2 * j - 1)
        tail += last
    return partial + tail, abs(last)


def f32_at_1(p3, p4, p5, tol=1e-8, precision: int = 30, cross_check: bool = True) -> QuadResult:
    """sum_k (1)_k (1)_k (p3)_k / ((p4)_k (p5)_k k!) by Levin-u acceleration.

    The terms decay like k^(-(p4+p5-p3-1)), so the series converges iff
    p4 + p5 - p3 - 2 > 0.  The Levin order is capped at 20 for tolerances
    down to 1e-15 and grows with the requested digits beyond that.  The
    result is cross-checked against an Euler-Maclaurin tail estimate.
    """
    with mp.workdps(max(precision, 15) + 10):
        p3, p4, p5 = (to_mpf(p) for p in (p3, p4, p5))
        tol = to_mpf(tol)
    if _is_nonpositive_int(p4) or _is_nonpositive_int(p5):
        raise InvalidExponent(f"lower parameter is a non-positive integer: {p4}, {p5}")
    excess = p4 + p5 - p3 - 2
    if excess <= 0:
        raise Divergent(f"p4 + p5 - p3 - 2 = {mp.nstr(excess, 8)} <= 0: series diverges at 1")

    digits = max(precision, int(-mp.log10(tol)) + 5)
    cap = 20 if tol >= 1e-15 else int(1.3 * digits) + 10
    with mp.workdps(2 * digits + 30):
        p3, p4, p5 = (to_mpf(p) for p in (p3, p4, p5))
        levin = mp.levin(method="levin", variant="u")
        term, partial = mp.mpf(1), mp.mpf(0)
        prev, value, err = None, None, mp.inf
        settled = 0
        for k in range(cap + 1):
            partial += term
            value, _ = levin.step_psum(partial)
            if prev is not None:
                err = abs(value - prev)
                settled = settled + 1 if err <= _relative_target(tol, value) / 10 else 0
                if settled >= 2 and k >= 5:
                    break
            prev = value
            term *= (k + 1) * (k + p3) / ((k + p4) * (k + p5))
        evaluations = k + 1

        if not err <= _relative_target(tol, value):
            # Levin stalled: fall back to direct sums plus an Euler-Maclaurin tail
            n = 64
            partial, term = mp.mpf(0), mp.mpf(1)
            for k in range(n):
                partial += term
                term *= (k + 1) * (k + p3) / ((k + p4) * (k + p5))
            value, err = _euler_maclaurin(p3, p4, p5, partial, n)
            evaluations += n
            if not err <= _relative_target(tol, value):
                raise ToleranceNotMet(
                    f"3F2 series at 1 reached error {mp.nstr(err, 3)} > tol {mp.nstr(tol, 3)}", value, err
                )
        elif cross_check:
            n = 64
            partial, term = mp.mpf(0), mp.mpf(1)
            for k in range(n):
                partial += term
                term *= (k + 1) * (k + p3) / ((k + p4) * (k + p5))
            with mp.workdps(min(mp.mp.dps, 40)):
                em, em_err = _euler_maclaurin(p3, p4, p5, partial, n)
            # the tail estimate runs at <= 40 digits, so it only vouches for ~25 digits
            slack = 10 * em_err + 10 * max(tol, mp.mpf(10) ** -25) * abs(value)
            if abs(em - value) > slack:
                raise ToleranceNotMet(
                    f"Levin value and Euler-Maclaurin tail disagree by {mp.nstr(abs(em - value), 3)}", value, err
                )
    with mp.workdps(precision):
        return QuadResult(+value, +err, evaluations)
