"""Exact algebraic constants.

:class:`RadicalMonomial` is ``c * e(q) * prod p**e_p`` with ``c`` rational,
``e(q) = exp(2 pi i q)`` and rational prime exponents.  General constants are
expression trees (:class:`AlgExpr`) over monomial leaves and the atom ``pi``;
they are never simplified beyond cheap canonical folding and are compared
numerically through ball evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import flint

from ..errors import DivisionNearZero

__all__ = [
    "RadicalMonomial",
    "AlgExpr",
    "Mono",
    "Pi",
    "Sum",
    "Prod",
    "Power",
    "ONE",
    "ZERO",
    "PI",
    "as_expr",
    "add",
    "sub",
    "mul",
    "neg",
    "div",
    "power",
    "unity",
    "radical",
    "cos_pi",
    "sin_pi",
    "Ball",
    "eval_const",
    "digits_to_bits",
]


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of a positive integer by trial division."""
    out = []
    d = 2
    while d * d <= n:
        k = 0
        while n % d == 0:
            n //= d
            k += 1
        if k:
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _frac01(q: Fraction) -> Fraction:
    return q - math.floor(q)


@dataclass(frozen=True)
class RadicalMonomial:
    """``coeff * e(unity) * prod(p ** exp for p, exp in radicals)``.

    Canonical form: radical exponents lie in (0, 1) with integer parts moved
    into ``coeff``; ``unity`` lies in [0, 1/2) with a factor e(1/2) = -1 moved
    into the sign of ``coeff``.  The zero monomial has no unity or radicals.
    """

    coeff: Fraction
    unity: Fraction = Fraction(0)
    radicals: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, coeff=1, unity=0, radicals=None) -> "RadicalMonomial":
        coeff = Fraction(coeff)
        if coeff == 0:
            return cls(Fraction(0))
        exps: dict[int, Fraction] = {}
        for p, e in dict(radicals or {}).items():
            e = Fraction(e)
            for q, k in _factor(int(p)):
                exps[q] = exps.get(q, Fraction(0)) + k * e
        rad = []
        for p in sorted(exps):
            e = exps[p]
            whole = math.floor(e)
            coeff *= Fraction(p) ** whole
            if e != whole:
                rad.append((p, e - whole))
        q = _frac01(Fraction(unity))
        if q >= Fraction(1, 2):
            q -= Fraction(1, 2)
            coeff = -coeff
        return cls(coeff, q, tuple(rad))

    @classmethod
    def rational(cls, r) -> "RadicalMonomial":
        return cls.make(r)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    @property
    def is_rational(self) -> bool:
        return self.unity == 0 and not self.radicals

    @property
    def is_real(self) -> bool:
        return self.unity == 0

    @property
    def shape(self) -> tuple:
        """Everything but the rational coefficient (used to collect like terms)."""
        return (self.unity, self.radicals)

    def __mul__(self, other: "RadicalMonomial") -> "RadicalMonomial":
        if not isinstance(other, RadicalMonomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO_M
        exps = dict(self.radicals)
        for p, e in other.radicals:
            exps[p] = exps.get(p, Fraction(0)) + e
        return RadicalMonomial.make(self.coeff * other.coeff, self.unity + other.unity, exps)

    def inverse(self) -> "RadicalMonomial":
        if self.is_zero:
            raise DivisionNearZero("inverse of the zero monomial")
        return RadicalMonomial.make(
            1 / self.coeff, -self.unity, {p: -e for p, e in self.radicals}
        )

    def __truediv__(self, other: "RadicalMonomial") -> "RadicalMonomial":
        return self * other.inverse()

    def __neg__(self) -> "RadicalMonomial":
        return RadicalMonomial(-self.coeff, self.unity, self.radicals)

    def __pow__(self, s) -> "RadicalMonomial":
        """Rational power.

        The monomial is rewritten as ``e(q) * prod p**E_p`` with q in [0, 1)
        (the sign of the coefficient goes into q) and raised termwise:
        ``e(q*s) * prod p**(E_p*s)``.  For non-integer ``s`` this picks one
        particular root; it is the principal one when q <= 1/2.
        """
        s = Fraction(s)
        if self.is_zero:
            if s <= 0:
                raise DivisionNearZero("non-positive power of zero")
            return ZERO_M
        if s.denominator == 1:
            k = int(s)
            base = self if k >= 0 else self.inverse()
            out = ONE_M
            for _ in range(abs(k)):
                out = out * base
            return out
        q = self.unity + (Fraction(1, 2) if self.coeff < 0 else 0)
        exps: dict[int, Fraction] = {}
        c = abs(self.coeff)
        for p, k in _factor(c.numerator):
            exps[p] = exps.get(p, Fraction(0)) + k
        for p, k in _factor(c.denominator):
            exps[p] = exps.get(p, Fraction(0)) - k
        for p, e in self.radicals:
            exps[p] = exps.get(p, Fraction(0)) + e
        return RadicalMonomial.make(1, q * s, {p: e * s for p, e in exps.items()})

    def to_acb(self) -> flint.acb:
        v = flint.acb(flint.fmpq(self.coeff.numerator, self.coeff.denominator))
        if self.unity:
            v *= flint.acb.exp_pi_i(flint.acb(_fmpq(2 * self.unity)))
        for p, e in self.radicals:
            v *= flint.arb(p) ** _fmpq(e)
        return v


def _fmpq(q: Fraction) -> flint.fmpq:
    return flint.fmpq(q.numerator, q.denominator)


ZERO_M = RadicalMonomial(Fraction(0))
ONE_M = RadicalMonomial(Fraction(1))


class AlgExpr:
    """Base class of constant expression trees.  Build with :func:`add`,
    :func:`mul`, :func:`power`, ... which keep trees in a canonical shape."""

    __slots__ = ()

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, q):
        return power(self, q)

    def __str__(self):
        from .textform import render_expr

        return render_expr(self)


@dataclass(frozen=True, eq=True)
class Mono(AlgExpr):
    m: RadicalMonomial


@dataclass(frozen=True, eq=True)
class Pi(AlgExpr):
    pass


@dataclass(frozen=True, eq=True)
class Sum(AlgExpr):
    terms: tuple


@dataclass(frozen=True, eq=True)
class Prod(AlgExpr):
    factors: tuple


@dataclass(frozen=True, eq=True)
class Power(AlgExpr):
    base: AlgExpr
    exp: Fraction


ONE = Mono(ONE_M)
ZERO = Mono(ZERO_M)
PI = Pi()


def as_expr(x) -> AlgExpr:
    if isinstance(x, AlgExpr):
        return x
    if isinstance(x, RadicalMonomial):
        return Mono(x)
    if isinstance(x, (int, Fraction)):
        return Mono(RadicalMonomial.make(x))
    raise TypeError(f"cannot convert {type(x).__name__} to AlgExpr")


def unity(q) -> Mono:
    """e(q) = exp(2 pi i q)."""
    return Mono(RadicalMonomial.make(1, q))


def radical(base, exponent) -> Mono:
    """``base ** exponent`` for a positive rational base."""
    return Mono(RadicalMonomial.make(base) ** exponent)


def _split(term: AlgExpr) -> tuple[RadicalMonomial, tuple]:
    """term -> (monomial factor, remaining factors)."""
    if isinstance(term, Mono):
        return term.m, ()
    if isinstance(term, Prod) and isinstance(term.factors[0], Mono):
        return term.factors[0].m, term.factors[1:]
    if isinstance(term, Prod):
        return ONE_M, term.factors
    return ONE_M, (term,)


def _join(m: RadicalMonomial, rest: tuple) -> AlgExpr:
    if m.is_zero:
        return ZERO
    if not rest:
        return Mono(m)
    if m == ONE_M:
        return rest[0] if len(rest) == 1 else Prod(rest)
    return Prod((Mono(m),) + rest)


def add(*xs) -> AlgExpr:
    """Flattened sum with like terms (same monomial shape and same remaining
    factors) collected; order of first appearance is kept."""
    flat = []
    for x in xs:
        x = as_expr(x)
        flat.extend(x.terms if isinstance(x, Sum) else (x,))
    slots: dict = {}
    order = []
    for t in flat:
        m, rest = _split(t)
        if m.is_zero:
            continue
        key = (m.shape, rest)
        if key in slots:
            slots[key] = slots[key] + m.coeff
        else:
            slots[key] = m.coeff
            order.append(key)
    terms = []
    for key in order:
        c = slots[key]
        if c == 0:
            continue
        (u, rad), rest = key
        terms.append(_join(RadicalMonomial(c, u, rad), rest))
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


def mul(*xs) -> AlgExpr:
    m = ONE_M
    rest = []
    for x in xs:
        x = as_expr(x)
        for f in x.factors if isinstance(x, Prod) else (x,):
            if isinstance(f, Mono):
                m = m * f.m
            else:
                rest.append(f)
    return _join(m, tuple(rest))


def neg(x) -> AlgExpr:
    return mul(Mono(RadicalMonomial.make(-1)), x)


def sub(x, y) -> AlgExpr:
    return add(x, neg(y))


def power(x, q) -> AlgExpr:
    x = as_expr(x)
    q = Fraction(q)
    if q == 0:
        return ONE
    if q == 1:
        return x
    if isinstance(x, Mono):
        return Mono(x.m ** q)
    if isinstance(x, Power) and q.denominator == 1:
        return power(x.base, x.exp * q)
    if isinstance(x, Prod) and q.denominator == 1:
        return mul(*(power(f, q) for f in x.factors))
    return Power(x, q)


def div(x, y) -> AlgExpr:
    return mul(x, power(y, -1))


def cos_pi(q) -> AlgExpr:
    """cos(pi q) = (e(q/2) + e(-q/2)) / 2 for rational q."""
    q = Fraction(q)
    return mul(Fraction(1, 2), add(unity(q / 2), unity(-q / 2)))


def sin_pi(q) -> AlgExpr:
    """sin(pi q) = (e(q/2) - e(-q/2)) / (2i) for rational q."""
    q = Fraction(q)
    return mul(Mono(RadicalMonomial.make(Fraction(1, 2), Fraction(-1, 4))), sub(unity(q / 2), unity(-q / 2)))


# --- evaluation -----------------------------------------------------------


def digits_to_bits(digits: int) -> int:
    return int(math.ceil(digits * 3.3219280948873626))


@dataclass(frozen=True)
class Ball:
    """Complex ball: an arb/acb value with a rigorous radius."""

    value: flint.acb

    @property
    def radius(self) -> float:
        r = float(self.value.real.rad()) + float(self.value.imag.rad())
        return r

    @property
    def mid(self) -> complex:
        return complex(float(self.value.real.mid()), float(self.value.imag.mid()))

    def mpc(self, dps: int | None = None):
        """Midpoint as an mpmath ``mpc`` (string round trip keeps all digits)."""
        import mpmath

        digits = dps or 60
        re = self.value.real.mid().str(digits + 5, radius=False)
        im = self.value.imag.mid().str(digits + 5, radius=False)
        return mpmath.mpc(mpmath.mpf(re), mpmath.mpf(im))

    def contains_zero(self) -> bool:
        return self.value.contains(0)


def _eval(x: AlgExpr, cache: dict) -> flint.acb:
    hit = cache.get(x)
    if hit is not None:
        return hit
    if isinstance(x, Mono):
        v = x.m.to_acb()
    elif isinstance(x, Pi):
        v = flint.acb(flint.arb.pi())
    elif isinstance(x, Sum):
        v = flint.acb(0)
        for t in x.terms:
            v += _eval(t, cache)
    elif isinstance(x, Prod):
        v = flint.acb(1)
        for f in x.factors:
            v *= _eval(f, cache)
    elif isinstance(x, Power):
        b = _eval(x.base, cache)
        if x.exp < 0 and b.contains(0):
            raise DivisionNearZero(f"divisor ball contains 0: {x.base}")
        if x.exp.denominator == 1:
            v = b ** int(x.exp)
        else:
            v = b ** flint.acb(_fmpq(x.exp))
    else:
        raise TypeError(f"not an AlgExpr: {x!r}")
    cache[x] = v
    return v


def eval_const(x, precision: int = 30) -> Ball:
    """Ball evaluation of a constant to ``precision`` decimal digits.

    Working precision is raised until the radius is below 10**(2-precision);
    a divisor whose ball still contains 0 at the highest working precision
    raises :class:`DivisionNearZero`.
    """
    if precision < 15:
        raise ValueError("precision must be at least 15 digits")
    x = as_expr(x)
    target = 10.0 ** (2 - precision)
    bits = digits_to_bits(precision) + 30
    last = None
    for _ in range(5):
        with flint.ctx.workprec(bits):
            try:
                v = _eval(x, {})
            except DivisionNearZero as exc:
                last = exc
                bits *= 2
                continue
        ball = Ball(v)
        mag = max(1.0, abs(ball.mid))
        if ball.radius <= target * mag:
            return ball
        bits *= 2
    if last is not None:
        raise last
    return ball
