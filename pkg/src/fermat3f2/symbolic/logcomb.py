"""Elements of Qbar + Qbar*log(Qbar^x) (+ Qbar*pi): a constant plus a finite
sum of ``coeff * log(arg)`` under the principal branch."""
from __future__ import annotations

from dataclasses import dataclass

import flint

from ..errors import BranchAmbiguity
from .constants import (
    ONE,
    ZERO,
    AlgExpr,
    Ball,
    _eval,
    add,
    as_expr,
    digits_to_bits,
    mul,
)

__all__ = ["LogCombination", "eval_logcomb"]


@dataclass(frozen=True)
class LogCombination:
    constant: AlgExpr = ZERO
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", as_expr(self.constant))
        merged: dict = {}
        order = []
        for coeff, arg in self.terms:
            coeff, arg = as_expr(coeff), as_expr(arg)
            if arg == ONE:
                continue
            if arg in merged:
                merged[arg] = add(merged[arg], coeff)
            else:
                merged[arg] = coeff
                order.append(arg)
        terms = tuple((merged[a], a) for a in order if merged[a] != ZERO)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def const(cls, x) -> "LogCombination":
        return cls(as_expr(x), ())

    @classmethod
    def log(cls, arg, coeff=ONE) -> "LogCombination":
        return cls(ZERO, ((coeff, arg),))

    def __add__(self, other: "LogCombination") -> "LogCombination":
        if not isinstance(other, LogCombination):
            other = LogCombination.const(other)
        return LogCombination(add(self.constant, other.constant), self.terms + other.terms)

    __radd__ = __add__

    def scale(self, c) -> "LogCombination":
        c = as_expr(c)
        return LogCombination(mul(c, self.constant), tuple((mul(c, k), a) for k, a in self.terms))

    def __neg__(self) -> "LogCombination":
        return self.scale(-1)

    def __sub__(self, other: "LogCombination") -> "LogCombination":
        return self + (-other)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        from .textform import render_logcomb

        return render_logcomb(self)

    def to_json(self) -> dict:
        from .textform import logcomb_to_json

        return logcomb_to_json(self)


def _principal_log(v: flint.acb, arg) -> flint.acb:
    if v.contains(0):
        raise BranchAmbiguity(f"log argument ball contains 0: {arg}")
    im = v.imag
    if not im.is_exact() and im.contains(0) and v.real.lower() < 0:
        raise BranchAmbiguity(f"log argument ball straddles the negative real axis: {arg}")
    return v.log()


def eval_logcomb(L: LogCombination, precision: int = 30) -> Ball:
    """constant + sum coeff*Log(arg), principal branch, as a ball.

    Working precision is doubled until the radius is below 10**(2-precision)
    relative to max(1, |value|).
    """
    if precision < 15:
        raise ValueError("precision must be at least 15 digits")
    target = 10.0 ** (2 - precision)
    bits = digits_to_bits(precision) + 30
    for _ in range(5):
        cache: dict = {}
        with flint.ctx.workprec(bits):
            total = _eval(L.constant, cache)
            for coeff, arg in L.terms:
                total += _eval(coeff, cache) * _principal_log(_eval(arg, cache), arg)
        ball = Ball(total)
        if ball.radius <= target * max(1.0, abs(ball.mid)):
            return ball
        bits *= 2
    return ball
