"""Text and JSON forms of constants and log combinations.

Grammar (whitespace ignored)::

    sum    := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := atom ('^' (INT | '(' ['-'] INT ['/' INT] ')'))?
    atom   := INT | 'pi' | 'i' | 'e' '(' rational ')' | 'log' '(' sum ')' | '(' sum ')'

``log`` may only occur as a factor of a top-level term of a log combination.
Both forms round-trip: ``parse(render(x)) == x`` for canonical trees.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .constants import (
    AlgExpr,
    Mono,
    Pi,
    Power,
    Prod,
    RadicalMonomial,
    Sum,
    add,
    as_expr,
    mul,
    power,
    unity,
    PI,
)

__all__ = [
    "render_expr",
    "render_logcomb",
    "parse_expr",
    "parse_logcomb",
    "expr_to_json",
    "expr_from_json",
    "logcomb_to_json",
    "logcomb_from_json",
]

# precedence levels
_SUM, _PROD, _NEG, _POW, _ATOM = 1, 2, 3, 4, 5


def _q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _mono_parts(m: RadicalMonomial) -> tuple[bool, list[str]]:
    """(negative?, factor strings) for a monomial."""
    parts = []
    c = abs(m.coeff)
    if c != 1 or (m.unity == 0 and not m.radicals):
        parts.append(_q(c))
    if m.unity:
        parts.append(f"e({_q(m.unity)})")
    for p, e in m.radicals:
        parts.append(f"{p}^({_q(e)})")
    return m.coeff < 0, parts


def _render(x: AlgExpr) -> tuple[str, int]:
    """Text of x and the precedence of its outermost operator."""
    if isinstance(x, Mono):
        negative, parts = _mono_parts(x.m)
        body = "*".join(parts)
        if negative:
            return "-" + body, _NEG
        if len(parts) > 1 or "/" in body:
            return body, _PROD
        if "^" in body:
            return body, _POW
        return body, _ATOM
    if isinstance(x, Pi):
        return "pi", _ATOM
    if isinstance(x, Sum):
        out = []
        for k, t in enumerate(x.terms):
            s, _ = _render(t)
            if k == 0:
                out.append(s)
            elif s.startswith("-"):
                out.append(s)
            else:
                out.append("+" + s)
        return "".join(out), _SUM
    if isinstance(x, Prod):
        return _render_factors(x.factors)
    if isinstance(x, Power):
        s, prec = _render(x.base)
        if prec < _ATOM:
            s = f"({s})"
        e = x.exp
        es = str(e.numerator) if (e.denominator == 1 and e > 0) else f"({_q(e)})"
        return f"{s}^{es}", _POW
    raise TypeError(f"not an AlgExpr: {x!r}")


def _render_factors(factors) -> tuple[str, int]:
    negative = False
    parts: list[str] = []
    for k, f in enumerate(factors):
        if k == 0 and isinstance(f, Mono):
            negative, mparts = _mono_parts(f.m)
            if mparts == ["1"]:
                mparts = []
            parts.extend(mparts)
            continue
        s, prec = _render(f)
        if prec < _POW:
            s = f"({s})"
        parts.append(s)
    body = "*".join(parts)
    if negative:
        return "-" + body, _NEG
    return body, _PROD


def render_expr(x) -> str:
    return _render(as_expr(x))[0]


def _render_term(coeff: AlgExpr, arg: AlgExpr) -> str:
    lg = f"log({render_expr(arg)})"
    factors = coeff.factors if isinstance(coeff, Prod) else (coeff,)
    if isinstance(coeff, Sum):
        return f"({render_expr(coeff)})*{lg}"
    body, _ = _render_factors(factors)
    if body in ("", "-"):
        return body + lg
    return f"{body}*{lg}"


def render_logcomb(L) -> str:
    pieces = []
    const = L.constant
    if not (isinstance(const, Mono) and const.m.is_zero) or not L.terms:
        pieces.append(render_expr(const))
    for coeff, arg in L.terms:
        pieces.append(_render_term(coeff, arg))
    out = pieces[0]
    for p in pieces[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# --- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(log|pi|e|i)\b|(.))")


class _Log:
    """Transient parse node for log(arg)."""

    def __init__(self, arg):
        self.arg = arg


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        for num, word, ch in _TOKEN.findall(text):
            if num:
                self.toks.append(("int", int(num)))
            elif word:
                self.toks.append(("word", word))
            elif ch.strip():
                self.toks.append(("op", ch))
        self.pos = 0
        self.text = text

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise ParseError(f"unexpected {tok[1]!r} at token {self.pos} in {self.text!r}")
        self.pos += 1
        return tok[1]

    def at(self, kind, value=None):
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    # each level returns a list of summands; a summand is a list of factors
    def sum(self):
        terms = [self.term()]
        while self.at("op", "+") or self.at("op", "-"):
            sign = self.take()
            t = self.term()
            terms.append(t if sign == "+" else [Mono(RadicalMonomial.make(-1))] + t)
        return terms

    def term(self):
        factors = self.unary()
        while self.at("op", "*") or self.at("op", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "*":
                factors = factors + rhs
            else:
                if any(isinstance(f, _Log) for f in rhs):
                    raise ParseError("division by log(...) is not allowed")
                factors = factors + [power(mul(*rhs), -1)]
        return factors

    def unary(self):
        if self.at("op", "-"):
            self.take()
            return [Mono(RadicalMonomial.make(-1))] + self.unary()
        return [self.factor()]

    def _rational(self):
        sign = 1
        if self.at("op", "-"):
            self.take()
            sign = -1
        num = self.take("int")
        den = 1
        if self.at("op", "/"):
            self.take()
            den = self.take("int")
        return sign * Fraction(num, den)

    def factor(self):
        base = self.atom()
        if self.at("op", "^"):
            if isinstance(base, _Log):
                raise ParseError("power of log(...) is not allowed")
            self.take()
            if self.at("op", "("):
                self.take()
                e = self._rational()
                self.take("op", ")")
            else:
                e = Fraction(self.take("int"))
            base = power(base, e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return as_expr(val)
        if kind == "word":
            self.take()
            if val == "pi":
                return PI
            if val == "i":
                return unity(Fraction(1, 4))
            if val == "e":
                self.take("op", "(")
                q = self._rational()
                self.take("op", ")")
                return unity(q)
            if val == "log":
                self.take("op", "(")
                arg = _fold(self.sum())
                self.take("op", ")")
                return _Log(arg)
        if self.at("op", "("):
            self.take()
            inner = self.sum()
            self.take("op", ")")
            return _fold(inner)
        raise ParseError(f"unexpected {val!r} in {self.text!r}")

    def done(self):
        if self.pos != len(self.toks):
            raise ParseError(f"trailing input at token {self.pos} in {self.text!r}")


def _fold(terms) -> AlgExpr:
    out = []
    for factors in terms:
        if any(isinstance(f, _Log) for f in factors):
            raise ParseError("log(...) only allowed at the top level of a log combination")
        out.append(mul(*factors))
    return add(*out)


def parse_expr(text: str) -> AlgExpr:
    p = _Parser(text)
    terms = p.sum()
    p.done()
    return _fold(terms)


def parse_logcomb(text: str):
    from .logcomb import LogCombination

    p = _Parser(text)
    terms = p.sum()
    p.done()
    const = []
    logs = []
    for factors in terms:
        lg = [f for f in factors if isinstance(f, _Log)]
        if not lg:
            const.append(mul(*factors))
        elif len(lg) == 1:
            rest = [f for f in factors if not isinstance(f, _Log)]
            logs.append((mul(*rest), lg[0].arg))
        else:
            raise ParseError("a term may contain at most one log(...)")
    return LogCombination(add(*const), tuple(logs))


# --- JSON tree form -----------------------------------------------------------


def expr_to_json(x) -> dict:
    x = as_expr(x)
    if isinstance(x, Mono):
        return {
            "op": "mono",
            "coeff": _q(x.m.coeff),
            "unity": _q(x.m.unity),
            "radicals": {str(p): _q(e) for p, e in x.m.radicals},
        }
    if isinstance(x, Pi):
        return {"op": "pi"}
    if isinstance(x, Sum):
        return {"op": "add", "args": [expr_to_json(t) for t in x.terms]}
    if isinstance(x, Prod):
        return {"op": "mul", "args": [expr_to_json(f) for f in x.factors]}
    if isinstance(x, Power):
        return {"op": "pow", "base": expr_to_json(x.base), "exp": _q(x.exp)}
    raise TypeError(f"not an AlgExpr: {x!r}")


def expr_from_json(d: dict) -> AlgExpr:
    op = d.get("op")
    if op == "mono":
        rad = {int(p): Fraction(e) for p, e in d.get("radicals", {}).items()}
        return Mono(RadicalMonomial.make(Fraction(d["coeff"]), Fraction(d.get("unity", "0")), rad))
    if op == "pi":
        return PI
    if op == "add":
        return add(*(expr_from_json(a) for a in d["args"]))
    if op == "mul":
        return mul(*(expr_from_json(a) for a in d["args"]))
    if op == "pow":
        return power(expr_from_json(d["base"]), Fraction(d["exp"]))
    raise ParseError(f"unknown node {op!r}")


def logcomb_to_json(L) -> dict:
    return {
        "constant": expr_to_json(L.constant),
        "terms": [{"coeff": expr_to_json(c), "arg": expr_to_json(a)} for c, a in L.terms],
    }


def logcomb_from_json(d: dict):
    from .logcomb import LogCombination

    return LogCombination(
        expr_from_json(d["constant"]),
        tuple((expr_from_json(t["coeff"]), expr_from_json(t["arg"])) for t in d["terms"]),
    )
