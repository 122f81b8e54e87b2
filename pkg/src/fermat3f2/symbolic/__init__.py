"""Exact constants, log combinations and closed-form integration."""
from .constants import AlgExpr, Ball, RadicalMonomial, eval_const
from .integrals import (
    base_log_integral,
    closed_form_integral,
    digamma_difference,
    digamma_integral,
    power_pole_integral,
    trig_correction,
)
from .logcomb import LogCombination, eval_logcomb
from .textform import parse_expr, parse_logcomb, render_expr, render_logcomb

__all__ = [
    "AlgExpr",
    "Ball",
    "RadicalMonomial",
    "eval_const",
    "LogCombination",
    "eval_logcomb",
    "base_log_integral",
    "power_pole_integral",
    "digamma_integral",
    "digamma_difference",
    "closed_form_integral",
    "trig_correction",
    "parse_expr",
    "parse_logcomb",
    "render_expr",
    "render_logcomb",
]
