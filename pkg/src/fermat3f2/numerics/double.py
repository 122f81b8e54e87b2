"""Double integral of (xi + eta - 1)^(a1-1) xi^(a2-1) eta^(a3-1) over the
triangle xi, eta <= 1 <= xi + eta."""
from __future__ import annotations

import math

import numpy as np

from ..errors import NonConvergent, ToleranceNotMet
from .series import QuadResult

__all__ = ["gamma1_double"]


def _nodes(level: int, tmax: float):
    """(log x, log(1 - x), x, 1 - x, log dx/dt) for t = k 2^-level, |t| <= tmax."""
    h = 2.0**-level
    k = np.arange(-int(tmax / h), int(tmax / h) + 1)
    t = k * h
    u = np.pi * np.sinh(t)
    logx = -np.logaddexp(0.0, -u)
    logxc = -np.logaddexp(0.0, u)
    logw = logx + logxc + np.log(np.pi * np.cosh(t)) + math.log(h)
    return logx, logxc, np.exp(logx), np.exp(logxc), logw


def gamma1_double(a1, a2, a3, tol=1e-8, max_level: int = 7) -> QuadResult:
    """int_{Gamma_1} (xi+eta-1)^(a1-1) xi^(a2-1) eta^(a3-1) d xi d eta.

    With xi = (1-s)/(1-st), eta = (1-t)/(1-st) this becomes
    int_0^1 int_0^1 (1-s)^(A-1) (1-t)^(B-1) (1-st)^(-C) ds dt,
    A = a1+a2, B = a1+a3, C = a1+a2+a3.  The corner s = t = 1 is resolved by
    u = 1-s, v = 1-t and the fold u = tau v (and its mirror):

        int_0^1 int_0^1 (tau^(A-1) + tau^(B-1)) w^(a1-1) (1 + tau (1-w))^(-C) d tau dw,

    which a product tanh-sinh rule integrates to double precision.
    """
    a1, a2, a3 = float(a1), float(a2), float(a3)
    A, B, C = a1 + a2, a1 + a3, a1 + a2 + a3
    if not (a1 > 0 and A > 0 and B > 0):
        raise NonConvergent(f"need a1 > 0, a1+a2 > 0, a1+a3 > 0; got ({a1}, {a2}, {a3})")
    tol = float(tol)
    decay = max(min(A, B, a1, 1.0), 1e-3)
    tmax = math.log(2 * 40 / (math.pi * decay))
    prev = None
    evaluations = 0
    for level in range(2, max_level + 1):
        lt, ltc, tau, tauc, lwt = _nodes(level, tmax)
        lw, lwc, w, wc, lww = _nodes(level, tmax)
        inner = np.exp((A - 1) * lt + lwt) + np.exp((B - 1) * lt + lwt)
        outer = np.exp((a1 - 1) * lw + lww)
        kernel = np.exp(-C * np.log1p(np.outer(tau, wc)))
        value = float(inner @ kernel @ outer)
        evaluations += kernel.size
        if prev is not None:
            err = abs(value - prev)
            if err <= tol * abs(value):
                return QuadResult(value, err, evaluations)
        prev = value
    raise ToleranceNotMet(f"product rule did not reach tol {tol:g} (error {err:.3g})", value, err)
