"""Multi-route evaluation of the registry identities.

Routes:
  A  prefactor * 3F2 series at 1 (Levin-u)
  B  boundary integrals by tanh-sinh (Pochhammer contour when an exponent is
     <= -1) plus the exceptional-divisor term as a (0, oo) integral
  C  exact closed form (log combination) evaluated in ball arithmetic
  D  scale * Gamma_1 double integral (product tanh-sinh)
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from ..errors import (
    Fermat3F2Error,
    IntegerAlpha,
    NonConvergent,
    TrigPole,
    VerificationFailed,
)
from ..numerics import IntegrandSpec, f32_at_1, gamma1_double, poch_contour, quad_1d, to_mpc, to_mpf
from ..symbolic.constants import AlgExpr, as_expr, mul, radical, unity
from ..symbolic.integrals import TRIG_KINDS, closed_form_integral, digamma_difference, trig_correction
from ..symbolic.logcomb import LogCombination, eval_logcomb
from .registry import ROOTS_4V4_PLUS_1, ROOTS_V2_PLUS_1, ROOTS_V3_PLUS_1, Identity, lookup

__all__ = [
    "Validity",
    "VerificationRecord",
    "validity",
    "verify",
    "closed_form",
    "permutation_reduction",
    "calibrate",
    "sample_parameters",
    "route_series",
    "route_boundary",
    "route_closed",
    "route_double",
    "trig_integrand",
    "DOUBLE_FLOOR",
]

# the double integral runs in float64: residuals against it are judged at
# no tighter than this
DOUBLE_FLOOR = 1e-9


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _params(ident: Identity, alpha, beta):
    if ident.id == "P14":
        t = tuple(_q(x) for x in alpha)
        if len(t) != 3:
            raise ValueError("P14 takes a triple (a1, a2, a3)")
        return t, None
    a = _q(alpha)
    if len(ident.params) == 2:
        if beta is None:
            raise ValueError(f"{ident.id} needs beta")
        return a, _q(beta)
    return a, None


def _p14_parts(t):
    a1, a2, a3 = t
    return (a1 + a2 + a3, a1 + a2 + 1, a1 + a3 + 1), 1 / ((a1 + a2) * (a1 + a3))


# --- validity ---------------------------------------------------------------------


@dataclass
class Validity:
    valid: bool
    routes: dict
    reasons: list

    def __bool__(self) -> bool:
        return self.valid


def _series_ok(p3, p4, p5):
    if any(p <= 0 and p.denominator == 1 for p in (p4, p5)):
        return False, "a lower 3F2 parameter is a non-positive integer"
    if p4 + p5 - p3 - 2 <= 0:
        return False, f"series diverges at 1 (p4+p5-p3-2 = {p4 + p5 - p3 - 2})"
    return True, ""


def _prefactor_or_none(ident: Identity, a, b):
    try:
        pref = ident.prefactor(a, b)
    except ZeroDivisionError:
        return None
    return pref or None


def validity(identity_id: str, alpha, beta=None) -> Validity:
    """Whether (alpha, beta) lies in the identity's convergence box and meets
    its non-integrality conditions, plus which routes can be evaluated."""
    ident = lookup(identity_id)
    a, b = _params(ident, alpha, beta)
    reasons = []
    if ident.id == "P14":
        a1, a2, a3 = a
        box = a1 > 0 and a1 + a2 > 0 and a1 + a3 > 0
        if not box:
            reasons.append("need a1 > 0, a1+a2 > 0, a1+a3 > 0")
        fp, _ = _p14_parts(a) if (a1 + a2) * (a1 + a3) != 0 else ((0, 0, 0), 0)
        ok, why = _series_ok(*fp) if box else (False, "outside convergence region")
        if why and box:
            reasons.append(why)
        return Validity(box, {"A": ok, "D": box}, reasons)

    in_box = bool(ident.box(a, b))
    if not in_box:
        reasons.append(f"outside the convergence box ({ident.box_text})")
    bad = [x for x in ident.nonintegral(a, b) if x.denominator == 1]
    nonint = not bad
    if not nonint:
        reasons.append(f"non-integrality fails ({ident.nonintegral_text})")

    pref = _prefactor_or_none(ident, a, b)
    if pref is None:
        series, why = False, "prefactor has a pole or vanishes"
    else:
        series, why = _series_ok(*ident.f_params(a, b))
    if why:
        reasons.append(why)

    integrable = all(t.lowest_power(a, b) > -1 for t in ident.boundary)
    regularisable = True
    for t in ident.boundary:
        e = t.lowest_power(a, b)
        if e <= -1 and e.denominator == 1:
            regularisable = False
            reasons.append(f"boundary exponent {e} is an integer <= -1")
    trig_ok = True
    if ident.trig is not None:
        try:
            trig_correction(ident.trig.kind, a)
        except TrigPole as exc:
            trig_ok = False
            reasons.append(str(exc))
    boundary_ok = trig_ok and (integrable or (regularisable and nonint))
    closed_ok = trig_ok and regularisable and (integrable or nonint)
    scale, triple = ident.gamma1(a, b)
    a1, a2, a3 = triple
    double_ok = in_box and scale != 0 and a1 > 0 and a1 + a2 > 0 and a1 + a3 > 0
    routes = {"A": series, "B": boundary_ok, "C": closed_ok, "D": double_ok}
    if ident.stokes:
        return Validity(in_box, routes, reasons)
    return Validity(in_box and nonint, routes, reasons)


# --- routes --------------------------------------------------------------------------


def route_series(ident: Identity, a, b, precision=30, tol=1e-9):
    """prefactor * F(1, 1, p3; p4, p5; 1) -> (value, error)."""
    if ident.id == "P14":
        fp, pref = _p14_parts(a)
    else:
        fp, pref = ident.f_params(a, b), ident.prefactor(a, b)
    r = f32_at_1(*fp, tol=tol, precision=precision)
    with mp.workdps(precision + 10):
        pref = to_mpf(pref)
        return pref * r.value, abs(pref) * r.error


def _spec(t, a, b) -> IntegrandSpec:
    powers = t.powers(a, b) if t.powers else ()
    return IntegrandSpec(t.exponent(a, b), t.numerator, t.roots, t.leading_at(a, b), powers, "01",
                         t.effective_sign * t.scale)


def trig_integrand(kind: str, a) -> IntegrandSpec:
    """(0, oo) integral whose value is the exceptional-divisor term ``kind``."""
    a = _q(a)
    if kind == "cos_2m_shift":
        kind, a = "cos_2m", a - Fraction(1, 2)
    if kind == "cos_2m":
        return IntegrandSpec(2 * a, (1,), ROOTS_V2_PLUS_1, 1, (), "0inf", mul(2, radical(4, a)))
    if kind in ("sin_3m_g2", "sin_3m_g3"):
        e = 3 * a if kind == "sin_3m_g2" else 3 * a + 1
        return IntegrandSpec(e, (1,), ROOTS_V3_PLUS_1, 1, (), "0inf", mul(3, radical(27, a)))
    if kind == "sin_4m_g2":
        return IntegrandSpec(4 * a, (1,), ROOTS_4V4_PLUS_1, 4, (), "0inf", radical(4, 4 * a))
    if kind == "cos_4m_g3":
        return IntegrandSpec(4 * a + 2, (1,), ROOTS_4V4_PLUS_1, 4, (), "0inf", mul(2, radical(4, 4 * a)))
    raise ValueError(f"unknown trig kind {kind!r}")


def route_boundary(ident: Identity, a, b, precision=30, tol=1e-9):
    """Boundary integrals by quadrature plus the exceptional-divisor term.

    Returns (value, error, notes)."""
    notes = []
    total, err = mp.mpf(0), mp.mpf(0)
    with mp.workdps(precision + 10):
        for t in ident.boundary:
            spec = _spec(t, a, b)
            if t.lowest_power(a, b) > -1:
                r = quad_1d(spec, tol, precision)
            else:
                r = poch_contour(0, spec, tol=tol, precision=precision)
                notes.append(f"Pochhammer contour for {t.text}")
            total += r.value
            err += r.error
        if ident.trig is not None:
            kind = ident.trig.kind
            try:
                r = quad_1d(trig_integrand(kind, a), tol, precision)
                total += ident.trig.effective_sign * r.value
                err += r.error
            except ValueError:
                # the (0, oo) integral diverges here; use the closed form
                v = eval_logcomb(trig_correction(kind, a), precision).mpc(precision + 10)
                total += ident.trig.effective_sign * v.real
                notes.append(f"{kind} taken in closed form (its integral diverges at a = {a})")
        return total, err, notes


def _closed_term(t, a, b) -> LogCombination:
    if t.powers:
        # digamma shape: c (x^(E+e1) - x^(E+e2)) / (lead (x - 1))
        (c, e1), (c2, e2) = t.powers(a, b)
        if c + c2 != 0 or len(t.roots) != 1 or t.numerator != (1,):
            raise ValueError("unsupported power-sum boundary term")
        E = t.exponent(a, b)
        lead = Fraction(t.leading_at(a, b))
        # int (x^(p-1) - x^(q-1))/(1 - x) = psi(q) - psi(p)
        return digamma_difference(E + e2 + 1, E + e1 + 1).scale(as_expr(-Fraction(c) / lead))
    regularize = t.lowest_power(a, b) <= -1
    return closed_form_integral(t.exponent(a, b), t.numerator, t.roots, t.leading, regularize=regularize)


def boundary_closed_form(ident: Identity, a, b) -> LogCombination:
    """Exact right-hand side (boundary integrals plus trig term)."""
    total = LogCombination()
    for t in ident.boundary:
        total = total + _closed_term(t, a, b).scale(as_expr(t.effective_sign * t.scale))
    if ident.trig is not None:
        total = total + trig_correction(ident.trig.kind, a).scale(as_expr(ident.trig.effective_sign))
    return total


def route_closed(ident: Identity, a, b, precision=30):
    """Exact right-hand side evaluated in ball arithmetic -> (value, radius, LogCombination)."""
    L = boundary_closed_form(ident, a, b)
    ball = eval_logcomb(L, precision)
    with mp.workdps(precision + 10):
        v = ball.mpc(precision + 10)
        return v.real, mp.mpf(ball.radius), L


def route_double(ident: Identity, a, b, tol=1e-10):
    if ident.id == "P14":
        scale, triple = 1, a
    else:
        scale, triple = ident.gamma1(a, b)
    r = gamma1_double(*triple, tol=tol)
    return mp.mpf(float(scale)) * r.value, abs(float(scale)) * r.error


# --- closed form of F ----------------------------------------------------------------


def closed_form(identity_id: str, alpha, beta=None) -> LogCombination:
    """F(1, 1, p3; p4, p5; 1) at the identity's parameters as an exact log
    combination: the boundary closed form divided by the prefactor."""
    ident = lookup(identity_id)
    if ident.id == "P14":
        raise ValueError("P14 has no boundary side")
    a, b = _params(ident, alpha, beta)
    v = validity(identity_id, a, b)
    pref = _prefactor_or_none(ident, a, b)
    if not v.routes["C"] or pref is None:
        raise NonConvergent(f"{identity_id} has no closed form at {a}, {b}: {'; '.join(v.reasons)}")
    return boundary_closed_form(ident, a, b).scale(as_expr(1 / pref))


# --- permutations ----------------------------------------------------------------------


def permutation_reduction(region: str, triple):
    """Rewrite a Gamma_2 / Gamma_3 integral as a Gamma_1 integral.

    Returns ("Gamma1", permuted triple, phase) with int_{region} = phase * int_{Gamma_1}.
    """
    a1, a2, a3 = (_q(x) for x in triple)
    if region in ("Gamma1", "G1", "1"):
        return "Gamma1", (a1, a2, a3), as_expr(1)
    if region in ("Gamma2", "G2", "2"):
        return "Gamma1", (a3, a1, a2), unity((a1 + a3) / 2)
    if region in ("Gamma3", "G3", "3"):
        return "Gamma1", (a2, a3, a1), unity((a1 + a2) / 2)
    raise ValueError(f"unknown region {region!r}")


# --- verification ----------------------------------------------------------------------


@dataclass
class VerificationRecord:
    identity_id: str
    parameters: dict
    routes: dict  # name -> {"value", "error"}
    residuals: dict  # "A-B" -> relative residual
    thresholds: dict
    orientation: list
    tolerance: float
    precision: int
    notes: list = field(default_factory=list)
    closed_form: str | None = None

    @property
    def passed(self) -> bool:
        return all(self.residuals[k] <= self.thresholds[k] for k in self.residuals)

    def to_dict(self, digits: int | None = None) -> dict:
        digits = digits or min(self.precision, 40)
        fmt = lambda x: mp.nstr(x, digits, min_fixed=-mp.inf, max_fixed=mp.inf) if x is not None else None
        return {
            "identity": self.identity_id,
            "parameters": {k: str(v) for k, v in self.parameters.items()},
            "routes": {k: {"value": fmt(v["value"]), "error": mp.nstr(v["error"], 3)} for k, v in self.routes.items()},
            "residuals": {k: mp.nstr(v, 3) for k, v in self.residuals.items()},
            "orientation": list(self.orientation),
            "precision": self.precision,
            "tolerance": self.tolerance,
            "notes": list(self.notes),
            "status": "PASS" if self.passed else "FAIL",
        }


def _rel(x, y):
    scale = max(abs(x), abs(y))
    return abs(x - y) / scale if scale else mp.mpf(0)


def verify(identity_id: str, alpha, beta=None, precision: int = 30, tolerance=1e-8,
           routes=None, strict: bool = False) -> VerificationRecord:
    """Evaluate every admissible route and compare them pairwise.

    ``routes`` restricts the set (default: all admissible among A, B, C, D).
    With ``strict`` a failing record raises :class:`VerificationFailed`.
    """
    ident = lookup(identity_id)
    a, b = _params(ident, alpha, beta)
    v = validity(identity_id, a, b)
    wanted = [r for r in (routes or ("A", "B", "C", "D")) if v.routes.get(r)]
    if len(wanted) < 2:
        raise NonConvergent(
            f"{identity_id} at {alpha}{'' if beta is None else ', ' + str(beta)}: fewer than two routes"
            f" admissible ({'; '.join(v.reasons) or 'no route'})"
        )
    params = {"a1": a[0], "a2": a[1], "a3": a[2]} if ident.id == "P14" else {"alpha": a}
    if b is not None:
        params["beta"] = b
    tol = to_mpf(tolerance) / 10
    values, notes = {}, list(v.reasons)
    cf_text = None
    with mp.workdps(precision + 10):
        if "A" in wanted:
            val, err = route_series(ident, a, b, precision, tol)
            values["A"] = {"value": val, "error": err}
        if "B" in wanted:
            val, err, extra = route_boundary(ident, a, b, precision, tol)
            values["B"] = {"value": val, "error": err}
            notes.extend(extra)
        if "C" in wanted:
            val, err, L = route_closed(ident, a, b, precision)
            values["C"] = {"value": val, "error": err}
            pref = _prefactor_or_none(ident, a, b)
            cf_text = None if pref is None else str(L.scale(as_expr(1 / pref)))
        if "D" in wanted:
            val, err = route_double(ident, a, b, tol=1e-11)
            values["D"] = {"value": val, "error": err}
            notes.append("route D runs in double precision")
        residuals, thresholds = {}, {}
        for x, y in itertools.combinations(sorted(values), 2):
            key = f"{x}-{y}"
            residuals[key] = _rel(values[x]["value"], values[y]["value"])
            thresholds[key] = max(float(tolerance), DOUBLE_FLOOR) if "D" in (x, y) else float(tolerance)
    record = VerificationRecord(identity_id, params, values, residuals, thresholds,
                                ident.corrections, float(tolerance), precision, notes, cf_text)
    if strict and not record.passed:
        raise VerificationFailed(record)
    return record


# --- orientation calibration ------------------------------------------------------------

CALIBRATION_POINTS = {
    "G1-m": (Fraction(1, 3), Fraction(1, 5)),
    "S1-m": (Fraction(1, 3), Fraction(1, 5)),
    "G1-2m": (Fraction(1, 4), None),
    "S1-2m": (Fraction(1, 4), None),
    "G1-3m": (Fraction(1, 5), None),
    "S1-3m": (Fraction(1, 5), None),
    "G1-4m": (Fraction(1, 5), None),
    "S1-4m": (Fraction(1, 5), None),
    "G2-2m-a": (Fraction(1, 10), None),
    "G2-2m-b": (Fraction(3, 5), None),
    "G2-3m": (Fraction(1, 5), None),
    "G2-4m": (Fraction(1, 5), None),
    "G3-3m": (Fraction(1, 10), None),
    "G3-4m": (Fraction(-1, 20), None),
    "EX0": (Fraction(1, 5), Fraction(2, 7)),
}


@dataclass
class Calibration:
    identity_id: str
    boundary_flags: tuple
    trig_flag: int | None
    unique: bool
    matches: int


def calibrate(identity_id: str, alpha=None, beta=None, precision: int = 30) -> Calibration:
    """Find the per-term signs (relative to the ones in the statement) for which the
    boundary side equals the series side; report whether they are unique."""
    ident = lookup(identity_id)
    if ident.id == "P14":
        return Calibration(identity_id, (), None, True, 1)
    if alpha is None:
        alpha, beta = CALIBRATION_POINTS[identity_id]
    a, b = _params(ident, alpha, beta)
    with mp.workdps(precision + 10):
        target, _ = route_series(ident, a, b, precision, mp.mpf(10) ** (-precision + 5))
        parts = []
        for t in ident.boundary:
            spec = _spec(t, a, b)
            raw = quad_1d(spec, mp.mpf(10) ** (-precision + 5), precision).value
            parts.append(raw * t.flag)  # undo the stored flag: statement sign only
        if ident.trig is not None:
            raw = quad_1d(trig_integrand(ident.trig.kind, a), mp.mpf(10) ** (-precision + 5), precision).value
            parts.append(raw * ident.trig.sign)
        hits = []
        for signs in itertools.product((1, -1), repeat=len(parts)):
            if _rel(sum(s * p for s, p in zip(signs, parts)), target) < mp.mpf(10) ** (-precision + 10):
                hits.append(signs)
    if not hits:
        return Calibration(identity_id, (), None, False, 0)
    best = hits[0]
    nb = len(ident.boundary)
    return Calibration(identity_id, tuple(best[:nb]), best[nb] if ident.trig else None, len(hits) == 1, len(hits))


# --- sampling -----------------------------------------------------------------------------

SAMPLING_WINDOWS = {
    "G1-m": ((-0.9, 0.9), (-0.8, 1.5)),
    "S1-m": ((-0.9, 0.9), (-0.8, 1.5)),
    "G1-2m": ((0.1, 1.2),),
    "S1-2m": ((0.1, 1.2),),
    "G1-3m": ((0.07, 1.0),),
    "S1-3m": ((0.07, 1.0),),
    "G1-4m": ((0.05, 1.0),),
    "S1-4m": ((0.05, 1.0),),
    "G2-2m-a": ((0.0, 0.25),),
    "G2-2m-b": ((0.5, 0.75),),
    "G2-3m": ((-1 / 3, 0.5),),
    "G2-4m": ((-0.25, 0.5),),
    "G3-3m": ((-1 / 6, 1 / 3),),
    "G3-4m": ((-1 / 12, 0.25),),
    "EX0": ((-0.9, 0.8), (-1.5, 1.5)),
    "P14": ((0.05, 1.5), (-0.5, 1.0), (-0.5, 1.0)),
}


def _excess(ident: Identity, a, b) -> Fraction:
    if ident.id == "P14":
        fp, _ = _p14_parts(a)
    else:
        fp = ident.f_params(a, b)
    return fp[1] + fp[2] - fp[0] - 2


def sample_parameters(identity_id: str, count: int = 5, seed: int = 0, max_denominator: int = 60,
                      min_excess: float = 0.2, need_routes=("A", "B", "C")) -> list:
    """Seeded rational parameters inside the validity box with series excess
    p4+p5-p3-2 >= ``min_excess``; every listed route must be admissible."""
    ident = lookup(identity_id)
    rng = random.Random(f"{identity_id}:{seed}")
    windows = SAMPLING_WINDOWS[identity_id]
    out, seen = [], set()

    def draw(lo, hi):
        q = rng.randint(2, max_denominator)
        p = rng.randint(int(lo * q) - 1, int(hi * q) + 1)
        return Fraction(p, q)

    for _ in range(20000):
        vals = tuple(draw(lo, hi) for lo, hi in windows)
        if not all(lo < float(x) < hi for x, (lo, hi) in zip(vals, windows)) or vals in seen:
            continue
        seen.add(vals)
        if ident.id == "P14":
            a, b = vals, None
        else:
            a, b = vals[0], (vals[1] if len(vals) > 1 else None)
        try:
            v = validity(identity_id, a, b)
            if not v.valid or _excess(ident, a, b) < Fraction(min_excess).limit_denominator(1000):
                continue
        except (Fermat3F2Error, ZeroDivisionError):
            continue
        if ident.id != "P14" and not all(v.routes.get(r) for r in need_routes):
            continue
        out.append(vals if ident.id == "P14" else (a, b))
        if len(out) == count:
            return out
    raise RuntimeError(f"could not draw {count} parameters for {identity_id}")
