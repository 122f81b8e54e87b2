"""Machine-readable table of the hypergeometric identities.

Every hypergeometric identity reads

    prefactor(a, b) * F(1, 1, p3; p4, p5; 1)
        = scale * int_{Gamma_1} (xi+eta-1)^(a1-1) xi^(a2-1) eta^(a3-1)
        = sum_k sign_k * flag_k * int_P(0,1) x^(e_k) N_k(x)/D_k(x) dx
          + sign_t * flag_t * (exceptional-divisor term).

``sign`` is the sign as written in the statement and ``flag`` the
orientation correction fixed once by comparing against the series (see
:func:`calibrate`); the product is what is evaluated.  Stokes forms have
the double integral on the left; P14 has no boundary side.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..errors import UnknownIdentity
from ..symbolic.constants import RadicalMonomial

__all__ = [
    "BoundaryTerm",
    "TrigTerm",
    "Identity",
    "registry",
    "lookup",
    "IDENTITY_IDS",
    "HGF_IDS",
    "STOKES_IDS",
]

H = Fraction(1, 2)


def _ring(count: int, step: int, offset: int, modulus_radicals=None, denom=None):
    """Roots r * e((step*j + offset)/denom), j < count, simple."""
    denom = denom or count * step
    return tuple(
        (RadicalMonomial.make(1, Fraction(step * j + offset, denom), modulus_radicals), 1) for j in range(count)
    )


def _real_root(value) -> tuple:
    return ((RadicalMonomial.make(Fraction(value)), 1),)


ROOTS_1_PLUS_X = _real_root(-1)
ROOTS_2_MINUS_X = _real_root(2)
ROOTS_1_MINUS_X = _real_root(1)
# 27 + x^6: sqrt3 e((2j+1)/12)
ROOTS_27_PLUS_X6 = _ring(6, 2, 1, {3: H}, 12)
# 1 + 27 x^6 (leading 27): 3^(-1/2) e((2j+1)/12)
ROOTS_1_PLUS_27X6 = _ring(6, 2, 1, {3: -H}, 12)
# 64 - x^12 (leading -1): sqrt2 e(j/12)
ROOTS_64_MINUS_X12 = _ring(12, 1, 0, {2: H}, 12)
# 64 + x^12: sqrt2 e((2j+1)/24)
ROOTS_64_PLUS_X12 = _ring(12, 2, 1, {2: H}, 24)
# 64 x^8 + 1 (leading 64): 2^(-3/4) e((2j+1)/16)
ROOTS_64X8_PLUS_1 = _ring(8, 2, 1, {2: Fraction(-3, 4)}, 16)
# 2x^2 - 2x + 1 (leading 2): e(+-1/8)/sqrt2
ROOTS_2X2_2X_1 = (
    (RadicalMonomial.make(1, Fraction(1, 8), {2: -H}), 1),
    (RadicalMonomial.make(1, Fraction(7, 8), {2: -H}), 1),
)
# (0, oo) denominators of the exceptional-divisor integrals
ROOTS_V2_PLUS_1 = _ring(2, 2, 1, None, 4)
ROOTS_V3_PLUS_1 = _ring(3, 2, 1, None, 6)
ROOTS_4V4_PLUS_1 = _ring(4, 2, 1, {2: -H}, 8)


def _poly(**coeffs) -> tuple:
    """_poly(c0=.., c4=..) -> dense coefficient tuple."""
    deg = max(int(k[1:]) for k in coeffs)
    out = [0] * (deg + 1)
    for k, v in coeffs.items():
        out[int(k[1:])] = v
    return tuple(out)


@dataclass(frozen=True)
class BoundaryTerm:
    """sign * flag * scale * int_P(0,1) x^exponent(a,b) [powers] N(x) / (leading * prod (x - r)) dx.

    ``powers`` (optional) returns ((c_k, e_k), ...): the integrand then
    carries sum_k c_k x^(e_k); with a root at 1 this is the digamma shape.
    """

    text: str
    exponent: Callable
    numerator: tuple
    roots: tuple
    leading: object = 1
    sign: int = 1
    flag: int = 1
    scale: Fraction = Fraction(1)
    powers: Callable | None = None

    @property
    def effective_sign(self) -> int:
        return self.sign * self.flag

    def lowest_power(self, a, b) -> Fraction:
        low = next(k for k, c in enumerate(self.numerator) if c != 0)
        extra = min((e for _, e in self.powers(a, b)), default=0) if self.powers else 0
        return self.exponent(a, b) + low + extra

    def leading_at(self, a, b):
        return self.leading(a, b) if callable(self.leading) else self.leading


@dataclass(frozen=True)
class TrigTerm:
    """sign * flag * (closed-form exceptional-divisor term of the given kind),
    evaluated at the kind's own argument ``arg(a)``."""

    kind: str
    sign: int = 1
    flag: int = 1
    arg: Callable = staticmethod(lambda a: a)

    @property
    def effective_sign(self) -> int:
        return self.sign * self.flag


@dataclass(frozen=True)
class Identity:
    id: str
    params: tuple
    statement: str
    citation: str
    prefactor: Callable | None
    f_params: Callable | None
    gamma1: Callable | None
    boundary: tuple = ()
    trig: TrigTerm | None = None
    box: Callable = staticmethod(lambda a, b: True)
    box_text: str = ""
    nonintegral: Callable = staticmethod(lambda a, b: ())
    nonintegral_text: str = ""
    stokes: bool = False
    notes: tuple = field(default_factory=tuple)

    @property
    def corrections(self) -> list[str]:
        """Terms whose evaluated sign differs from the one in the statement."""
        out = [f"{self.id}: boundary term {t.text!r} sign flipped" for t in self.boundary if t.flag == -1]
        if self.trig is not None and self.trig.flag == -1:
            out.append(f"{self.id}: exceptional-divisor term {self.trig.kind} sign flipped")
        return out


def _mk_registry() -> dict:
    reg = {}

    def add(ident: Identity):
        reg[ident.id] = ident

    # --- X_m, Gamma_1 (two parameters) ----------------------------------------
    g1m_terms = (
        BoundaryTerm("x^(b-a)/(1+x)", lambda a, b: b - a, (1,), ROOTS_1_PLUS_X, sign=1),
        BoundaryTerm("x^(b+a)/(1+x)", lambda a, b: b + a, (1,), ROOTS_1_PLUS_X, sign=-1),
    )
    add(Identity(
        "G1-m", ("alpha", "beta"),
        "a/((b-a+1)(b+a+1)) F(1,1,b+1;b-a+2,b+a+2;1) = int_P(0,1) (x^(b-a) - x^(b+a))/(1+x) dx",
        "Gamma_1 boundary identity on X_m (analytic continuation of the Stokes form)",
        prefactor=lambda a, b: a / ((b - a + 1) * (b + a + 1)),
        f_params=lambda a, b: (b + 1, b - a + 2, b + a + 2),
        gamma1=lambda a, b: (a, (b + 1, -a, a)),
        boundary=g1m_terms,
        box=lambda a, b: b > -1 + abs(a), box_text="-1+|a| < b",
        nonintegral=lambda a, b: (a,), nonintegral_text="a not in Z",
    ))
    add(Identity(
        "S1-m", ("alpha", "beta"),
        "a int_G1 (xi+eta-1)^b xi^(-a-1) eta^(a-1) = -int_0^1 y^(b+a)/(1+y) dy + int_0^1 x^(b-a)/(1+x) dx",
        "Stokes' theorem on the blown-up X_m, Gamma_1",
        prefactor=lambda a, b: a / ((b - a + 1) * (b + a + 1)),
        f_params=lambda a, b: (b + 1, b - a + 2, b + a + 2),
        gamma1=lambda a, b: (a, (b + 1, -a, a)),
        boundary=(
            BoundaryTerm("y^(b+a)/(1+y)", lambda a, b: b + a, (1,), ROOTS_1_PLUS_X, sign=-1),
            BoundaryTerm("x^(b-a)/(1+x)", lambda a, b: b - a, (1,), ROOTS_1_PLUS_X, sign=1),
        ),
        box=lambda a, b: b > -1 + abs(a), box_text="-1+|a| < b",
        stokes=True,
    ))

    # --- X_2m, X_3m, X_4m, Gamma_1 -----------------------------------------------
    g12 = (BoundaryTerm("2x^(2a-1)/(2-x)", lambda a, b: 2 * a - 1, (2,), ROOTS_2_MINUS_X, leading=-1),)
    add(Identity(
        "G1-2m", ("alpha",),
        "1/(a+1/2) F(1,1,1/2;a+1,a+3/2;1) = 2 int_P(0,1) x^(2a-1)/(2-x) dx",
        "Gamma_1 boundary identity on X_2m",
        prefactor=lambda a, b: 1 / (a + H),
        f_params=lambda a, b: (H, a + 1, a + Fraction(3, 2)),
        gamma1=lambda a, b: (a, (2 * a, -a, H - a)),
        boundary=g12,
        box=lambda a, b: a > 0, box_text="0 < a",
        nonintegral=lambda a, b: (2 * a,), nonintegral_text="2a not in Z",
    ))
    add(Identity(
        "S1-2m", ("alpha",),
        "a int_G1 (xi+eta-1)^(2a-1) xi^(-a-1) eta^(-a-1/2) = 2 int_0^1 x^(2a-1)/(2-x) dx",
        "Stokes' theorem on the blown-up X_2m, Gamma_1",
        prefactor=lambda a, b: 1 / (a + H),
        f_params=lambda a, b: (H, a + 1, a + Fraction(3, 2)),
        gamma1=lambda a, b: (a, (2 * a, -a, H - a)),
        boundary=g12,
        box=lambda a, b: a > 0, box_text="0 < a",
        stokes=True,
    ))

    add(Identity(
        "G1-3m", ("alpha",),
        "a/((6a+1)(2a+2/3)) F(1,1,a+1;2a+4/3,2a+5/3;1)"
        " = int_P(0,1) y^(6a+1)(3+y^3)/(27+y^6) dy + int_P(0,1) x^(6a)(9+x^3)/(27+x^6) dx",
        "Gamma_1 boundary identity on X_3m",
        prefactor=lambda a, b: a / ((6 * a + 1) * (2 * a + Fraction(2, 3))),
        f_params=lambda a, b: (a + 1, 2 * a + Fraction(4, 3), 2 * a + Fraction(5, 3)),
        gamma1=lambda a, b: (a / 3, (3 * a, Fraction(1, 3) - a, Fraction(2, 3) - a)),
        boundary=(
            BoundaryTerm("y^(6a+1)(3+y^3)/(27+y^6)", lambda a, b: 6 * a + 1, _poly(c0=3, c3=1), ROOTS_27_PLUS_X6),
            BoundaryTerm("x^(6a)(9+x^3)/(27+x^6)", lambda a, b: 6 * a, _poly(c0=9, c3=1), ROOTS_27_PLUS_X6),
        ),
        box=lambda a, b: a > 0, box_text="0 < a",
        nonintegral=lambda a, b: (3 * a,), nonintegral_text="3a not in Z",
    ))
    add(Identity(
        "S1-3m", ("alpha",),
        "a int_G1 (xi+eta-1)^(3a-1) xi^(-a-2/3) eta^(-a-1/3)"
        " = 3 int_0^1 y^(6a) y(3+y^3)/(27+y^6) dy + 3 int_0^1 x^(6a)(9+x^3)/(27+x^6) dx",
        "Stokes' theorem on the blown-up X_3m, Gamma_1",
        prefactor=lambda a, b: 3 * a / ((6 * a + 1) * (2 * a + Fraction(2, 3))),
        f_params=lambda a, b: (a + 1, 2 * a + Fraction(4, 3), 2 * a + Fraction(5, 3)),
        gamma1=lambda a, b: (a, (3 * a, Fraction(1, 3) - a, Fraction(2, 3) - a)),
        boundary=(
            BoundaryTerm("3y^(6a) y(3+y^3)/(27+y^6)", lambda a, b: 6 * a, _poly(c1=3, c4=1), ROOTS_27_PLUS_X6,
                         scale=Fraction(3)),
            BoundaryTerm("3x^(6a)(9+x^3)/(27+x^6)", lambda a, b: 6 * a, _poly(c0=9, c3=1), ROOTS_27_PLUS_X6,
                         scale=Fraction(3)),
        ),
        box=lambda a, b: a > 0, box_text="0 < a",
        stokes=True,
    ))

    add(Identity(
        "G1-4m", ("alpha",),
        "4a/((12a+1)(3a+3/4)) F(1,1,2a+1;3a+5/4,3a+7/4;1)"
        " = int_P(0,1) y^(12a) 2y^2(8-4y^4-y^8)/(64-y^12) dy + int_P(0,1) x^(12a) 2(8x^4+32-x^8)/(64-x^12) dx",
        "Gamma_1 boundary identity on X_4m",
        prefactor=lambda a, b: 4 * a / ((12 * a + 1) * (3 * a + Fraction(3, 4))),
        f_params=lambda a, b: (2 * a + 1, 3 * a + Fraction(5, 4), 3 * a + Fraction(7, 4)),
        gamma1=lambda a, b: (a, (4 * a, Fraction(1, 4) - a, Fraction(3, 4) - a)),
        boundary=(
            BoundaryTerm("y^(12a) 2y^2(8-4y^4-y^8)/(64-y^12)", lambda a, b: 12 * a,
                         _poly(c2=16, c6=-8, c10=-2), ROOTS_64_MINUS_X12, leading=-1),
            BoundaryTerm("x^(12a) 2(8x^4+32-x^8)/(64-x^12)", lambda a, b: 12 * a,
                         _poly(c0=64, c4=16, c8=-2), ROOTS_64_MINUS_X12, leading=-1),
        ),
        box=lambda a, b: a > 0, box_text="0 < a",
        nonintegral=lambda a, b: (4 * a,), nonintegral_text="4a not in Z",
    ))
    add(Identity(
        "S1-4m", ("alpha",),
        "a int_G1 (xi+eta-1)^(4a-1) xi^(-a-3/4) eta^(-a-1/4)"
        " = 2 int_0^1 y^(12a) y^2(-8+4y^4+y^8)/(64-y^12) dy + 2 int_0^1 x^(12a)(-8x^4-32+x^8)/(64-x^12) dx",
        "Stokes' theorem on the blown-up X_4m, Gamma_1",
        prefactor=lambda a, b: 4 * a / ((12 * a + 1) * (3 * a + Fraction(3, 4))),
        f_params=lambda a, b: (2 * a + 1, 3 * a + Fraction(5, 4), 3 * a + Fraction(7, 4)),
        gamma1=lambda a, b: (a, (4 * a, Fraction(1, 4) - a, Fraction(3, 4) - a)),
        boundary=(
            BoundaryTerm("2y^(12a) y^2(-8+4y^4+y^8)/(64-y^12)", lambda a, b: 12 * a,
                         _poly(c2=-8, c6=4, c10=1), ROOTS_64_MINUS_X12, leading=-1, scale=Fraction(2), flag=-1),
            BoundaryTerm("2x^(12a)(-8x^4-32+x^8)/(64-x^12)", lambda a, b: 12 * a,
                         _poly(c0=-32, c4=-8, c8=1), ROOTS_64_MINUS_X12, leading=-1, scale=Fraction(2), flag=-1),
        ),
        box=lambda a, b: a > 0, box_text="0 < a",
        stokes=True,
        notes=("both boundary signs in the statement disagree with the double integral; flipped by calibration",),
    ))

    # --- Gamma_2 ------------------------------------------------------------------
    add(Identity(
        "G2-2m-a", ("alpha",),
        "a/((a+1/2)(1/2-2a)) F(1,1,1/2;a+3/2,3/2-2a;1)"
        " = int_P(0,1) 2x^(-4a)/(2x^2-2x+1) dx + 4^a pi/cos(pi a)",
        "Gamma_2 boundary identity on X_2m (with exceptional-divisor term)",
        prefactor=lambda a, b: a / ((a + H) * (H - 2 * a)),
        f_params=lambda a, b: (H, a + Fraction(3, 2), Fraction(3, 2) - 2 * a),
        gamma1=lambda a, b: (a, (H - a, 2 * a, -a)),
        boundary=(BoundaryTerm("2x^(-4a)/(2x^2-2x+1)", lambda a, b: -4 * a, (2,), ROOTS_2X2_2X_1, leading=2),),
        trig=TrigTerm("cos_2m", sign=1, flag=-1),
        box=lambda a, b: 0 < a < Fraction(1, 4), box_text="0 < a < 1/4",
        nonintegral=lambda a, b: (2 * a,), nonintegral_text="2a not in Z",
        notes=("the sign of 4^a pi/cos(pi a) in the statement disagrees with the series; flipped by calibration",),
    ))
    add(Identity(
        "G2-2m-b", ("alpha",),
        "(a-1/2)/((3/2-2a) a) F(1,1,1/2;a+1,5/2-2a;1)"
        " = int_P(0,1) 2x^(2-4a)/(2x^2-2x+1) dx + 2^(2a-1) pi/cos(pi a - pi/2)",
        "Gamma_2 boundary identity on X_2m, shifted by a -> a - 1/2",
        prefactor=lambda a, b: (a - H) / ((Fraction(3, 2) - 2 * a) * a),
        f_params=lambda a, b: (H, a + 1, Fraction(5, 2) - 2 * a),
        gamma1=lambda a, b: (a - H, (1 - a, 2 * a - 1, H - a)),
        boundary=(BoundaryTerm("2x^(2-4a)/(2x^2-2x+1)", lambda a, b: 2 - 4 * a, (2,), ROOTS_2X2_2X_1, leading=2),),
        trig=TrigTerm("cos_2m_shift", sign=1, flag=-1),
        box=lambda a, b: H < a < Fraction(3, 4), box_text="1/2 < a < 3/4",
        nonintegral=lambda a, b: (2 * a,), nonintegral_text="2a not in Z",
        notes=("inherits the flipped exceptional-divisor sign of G2-2m-a",),
    ))
    add(Identity(
        "G2-3m", ("alpha",),
        "3a/((2a+2/3)(1-2a)) F(1,1,a+1;2a+5/3,2-2a;1)"
        " = int_P(0,1) 27x^(2-6a)(3x^3+1)/(1+27x^6) dx - int_P(0,1) 9x^(6a+1)(3-x^3)/(27+x^6) dx"
        " - 3^(3a) pi/sin(pi a + pi/3)",
        "Gamma_2 boundary identity on X_3m (with exceptional-divisor term)",
        prefactor=lambda a, b: 3 * a / ((2 * a + Fraction(2, 3)) * (1 - 2 * a)),
        f_params=lambda a, b: (a + 1, 2 * a + Fraction(5, 3), 2 - 2 * a),
        gamma1=lambda a, b: (3 * a, (Fraction(2, 3) - a, 3 * a, Fraction(1, 3) - a)),
        boundary=(
            BoundaryTerm("27x^(2-6a)(3x^3+1)/(1+27x^6)", lambda a, b: 2 - 6 * a, _poly(c0=27, c3=81),
                         ROOTS_1_PLUS_27X6, leading=27),
            BoundaryTerm("9x^(6a+1)(3-x^3)/(27+x^6)", lambda a, b: 6 * a + 1, _poly(c0=27, c3=-9),
                         ROOTS_27_PLUS_X6, sign=-1),
        ),
        trig=TrigTerm("sin_3m_g2", sign=-1),
        box=lambda a, b: Fraction(-1, 3) < a < H, box_text="-1/3 < a < 1/2",
        nonintegral=lambda a, b: (3 * a,), nonintegral_text="3a not in Z",
    ))
    add(Identity(
        "G2-4m", ("alpha",),
        "-a/((3a+3/4)(1-2a)) F(1,1,2a+1;3a+7/4,2-2a;1)"
        " = -int_P(0,1) x^(-8a) 8(1+8x^4)x^3/(64x^8+1) dx - int_P(0,1) x^(12a) 2x^2(-8-4x^4+x^8)/(64+x^12) dx"
        " + 4^(3a-1) pi/(sqrt2 sin(pi a + pi/4))",
        "Gamma_2 boundary identity on X_4m (with exceptional-divisor term)",
        prefactor=lambda a, b: -a / ((3 * a + Fraction(3, 4)) * (1 - 2 * a)),
        f_params=lambda a, b: (2 * a + 1, 3 * a + Fraction(7, 4), 2 - 2 * a),
        gamma1=lambda a, b: (-a, (Fraction(3, 4) - a, 4 * a, Fraction(1, 4) - a)),
        boundary=(
            BoundaryTerm("x^(-8a) 8(1+8x^4)x^3/(64x^8+1)", lambda a, b: -8 * a, _poly(c3=8, c7=64),
                         ROOTS_64X8_PLUS_1, leading=64, sign=-1),
            BoundaryTerm("x^(12a) 2x^2(-8-4x^4+x^8)/(64+x^12)", lambda a, b: 12 * a, _poly(c2=-16, c6=-8, c10=2),
                         ROOTS_64_PLUS_X12, sign=-1),
        ),
        trig=TrigTerm("sin_4m_g2", sign=1),
        box=lambda a, b: Fraction(-1, 4) < a < H, box_text="-1/4 < a < 1/2",
        nonintegral=lambda a, b: (4 * a,), nonintegral_text="4a not in Z",
    ))

    # --- Gamma_3 ------------------------------------------------------------------
    add(Identity(
        "G3-3m", ("alpha",),
        "3a/((1-2a)(2a+1/3)) F(1,1,a+1;2-2a,2a+4/3;1)"
        " = -int_P(0,1) 27y^(2-6a)(1-3y^3)/(1+27y^6) dy - int_P(0,1) 9y^(6a)(9-y^3)/(27+y^6) dy"
        " + 3^(3a) pi/sin(pi a + 2pi/3)",
        "Gamma_3 boundary identity on X_3m (with exceptional-divisor term)",
        prefactor=lambda a, b: 3 * a / ((1 - 2 * a) * (2 * a + Fraction(1, 3))),
        f_params=lambda a, b: (a + 1, 2 - 2 * a, 2 * a + Fraction(4, 3)),
        gamma1=lambda a, b: (3 * a, (Fraction(1, 3) - a, Fraction(2, 3) - a, 3 * a)),
        boundary=(
            BoundaryTerm("27y^(2-6a)(1-3y^3)/(1+27y^6)", lambda a, b: 2 - 6 * a, _poly(c0=27, c3=-81),
                         ROOTS_1_PLUS_27X6, leading=27, sign=-1),
            BoundaryTerm("9y^(6a)(9-y^3)/(27+y^6)", lambda a, b: 6 * a, _poly(c0=81, c3=-9),
                         ROOTS_27_PLUS_X6, sign=-1),
        ),
        trig=TrigTerm("sin_3m_g3", sign=1),
        box=lambda a, b: Fraction(-1, 6) < a < Fraction(1, 3), box_text="-1/6 < a < 1/3",
        nonintegral=lambda a, b: (3 * a,), nonintegral_text="3a not in Z",
    ))
    add(Identity(
        "G3-4m", ("alpha",),
        "-a/((1-2a)(3a+1/4)) F(1,1,2a+1;2-2a,3a+5/4;1)"
        " = int_P(0,1) y^(-8a) 8(1-8y^4)y^3/(64y^8+1) dy - int_P(0,1) y^(12a) 2(8y^4-32+y^8)/(64+y^12) dy"
        " - 4^(3a-1) pi/(sqrt2 cos(pi a + pi/4))",
        "Gamma_3 boundary identity on X_4m (with exceptional-divisor term)",
        prefactor=lambda a, b: -a / ((1 - 2 * a) * (3 * a + Fraction(1, 4))),
        f_params=lambda a, b: (2 * a + 1, 2 - 2 * a, 3 * a + Fraction(5, 4)),
        gamma1=lambda a, b: (-a, (Fraction(1, 4) - a, Fraction(3, 4) - a, 4 * a)),
        boundary=(
            BoundaryTerm("y^(-8a) 8(1-8y^4)y^3/(64y^8+1)", lambda a, b: -8 * a, _poly(c3=8, c7=-64),
                         ROOTS_64X8_PLUS_1, leading=64),
            BoundaryTerm("y^(12a) 2(8y^4-32+y^8)/(64+y^12)", lambda a, b: 12 * a, _poly(c0=-64, c4=16, c8=2),
                         ROOTS_64_PLUS_X12, sign=-1),
        ),
        trig=TrigTerm("cos_4m_g3", sign=-1),
        box=lambda a, b: Fraction(-1, 12) < a < Fraction(1, 4), box_text="-1/12 < a < 1/4",
        nonintegral=lambda a, b: (4 * a,), nonintegral_text="4a not in Z",
    ))

    # --- X_m through the digamma integral -----------------------------------------
    add(Identity(
        "EX0", ("alpha", "beta"),
        "1/(1-a+b) F(1,1,1+b;2,2-a+b;1) = int_P(0,1) eta^(-a)(1-eta^b)/(b(1-eta)) d eta",
        "digamma-shape identity on X_m",
        prefactor=lambda a, b: 1 / (1 - a + b),
        f_params=lambda a, b: (1 + b, Fraction(2), 2 - a + b),
        gamma1=lambda a, b: (Fraction(1), (1 - a, a, b)),
        boundary=(
            BoundaryTerm("eta^(-a)(1-eta^b)/(b(1-eta))", lambda a, b: -a, (1,), ROOTS_1_MINUS_X,
                         leading=lambda a, b: -b, powers=lambda a, b: ((1, Fraction(0)), (-1, b))),
        ),
        box=lambda a, b: a < 1 and b > a - 1, box_text="a < 1, a-1 < b",
        nonintegral=lambda a, b: (a, b, a - b), nonintegral_text="a, b, a-b not in Z",
    ))

    # --- the double integral itself -------------------------------------------------
    add(Identity(
        "P14", ("a1", "a2", "a3"),
        "int_G1 (xi+eta-1)^(a1-1) xi^(a2-1) eta^(a3-1) = F(1,1,a1+a2+a3;a1+a2+1,a1+a3+1;1)/((a1+a2)(a1+a3))",
        "Gamma_1 double integral as a 3F2 value at 1",
        prefactor=None, f_params=None, gamma1=None,
    ))
    return reg


_REGISTRY = _mk_registry()

IDENTITY_IDS = tuple(_REGISTRY)
STOKES_IDS = ("S1-m", "S1-2m", "S1-3m", "S1-4m")
HGF_IDS = tuple(i for i in IDENTITY_IDS if i not in STOKES_IDS and i != "P14")


def registry() -> list[Identity]:
    """All identities, in a fixed order."""
    return list(_REGISTRY.values())


def lookup(identity_id: str) -> Identity:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}; known: {', '.join(IDENTITY_IDS)}") from None
