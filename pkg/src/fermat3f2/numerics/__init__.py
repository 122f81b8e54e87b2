"""Floating-point engines: the 3F2 series at 1, tanh-sinh quadrature,
Pochhammer contours and the Gamma_1 double integral."""
from .double import gamma1_double
from .quadrature import IntegrandSpec, poch_contour, quad_1d, tanh_sinh, to_mpc
from .series import QuadResult, f32_at_1, pochhammer, to_mpf

__all__ = [
    "QuadResult",
    "IntegrandSpec",
    "pochhammer",
    "f32_at_1",
    "quad_1d",
    "tanh_sinh",
    "poch_contour",
    "gamma1_double",
    "to_mpf",
    "to_mpc",
]
