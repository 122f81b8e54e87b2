"""Special values F(1,1,a;b,c;1) of 3F2 via series, quadrature and exact log forms."""

__version__ = "0.1.0"
