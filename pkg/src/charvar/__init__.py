"""E-polynomials of PGL(2,C)-character varieties of surface groups."""

__version__ = "0.1.0"
