"""Exact computation and verification toolkit for the sequence U_n.

``U_0 = 1`` and ``U_n = -2 sum_{k=1}^{[n/2]} C(n, 2k) U_{n-2k}``; the package
generates U_n together with Euler and Bernoulli numbers and polynomials,
the Lucas-type sequence V_m and the Newton companion a_n, and checks the
identities and congruences they satisfy.
"""

from .kernels import BACKEND
from .report import ClaimReport
from .sequences import (
    SeqStore,
    bernoulli_number,
    bernoulli_poly,
    companion_a,
    euler_number,
    euler_poly,
    lucas_v,
    u,
    u_mod,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClaimReport",
    "SeqStore",
    "bernoulli_number",
    "bernoulli_poly",
    "companion_a",
    "euler_number",
    "euler_poly",
    "lucas_v",
    "u",
    "u_mod",
]
