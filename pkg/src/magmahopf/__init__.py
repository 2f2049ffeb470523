"""Exact computations in the free magma algebra K{X}.

Co-addition, antipodes, Taylor expansion, the algebra of constants and the
non-associative Hausdorff series ``log(exp(x) exp(y))``.
"""

from ._kernels import BACKEND
from .algebra import Poly, Series, compose, leading, mul
from .calculus import derive, integral, lmul, phi1, phi_total, taylor1, taylor_total
from .hausdorff import exp_coeffs, hausdorff_component, log_coeffs, star
from .hopf import TensorPoly, antipode, bar, delta, deviation, is_primitive
from .magma import ONE, Monomial, enumerate_monomials, graft, leaf, power
from .parsing import ParseError, format_poly, parse

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Poly", "Series", "compose", "leading", "mul", "derive", "integral",
    "lmul", "phi1", "phi_total", "taylor1", "taylor_total", "exp_coeffs",
    "hausdorff_component", "log_coeffs", "star", "TensorPoly", "antipode", "bar",
    "delta", "deviation", "is_primitive", "ONE", "Monomial", "enumerate_monomials",
    "graft", "leaf", "power", "ParseError", "format_poly", "parse",
]
