"""Exact arithmetic: Laurent polynomials, linear algebra, interpolation."""

from .interpolate import IntPolynomial, interpolate, interpolate_and_eval_at_one, primes_for
from .laurent import LaurentPoly, laurent_mul, laurent_specialize, variables
from .linalg import GF, QQ, Field, LinearSolution, nullspace, rank, rref, solve_linear

__all__ = [
    "GF", "QQ", "Field", "IntPolynomial", "LaurentPoly", "LinearSolution",
    "interpolate", "interpolate_and_eval_at_one", "laurent_mul", "laurent_specialize",
    "nullspace", "primes_for", "rank", "rref", "solve_linear", "variables",
]
