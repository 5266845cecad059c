"""Polynomial identities for multilinear operations in nonassociative algebras.

Exact rational and integer linear algebra over the free nonassociative
algebra: expansion of operation terms, identity search modulo a variety,
liftings, representation-theoretic rank tables and lattice reduction.
"""

from .freealg import Polynomial, parse_polynomial, render_polynomial
from .ops import OpPolynomial, expand, parse_op_polynomial, render_op_polynomial

__version__ = "0.1.0"

__all__ = [
    "OpPolynomial",
    "Polynomial",
    "expand",
    "parse_op_polynomial",
    "parse_polynomial",
    "render_op_polynomial",
    "render_polynomial",
]
