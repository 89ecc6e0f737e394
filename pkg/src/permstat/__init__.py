"""Exact enumeration and verification for permutation statistics, signed
derangements, Jacobi continued fractions and co-recursive Laguerre polynomials."""
from .perm import Permutation, statistics
from .poly import MultiPoly, format_poly, parse_poly
from .signed import SignedPermutation, stats_b

__all__ = ["MultiPoly", "Permutation", "SignedPermutation", "format_poly", "parse_poly",
           "statistics", "stats_b"]
__version__ = "0.1.0"
