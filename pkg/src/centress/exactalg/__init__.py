"""Exact arithmetic: F_p, F_p[x, y], F_p(x, y) and its partial derivations."""
from .field import PrimeField, field_arith, is_prime
from .poly import DEGREE_CAP, MultiPoly, gcd_recursive, poly_arith, poly_gcd
from .sampling import random_nonzero_ratfunc, random_poly, random_ratfunc
from .ratfunc import D1, D2, Derivation, RatFunc, derive, normalize, parse_ratfunc, ratfunc_arith

__all__ = [
    "D1", "D2", "DEGREE_CAP", "Derivation", "MultiPoly", "PrimeField", "RatFunc",
    "derive", "field_arith", "gcd_recursive", "is_prime", "normalize", "parse_ratfunc", "poly_arith",
    "poly_gcd", "random_nonzero_ratfunc", "random_poly", "random_ratfunc", "ratfunc_arith",
]
