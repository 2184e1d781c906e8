"""Seeded random polynomials and rational functions for property checks."""
from __future__ import annotations

import random

from .poly import MultiPoly
from .ratfunc import RatFunc


def random_poly(rng: random.Random, p: int, max_degree: int = 3) -> MultiPoly:
    """Every monomial of total degree <= max_degree gets a uniform coefficient."""
    terms = {}
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            terms[(i, j)] = rng.randrange(p)
    return MultiPoly(p, terms)


def random_ratfunc(rng: random.Random, p: int, max_degree: int = 3) -> RatFunc:
    num = random_poly(rng, p, max_degree)
    den = random_poly(rng, p, max_degree)
    while den.is_zero():
        den = random_poly(rng, p, max_degree)
    return RatFunc(num, den)


def random_nonzero_ratfunc(rng: random.Random, p: int, max_degree: int = 3) -> RatFunc:
    r = random_ratfunc(rng, p, max_degree)
    while r.is_zero():
        r = random_ratfunc(rng, p, max_degree)
    return r
