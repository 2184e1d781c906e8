"""Brute-force reference implementations used as test oracles.

Everything here works element by element with plain Python loops over the
full element set, independent of the linear-algebra shortcuts in the package.
"""
from __future__ import annotations

from itertools import product

import numpy as np


def elements(A):
    return [np.array(v, dtype=np.int64) for v in product(range(A.p), repeat=A.dim)]


def key(v):
    return tuple(int(t) for t in v)


def mul(A, a, b):
    return np.einsum("i,j,ijk->k", a, b, A.mul) % A.p


def center_set(A, E=None):
    E = E or elements(A)
    basis = np.eye(A.dim, dtype=np.int64)
    return {key(c) for c in E if all((mul(A, c, b) == mul(A, b, c)).all() for b in basis)}


def is_unit(A, a, E=None):
    E = E or elements(A)
    one = A.one
    return any((mul(A, a, b) == one).all() and (mul(A, b, a) == one).all() for b in E)


def is_nilpotent(A, a):
    x = a.copy()
    for _ in range(A.dim + 1):
        if not x.any():
            return True
        x = mul(A, x, a)
    return not x.any()


def centrally_essential(A):
    """Definition: every r != 0 has nonzero central c with r c central and nonzero."""
    E = elements(A)
    C = center_set(A, E)
    central = [np.array(c) for c in C if any(c)]
    for r in E:
        if not r.any():
            continue
        if not any(key(d) in C and d.any() for d in (mul(A, r, c) for c in central)):
            return False
    return True


def left_zero_divisors(A, E=None):
    """{a : a x = 0 for some x != 0}, 0 included."""
    E = E or elements(A)
    nz = [x for x in E if x.any()]
    return {key(a) for a in E if any(not mul(A, a, x).any() for x in nz)}
