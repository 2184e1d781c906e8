"""Structure-constant builders for the finite rings in the corpus."""
from __future__ import annotations

from itertools import combinations

import numpy as np

from ..errors import ConfigurationError
from ..exactalg.field import is_prime
from ..finalg.algebra import StructureAlgebra
from .groups import GroupTable

MAX_BUILD_DIM = 64


def _check(p: int, dim: int) -> None:
    if not is_prime(p):
        raise ConfigurationError(f"modulus {p} is not prime")
    if not 1 <= dim <= MAX_BUILD_DIM:
        raise ConfigurationError(f"dimension {dim} outside [1, {MAX_BUILD_DIM}]")


def group_algebra(G: GroupTable, p: int, name: str | None = None) -> StructureAlgebra:
    n = G.order
    _check(p, n)
    mul = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            mul[a, b, G.mul(a, b)] = 1
    one = np.zeros(n, dtype=np.int64)
    one[G.identity] = 1
    return StructureAlgebra(p, mul, one, G.names, name=name or f"F_{p}[G], |G|={n}")


def exterior_algebra(p: int, d: int) -> StructureAlgebra:
    """Exterior algebra of F_p^d on square-free monomials, ordered by degree then lex.

    v_S v_T = 0 if S and T share an index, else sign * v_{S u T} with the sign
    of the shuffle (one factor -1 per pair s in S, t in T with s > t).
    The augmentation ideal (degree >= 1) ships as the claimed radical.
    """
    if d < 1:
        raise ConfigurationError("exterior algebra needs d >= 1")
    _check(p, 2**d)
    monos = [frozenset(c) for k in range(d + 1) for c in combinations(range(d), k)]
    index = {m: i for i, m in enumerate(monos)}
    dim = len(monos)
    mul = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, S in enumerate(monos):
        for j, T in enumerate(monos):
            if S & T:
                continue
            inversions = sum(1 for s in S for t in T if s > t)
            mul[i, j, index[S | T]] = (-1) ** inversions % p
    names = ["1" if not m else "".join(f"v{t + 1}" for t in sorted(m)) for m in monos]
    one = np.zeros(dim, dtype=np.int64)
    one[0] = 1
    radical = np.eye(dim, dtype=np.int64)[1:]
    return StructureAlgebra(p, mul, one, names, known_radical=radical, name=f"Lambda(F_{p}^{d})")


def matrix_algebra(p: int, N: int) -> StructureAlgebra:
    """M_N(F_p) on matrix units e_{i,j} (row-major); simple, so the radical is 0."""
    _check(p, N * N)
    dim = N * N
    mul = np.zeros((dim, dim, dim), dtype=np.int64)
    for i in range(N):
        for j in range(N):
            for l in range(N):
                mul[i * N + j, j * N + l, i * N + l] = 1
    one = np.zeros(dim, dtype=np.int64)
    for i in range(N):
        one[i * N + i] = 1
    names = [f"e{i + 1}{j + 1}" for i in range(N) for j in range(N)]
    return StructureAlgebra(p, mul, one, names, known_radical=np.zeros((0, dim)), name=f"M_{N}(F_{p})")


def truncated_polynomial(p: int, n: int) -> StructureAlgebra:
    """F_p[t]/(t^n) on the basis 1, t, ..., t^(n-1)."""
    _check(p, n)
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n - i):
            mul[i, j, i + j] = 1
    one = np.zeros(n, dtype=np.int64)
    one[0] = 1
    names = ["1", "t"] + [f"t^{k}" for k in range(2, n)]
    return StructureAlgebra(
        p, mul, one, names[:n], known_radical=np.eye(n, dtype=np.int64)[1:], name=f"F_{p}[t]/(t^{n})"
    )


def diagonal_algebra(p: int, k: int) -> StructureAlgebra:
    """F_p x ... x F_p (k copies) on the coordinate idempotents."""
    _check(p, k)
    mul = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        mul[i, i, i] = 1
    return StructureAlgebra(
        p, mul, np.ones(k, dtype=np.int64), [f"e{i + 1}" for i in range(k)],
        known_radical=np.zeros((0, k)), name="x".join([f"F_{p}"] * k),
    )
