"""Exact linear algebra over F_p on int64 numpy arrays.

Vectors are rows: a linear map is a matrix ``M`` acting as ``x -> x @ M``.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from ..errors import ConfigurationError


def as_matrix(rows, p: int, ncols: int | None = None) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, ncols or 0)
    if a.ndim != 2:
        raise ConfigurationError(f"expected a matrix, got shape {a.shape}")
    if ncols is not None and a.shape[1] != ncols:
        raise ConfigurationError(f"expected {ncols} columns, got {a.shape[1]}")
    return a % p


def rref(rows, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    a = np.array(rows, dtype=np.int64) % p
    if a.ndim != 2:
        raise ConfigurationError(f"expected a matrix, got shape {a.shape}")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = a[r] * pow(lead, -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[1])


def batch_rank(mats, p: int) -> np.ndarray:
    """Ranks of a stack of matrices (shape (B, n, m)), eliminated in lockstep."""
    a = np.array(mats, dtype=np.int64) % p
    B, n, m = a.shape
    used = np.zeros((B, n), dtype=bool)
    inv = np.array([0] + [pow(v, -1, p) for v in range(1, p)], dtype=np.int64)
    rows = np.arange(B)
    for c in range(m):
        cand = (a[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = rows[has]
        piv = cand[has].argmax(axis=1)
        prow = a[idx, piv] * inv[a[idx, piv, c]][:, None] % p
        factors = a[idx, :, c] * ~used[idx]
        factors[np.arange(len(idx)), piv] = 0
        a[idx] = (a[idx] - factors[:, :, None] * prow[:, None, :]) % p
        a[idx, piv] = prow
        used[idx, piv] = True
    return used.sum(axis=1)


def left_kernel(m, p: int) -> np.ndarray:
    """Basis (rows, in RREF) of {x : x @ m = 0}."""
    m = np.asarray(m, dtype=np.int64) % p
    nrows, ncols = m.shape
    if nrows == 0:
        return np.zeros((0, 0), dtype=np.int64)
    aug = np.concatenate([m, np.eye(nrows, dtype=np.int64)], axis=1)
    red, pivots = rref(aug, p)
    ker = [red[i, ncols:] for i, c in enumerate(pivots) if c >= ncols]
    if not ker:
        return np.zeros((0, nrows), dtype=np.int64)
    return rref(np.array(ker), p)[0]


def solve_left(m, b, p: int) -> np.ndarray | None:
    """One solution x of ``x @ m = b`` (free variables zero), or None."""
    m = np.asarray(m, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    nrows, ncols = m.shape
    if b.shape[0] != ncols:
        raise ConfigurationError(f"right-hand side has length {b.shape[0]}, expected {ncols}")
    aug = np.concatenate([m.T, b.reshape(-1, 1)], axis=1)
    red, pivots = rref(aug, p)
    if pivots and pivots[-1] == nrows:
        return None
    x = np.zeros(nrows, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red[i, nrows]
    return x


class Subspace:
    """Subspace of F_p^dim stored by its RREF basis; equality is exact."""

    __slots__ = ("p", "dim", "basis", "pivots", "_key")

    def __init__(self, p: int, dim: int, basis: np.ndarray, pivots: list[int]):
        # trusted constructor: basis already in RREF
        self.p = p
        self.dim = dim
        self.basis = basis
        self.basis.setflags(write=False)
        self.pivots = tuple(pivots)
        self._key = None

    @classmethod
    def span(cls, vectors, p: int, dim: int) -> Subspace:
        a = np.asarray(vectors, dtype=np.int64)
        if a.size == 0:
            return cls.zero(p, dim)
        a = a.reshape(-1, dim) if a.ndim == 1 else a
        if a.shape[1] != dim:
            raise ConfigurationError(f"vectors of length {a.shape[1]} in F_{p}^{dim}")
        red, piv = rref(a, p)
        return cls(p, dim, red, piv)

    @classmethod
    def zero(cls, p: int, dim: int) -> Subspace:
        return cls(p, dim, np.zeros((0, dim), dtype=np.int64), [])

    @classmethod
    def full(cls, p: int, dim: int) -> Subspace:
        return cls(p, dim, np.eye(dim, dtype=np.int64), list(range(dim)))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.rank

    def is_zero(self) -> bool:
        return self.rank == 0

    def is_full(self) -> bool:
        return self.rank == self.dim

    def _check(self, other: Subspace) -> None:
        if self.p != other.p or self.dim != other.dim:
            raise ConfigurationError(
                f"subspaces of F_{self.p}^{self.dim} and F_{other.p}^{other.dim} do not mix"
            )

    def reduce(self, v) -> np.ndarray:
        """Canonical coset representative of v modulo this subspace."""
        v = np.asarray(v, dtype=np.int64) % self.p
        v = v.copy()
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(row) for row in self.basis)

    def __le__(self, other: Subspace) -> bool:
        return self.issubspace(other)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(np.concatenate([self.basis, other.basis]), self.p, self.dim)

    def intersect(self, other: Subspace) -> Subspace:
        """Intersection via the kernel of the stacked bases."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.p, self.dim)
        stacked = np.concatenate([self.basis, other.basis])
        ker = left_kernel(stacked, self.p)
        if ker.shape[0] == 0:
            return Subspace.zero(self.p, self.dim)
        return Subspace.span(ker[:, : self.rank] @ self.basis % self.p, self.p, self.dim)

    __and__ = intersect

    def coordinates(self, v) -> np.ndarray:
        """Coefficients c with ``c @ basis == v``; v must lie in the subspace."""
        v = np.asarray(v, dtype=np.int64) % self.p
        if not self.contains(v):
            raise ConfigurationError("vector is not in the subspace")
        return v[list(self.pivots)]

    def elements(self) -> np.ndarray:
        """All p^rank elements, in lexicographic order of their coefficient tuples."""
        coeffs = np.array(list(product(range(self.p), repeat=self.rank)), dtype=np.int64)
        if self.rank == 0:
            return np.zeros((1, self.dim), dtype=np.int64)
        return coeffs @ self.basis % self.p

    def coset_representatives(self) -> np.ndarray:
        """Vectors supported off the pivot columns; one per coset, in lex order."""
        free = [c for c in range(self.dim) if c not in self.pivots]
        reps = np.zeros((self.p ** len(free), self.dim), dtype=np.int64)
        if free:
            reps[:, free] = np.array(list(product(range(self.p), repeat=len(free))), dtype=np.int64)
        return reps

    def _keyed(self):
        if self._key is None:
            self._key = (self.p, self.dim, self.pivots, self.basis.tobytes())
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._keyed() == other._keyed()

    def __hash__(self):
        return hash(self._keyed())

    def __repr__(self):
        return f"Subspace(p={self.p}, dim={self.dim}, rank={self.rank}, basis={self.basis.tolist()})"


def linalg(rows, op: str, p: int, other=None):
    """Operation dispatcher: rref / kernel / image / intersect / sum / contains."""
    m = as_matrix(rows, p)
    dim = m.shape[1]
    if op == "rref":
        return Subspace.span(m, p, dim)
    if op == "image":
        return Subspace.span(m, p, dim)
    if op == "kernel":
        ker = left_kernel(m, p)
        return Subspace(p, m.shape[0], ker, rref(ker, p)[1] if ker.size else [])
    if op in ("intersect", "sum"):
        o = as_matrix(other, p)
        if o.shape[1] != dim:
            raise ConfigurationError(f"dimension mismatch: {dim} vs {o.shape[1]}")
        a, b = Subspace.span(m, p, dim), Subspace.span(o, p, dim)
        return a & b if op == "intersect" else a + b
    if op == "contains":
        v = np.asarray(other, dtype=np.int64)
        if v.shape[-1] != dim:
            raise ConfigurationError(f"dimension mismatch: {dim} vs {v.shape[-1]}")
        return Subspace.span(m, p, dim).contains(v)
    raise ConfigurationError(f"unknown linear-algebra operation {op!r}")
