"""Finite-dimensional associative F_p-algebras given by structure constants."""
from __future__ import annotations

import json
from itertools import product
from pathlib import Path
from typing import Sequence

import numpy as np

from ..errors import AlgebraAxiomError, ConfigurationError, SchemaError
from ..exactalg.field import is_prime
from .linalg import Subspace, left_kernel, solve_left


class StructureAlgebra:
    """Algebra with basis b_0..b_{dim-1} and ``b_i b_j = sum_k mul[i, j, k] b_k``.

    Associativity and the two-sided identity are verified on construction.
    ``known_radical`` lets a builder ship a claimed Jacobson radical; it is
    verified, never trusted, by :func:`centress.finalg.decide.jacobson_radical`.
    """

    def __init__(
        self,
        p: int,
        mul,
        one,
        basis_names: Sequence[str] | None = None,
        known_radical: Sequence[Sequence[int]] | None = None,
        name: str | None = None,
    ):
        if not is_prime(p):
            raise ConfigurationError(f"modulus {p} is not prime")
        mul = np.asarray(mul, dtype=np.int64)
        if mul.ndim != 3 or mul.shape[0] == 0:
            if mul.size == 0:
                raise AlgebraAxiomError("zero-dimensional algebra: a non-zero identity is required")
            raise ConfigurationError(f"structure constants must be dim x dim x dim, got {mul.shape}")
        dim = mul.shape[0]
        if mul.shape != (dim, dim, dim):
            raise ConfigurationError(f"structure constants must be dim x dim x dim, got {mul.shape}")
        if p * p * dim >= 2**62:
            raise ConfigurationError(f"p={p} with dim={dim} would overflow int64 arithmetic")
        self.p = p
        self.dim = dim
        self.mul = mul % p
        self.mul.setflags(write=False)
        self.one = np.asarray(one, dtype=np.int64) % p
        if self.one.shape != (dim,):
            raise ConfigurationError(f"identity must have {dim} coordinates")
        self.one.setflags(write=False)
        self.basis_names = tuple(basis_names) if basis_names else tuple(f"b{i}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise ConfigurationError(f"{len(self.basis_names)} basis names for dimension {dim}")
        self.name = name or f"algebra(p={p},dim={dim})"
        self._check_axioms()
        self.known_radical = (
            Subspace.span(known_radical, p, dim) if known_radical is not None else None
        )

    # -- validation ------------------------------------------------------------------

    def _check_axioms(self) -> None:
        T, p = self.mul, self.p
        if not self.one.any():
            raise AlgebraAxiomError("the identity element must be non-zero")
        # (b_i b_j) b_k vs b_i (b_j b_k), all triples at once
        left = np.tensordot(T, T, axes=(2, 0)) % p
        right = np.tensordot(T, T, axes=(1, 2)).transpose(0, 2, 3, 1) % p
        bad = np.argwhere((left != right).any(axis=3))
        if bad.size:
            i, j, k = (int(t) for t in bad[0])
            raise AlgebraAxiomError(
                f"associativity fails on basis triple (i,j,k)=({i},{j},{k})", triple=(i, j, k)
            )
        eye = np.eye(self.dim, dtype=np.int64)
        left_one = np.einsum("i,ijk->jk", self.one, T) % p
        right_one = np.einsum("j,ijk->ik", self.one, T) % p
        for side, prod_ in (("left", left_one), ("right", right_one)):
            bad = np.argwhere((prod_ != eye).any(axis=1))
            if bad.size:
                j = int(bad[0][0])
                raise AlgebraAxiomError(
                    f"identity fails as a {side} identity on basis element {j}", triple=(j,)
                )

    # -- linear maps ------------------------------------------------------------------

    def left_mult(self, a) -> np.ndarray:
        """Matrix of x -> a x."""
        return np.tensordot(np.asarray(a, dtype=np.int64), self.mul, axes=(0, 0)) % self.p

    def right_mult(self, a) -> np.ndarray:
        """Matrix of x -> x a."""
        return np.tensordot(self.mul, np.asarray(a, dtype=np.int64), axes=(1, 0)) % self.p

    def mult(self, a, b) -> np.ndarray:
        return np.asarray(b, dtype=np.int64) @ self.left_mult(a) % self.p

    def mult_many(self, A, B) -> np.ndarray:
        """Row-wise products A[r] * B[r]."""
        L = np.tensordot(np.asarray(A, dtype=np.int64), self.mul, axes=(1, 0)) % self.p
        return np.einsum("rj,rjk->rk", np.asarray(B, dtype=np.int64), L) % self.p

    def products(self, U, V) -> np.ndarray:
        """All products u v for rows u of U and v of V, as (len(U)*len(V), dim)."""
        U = np.asarray(U, dtype=np.int64).reshape(-1, self.dim)
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.dim)
        L = np.tensordot(U, self.mul, axes=(1, 0)) % self.p
        out = np.einsum("bj,ajk->abk", V, L) % self.p
        return out.reshape(-1, self.dim)

    def power(self, a, k: int) -> np.ndarray:
        result = self.one.copy()
        base = np.asarray(a, dtype=np.int64) % self.p
        while k:
            if k & 1:
                result = self.mult(result, base)
            k >>= 1
            if k:
                base = self.mult(base, base)
        return result

    def inverse(self, a) -> np.ndarray | None:
        """Two-sided inverse by solving a x = 1 and y a = 1; None for non-units."""
        x = solve_left(self.left_mult(a), self.one, self.p)
        if x is None:
            return None
        y = solve_left(self.right_mult(a), self.one, self.p)
        if y is None:
            return None
        # x = y in an associative ring with both inverses
        return x

    # -- convenience ------------------------------------------------------------------

    def element(self, coords) -> AlgebraElement:
        return AlgebraElement(self, coords)

    def basis_element(self, i: int) -> AlgebraElement:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return AlgebraElement(self, v)

    def identity(self) -> AlgebraElement:
        return AlgebraElement(self, self.one)

    def basis_vector(self, name: str) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.basis_names.index(name)] = 1
        return v

    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.transpose(1, 0, 2)).all())

    def full(self) -> Subspace:
        return Subspace.full(self.p, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.p, self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace.span(vectors, self.p, self.dim)

    def elements(self):
        """All p^dim elements in lexicographic coordinate order (lazy)."""
        for t in product(range(self.p), repeat=self.dim):
            yield np.array(t, dtype=np.int64)

    def element_count(self) -> int:
        return self.p**self.dim

    def __repr__(self):
        return f"StructureAlgebra({self.name})"

    # -- serialization ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "dim": self.dim,
            "basis": list(self.basis_names),
            "one": self.one.tolist(),
            "mul": self.mul.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict, name: str | None = None) -> StructureAlgebra:
        for key in ("p", "dim", "one", "mul"):
            if key not in data:
                raise SchemaError(f"ring description is missing key {key!r}")
        p, dim = data["p"], data["dim"]
        if not isinstance(p, int) or not isinstance(dim, int):
            raise SchemaError("'p' and 'dim' must be integers")
        if dim <= 0:
            raise AlgebraAxiomError("zero-dimensional algebra: a non-zero identity is required")
        mul = data["mul"]
        if not isinstance(mul, list) or len(mul) != dim:
            raise SchemaError(f"'mul' must have {dim} rows")
        for i, row in enumerate(mul):
            if not isinstance(row, list) or len(row) != dim:
                raise SchemaError(f"'mul[{i}]' must have {dim} entries")
            for j, vec in enumerate(row):
                if not isinstance(vec, list) or len(vec) != dim:
                    raise SchemaError(f"'mul[{i}][{j}]' must be a vector of length {dim}")
                if not all(isinstance(c, int) and 0 <= c < p for c in vec):
                    raise SchemaError(f"'mul[{i}][{j}]' must hold residues modulo {p}")
        one = data["one"]
        if not isinstance(one, list) or len(one) != dim:
            raise SchemaError(f"'one' must be a vector of length {dim}")
        basis = data.get("basis")
        if basis is not None and (not isinstance(basis, list) or len(basis) != dim):
            raise SchemaError(f"'basis' must list {dim} names")
        return cls(p, mul, one, basis, name=name)

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json()))

    @classmethod
    def load(cls, path) -> StructureAlgebra:
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
        if not isinstance(data, dict):
            raise SchemaError(f"{path}: top level must be an object")
        return cls.from_json(data, name=str(path))


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: StructureAlgebra, coords):
        c = np.asarray(coords, dtype=np.int64) % algebra.p
        if c.shape != (algebra.dim,):
            raise ConfigurationError(f"element needs {algebra.dim} coordinates, got {c.shape}")
        c.setflags(write=False)
        self.algebra = algebra
        self.coords = c

    def _same(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ConfigurationError("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.algebra, self.coords - other.coords)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.coords)

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraElement(self.algebra, self.coords * other)
        self._same(other)
        return AlgebraElement(self.algebra, self.algebra.mult(self.coords, other.coords))

    def __rmul__(self, other):
        if isinstance(other, int):
            return AlgebraElement(self.algebra, self.coords * other)
        return NotImplemented

    def __pow__(self, k: int):
        return AlgebraElement(self.algebra, self.algebra.power(self.coords, k))

    def is_zero(self) -> bool:
        return not self.coords.any()

    def inverse(self) -> AlgebraElement | None:
        inv = self.algebra.inverse(self.coords)
        return None if inv is None else AlgebraElement(self.algebra, inv)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and bool((self.coords == other.coords).all())

    def __hash__(self):
        return hash((id(self.algebra), self.coords.tobytes()))

    def __repr__(self):
        terms = [
            (f"{c}*" if c != 1 else "") + name
            for c, name in zip(self.coords.tolist(), self.algebra.basis_names)
            if c
        ]
        return " + ".join(terms) or "0"


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """[a, b] = ab - ba."""
    a._same(b)
    return a * b - b * a


def kernel_subspace(m, p: int, dim: int) -> Subspace:
    ker = left_kernel(m, p)
    return Subspace.span(ker, p, dim) if ker.shape[0] else Subspace.zero(p, dim)
