"""Element enumeration for algebras small enough to scan exhaustively.

Elements are indexed in lexicographic coordinate order (index 0 is zero).
Subspaces are turned into Python-int bitsets over those indices so that
intersection and containment tests between many ideals are single ANDs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import ResourceError
from .algebra import StructureAlgebra
from .linalg import Subspace

DEFAULT_BUDGET = 2**20


def check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise ResourceError(
            f"{what} needs {count} elements but the enumeration budget is {budget}; "
            "raise --budget / CENTRESS_BUDGET or use a structural method"
        )


@dataclass
class PrincipalIdeal:
    generator: np.ndarray
    space: Subspace
    bits: int
    size: int


class Enumerator:
    def __init__(self, A: StructureAlgebra, budget: int = DEFAULT_BUDGET, what: str = "exhaustive scan"):
        check_budget(A.element_count(), budget, f"{what} on {A.name}")
        self.A = A
        self.p = A.p
        self.dim = A.dim
        self.count = A.element_count()
        self.radix = np.array([A.p ** (A.dim - 1 - i) for i in range(A.dim)], dtype=np.int64)
        self._elements = None
        self._principal: dict[str, list[PrincipalIdeal]] = {}

    @property
    def elements(self) -> np.ndarray:
        if self._elements is None:
            self._elements = np.array(
                list(product(range(self.p), repeat=self.dim)), dtype=np.int64
            ).reshape(-1, self.dim)
        return self._elements

    def index(self, vecs) -> np.ndarray:
        return np.asarray(vecs, dtype=np.int64) @ self.radix

    def bits_of_indices(self, idx) -> int:
        mask = np.zeros(self.count, dtype=bool)
        mask[idx] = True
        return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")

    def bits(self, S: Subspace) -> int:
        return self.bits_of_indices(self.index(S.elements()))

    def projective_reps(self) -> np.ndarray:
        """Nonzero elements whose first nonzero coordinate is 1, in lex order."""
        E = self.elements[1:]
        first = E[np.arange(len(E)), (E != 0).argmax(axis=1)]
        return E[first == 1]

    def principal_ideals(self, side: str) -> list[PrincipalIdeal]:
        """Distinct nonzero principal right (``bA``) or left (``Ab``) ideals.

        Ordered by their lexicographically first generator.
        """
        if side not in self._principal:
            seen: dict[Subspace, PrincipalIdeal] = {}
            for b in self.projective_reps():
                m = self.A.left_mult(b) if side == "right" else self.A.right_mult(b)
                S = self.A.span(m)
                if S not in seen:
                    bits = self.bits(S)
                    seen[S] = PrincipalIdeal(b, S, bits, self.p**S.rank)
            self._principal[side] = list(seen.values())
        return self._principal[side]

    def meets_all(self, S: Subspace, side: str) -> tuple[bool, PrincipalIdeal | None]:
        """Does S intersect every nonzero principal ideal on ``side``?"""
        sb = self.bits(S)
        for P in self.principal_ideals(side):
            if (sb & P.bits) == 1:
                return False, P
        return True, None
