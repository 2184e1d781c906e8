"""Center, annihilators, ideals, radicals and the centrally-essential decision."""
from __future__ import annotations

import numpy as np

from ..errors import ConfigurationError, ContractError
from .algebra import StructureAlgebra, kernel_subspace
from .certificate import Certificate, Method, Stopwatch, Verdict, refute
from .exhaustive import DEFAULT_BUDGET, Enumerator, check_budget
from .linalg import Subspace, left_kernel

CE_CLAUSE = "every nonzero r has nonzero central c, d with r c = d"


def _vectors(A: StructureAlgebra, S) -> np.ndarray:
    if isinstance(S, Subspace):
        return S.basis
    v = np.asarray(S, dtype=np.int64) % A.p
    return v.reshape(-1, A.dim)


def center(A: StructureAlgebra) -> Subspace:
    """Joint kernel of x -> [b_i, x] over the basis."""
    T = A.mul
    blocks = [T[i] - T[:, i, :] for i in range(A.dim)]
    return kernel_subspace(np.concatenate(blocks, axis=1) % A.p, A.p, A.dim)


def annihilator(A: StructureAlgebra, S, side: str) -> Subspace:
    """``left``: {r : r S = 0}; ``right``: {r : S r = 0}."""
    vecs = _vectors(A, S)
    if vecs.shape[0] == 0:
        raise ConfigurationError("annihilator of an empty set")
    if side == "left":
        blocks = [A.right_mult(s) for s in vecs]
    elif side == "right":
        blocks = [A.left_mult(s) for s in vecs]
    else:
        raise ConfigurationError(f"side must be 'left' or 'right', got {side!r}")
    return kernel_subspace(np.concatenate(blocks, axis=1), A.p, A.dim)


def subspace_product(A: StructureAlgebra, U, V) -> Subspace:
    """span{u v : u in U, v in V}."""
    U, V = _vectors(A, U), _vectors(A, V)
    if U.shape[0] == 0 or V.shape[0] == 0:
        return A.zero_space()
    return A.span(A.products(U, V))


def ideal_closure(A: StructureAlgebra, S, side: str = "two") -> Subspace:
    """Smallest right / left / two-sided ideal containing S."""
    basis = np.eye(A.dim, dtype=np.int64)
    cur = A.span(_vectors(A, S))
    while True:
        parts = [cur.basis]
        if side in ("right", "two"):
            parts.append(A.products(cur.basis, basis))
        if side in ("left", "two"):
            parts.append(A.products(basis, cur.basis))
        nxt = A.span(np.concatenate(parts))
        if nxt == cur:
            return cur
        cur = nxt


def ideal_violation(A: StructureAlgebra, S: Subspace, side: str = "two") -> dict | None:
    """First (element, basis element) product escaping S, or None if S is an ideal."""
    for s in S.basis:
        for j in range(A.dim):
            b = np.zeros(A.dim, dtype=np.int64)
            b[j] = 1
            if side in ("right", "two"):
                v = A.mult(s, b)
                if not S.contains(v):
                    return {"element": s.tolist(), "times": A.basis_names[j], "side": "right"}
            if side in ("left", "two"):
                v = A.mult(b, s)
                if not S.contains(v):
                    return {"element": s.tolist(), "times": A.basis_names[j], "side": "left"}
    return None


def is_ideal(A: StructureAlgebra, S: Subspace, side: str = "two") -> bool:
    return ideal_violation(A, S, side) is None


def require_ideal(A: StructureAlgebra, S: Subspace, what: str = "input") -> None:
    w = ideal_violation(A, S)
    if w is not None:
        raise ContractError(f"{what} is not a two-sided ideal", witness=w)


def nilpotence_index(A: StructureAlgebra, I: Subspace) -> int | None:
    """Least n with I^n = 0, or None if I^(dim+1) != 0."""
    power, n = I, 1
    while not power.is_zero():
        if n > A.dim:
            return None
        power = subspace_product(A, power, I)
        n += 1
    return n


def is_nilpotent(A: StructureAlgebra, a) -> bool:
    # the regular representation of a nilpotent element has index <= dim
    return not A.power(a, A.dim).any()


def _check_commutative(A: StructureAlgebra, C: Subspace) -> None:
    B = C.basis
    for i in range(len(B)):
        for j in range(i + 1, len(B)):
            if (A.mult(B[i], B[j]) != A.mult(B[j], B[i])).any():
                raise ContractError(
                    "nilradical_commutative needs a commutative (sub)algebra",
                    witness={"a": B[i].tolist(), "b": B[j].tolist()},
                )


def nilradical_commutative(A: StructureAlgebra, C: Subspace | None = None) -> Subspace:
    """Nilradical of a commutative subalgebra C (default: all of A).

    In characteristic p, x -> x^p is F_p-linear on a commutative algebra; the
    nilpotent elements are the kernel of its m-th iterate once p^m >= dim C.
    """
    C = A.full() if C is None else C
    if not C.contains(A.one):
        raise ContractError("subalgebra must contain the identity")
    _check_commutative(A, C)
    k = C.rank
    if k == 0:
        return A.zero_space()
    frob = np.array([C.coordinates(A.power(c, A.p)) for c in C.basis], dtype=np.int64)
    m = 1
    while A.p**m < k:
        m += 1
    it = np.eye(k, dtype=np.int64)
    for _ in range(m):
        it = it @ frob % A.p
    ker = left_kernel(it, A.p)
    if ker.shape[0] == 0:
        return A.zero_space()
    return A.span(ker @ C.basis % A.p)


def jacobson_radical(A: StructureAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    """Largest nilpotent ideal, grown from a verified seed ideal.

    The seed is ``A.known_radical`` (checked to be a nilpotent two-sided ideal)
    or 0. An element lies in J(A) iff the ideal it generates is nilpotent, and
    that only depends on its coset modulo any nilpotent ideal already found, so
    one representative per coset is tested until none extends the seed.
    """
    J = A.zero_space()
    if A.known_radical is not None:
        require_ideal(A, A.known_radical, "claimed radical")
        if nilpotence_index(A, A.known_radical) is None:
            raise ContractError("claimed radical is not nilpotent")
        J = A.known_radical
    check_budget(A.p ** (A.dim - J.rank), budget, f"radical search on {A.name}")
    grown = True
    while grown:
        grown = False
        for rep in J.coset_representatives()[1:]:
            if not is_nilpotent(A, rep):
                continue
            K = J + ideal_closure(A, [rep])
            if nilpotence_index(A, K) is not None:
                J, grown = K, True
                break
    return J


def is_unit(A: StructureAlgebra, a) -> bool:
    return A.inverse(a) is not None


# -- centrally essential -----------------------------------------------------------------

class _CentralTest:
    """Decides whether r C meets C in a nonzero element for a fixed center C."""

    def __init__(self, A: StructureAlgebra, C: Subspace | None = None):
        self.A = A
        self.C = center(A) if C is None else C
        self.Cb = self.C.basis
        # v in C  <=>  v @ Q == 0
        self.Q = left_kernel(self.Cb.T % A.p, A.p).T if self.C.rank < A.dim else None

    def kernel(self, r) -> np.ndarray:
        """Basis (as central elements) of {c in C : r c in C}."""
        A = self.A
        M = self.Cb @ A.left_mult(r) % A.p
        if self.Q is None:
            return self.Cb
        lam = left_kernel(M @ self.Q % A.p, A.p)
        return lam @ self.Cb % A.p if lam.shape[0] else np.zeros((0, A.dim), dtype=np.int64)

    def witness_pair(self, r):
        """Nonzero central (c, d) with r c = d, or None."""
        A = self.A
        for c in self.kernel(r):
            d = A.mult(r, c)
            if d.any():
                return c, d
        return None

    def meets(self, r) -> bool:
        return self.witness_pair(r) is not None

    def misses_exactly(self, r) -> bool:
        """Independent recheck: r C and C intersect in 0 (dimension count)."""
        A = self.A
        rC = A.span(self.Cb @ A.left_mult(r) % A.p)
        return (rC & self.C).is_zero()


def centrally_essential_exhaustive(A: StructureAlgebra, budget: int = DEFAULT_BUDGET) -> Certificate:
    watch = Stopwatch()
    enum = Enumerator(A, budget, "exhaustive centrally-essential check")
    test = _CentralTest(A)
    E = enum.elements
    for r in E[1:]:
        if not test.meets(r):
            return refute(
                "centrally_essential", r, lambda: test.misses_exactly(r), Method.EXHAUSTIVE,
                millis=watch.millis, clause=CE_CLAUSE,
                detail=f"r C meets C only in 0; dim C = {test.C.rank}",
            )
    return Certificate(
        "centrally_essential", Verdict.TRUE, Method.EXHAUSTIVE, millis=watch.millis,
        clause=CE_CLAUSE, detail=f"{enum.count - 1} nonzero elements checked; dim C = {test.C.rank}",
    )


def socle_over_center(A: StructureAlgebra, C: Subspace | None = None) -> tuple[Subspace, Subspace, Subspace]:
    """(C, J(C), Soc(A_C)) with Soc(A_C) = {r : r J(C) = 0}."""
    C = center(A) if C is None else C
    JC = nilradical_commutative(A, C)
    soc = A.full() if JC.is_zero() else annihilator(A, JC, "left")
    return C, JC, soc


def centrally_essential_socle(A: StructureAlgebra, budget: int = DEFAULT_BUDGET) -> Certificate:
    """C is essential in A_C iff every simple C-submodule of A lies in C,
    i.e. iff Soc(A_C) = ann_A(J(C)) is contained in C."""
    watch = Stopwatch()
    C, JC, soc = socle_over_center(A)
    detail = f"dim C = {C.rank}, dim J(C) = {JC.rank}, dim Soc(A_C) = {soc.rank}"
    if soc.issubspace(C):
        return Certificate(
            "centrally_essential", Verdict.TRUE, Method.SOCLE, millis=watch.millis,
            clause=CE_CLAUSE, detail=detail,
        )
    test = _CentralTest(A, C)
    if A.p**soc.rank <= budget:
        for r in soc.elements()[1:]:
            if not test.meets(r):
                return refute(
                    "centrally_essential", r, lambda: test.misses_exactly(r), Method.SOCLE,
                    millis=watch.millis, clause=CE_CLAUSE,
                    detail=detail + "; witness found in Soc(A_C)",
                )
    return Certificate(
        "centrally_essential", Verdict.UNKNOWN, Method.SOCLE, millis=watch.millis,
        clause=CE_CLAUSE,
        detail=detail + "; Soc(A_C) not inside C but no witness found within budget",
    )


def is_centrally_essential(A: StructureAlgebra, method: str = "socle", budget: int = DEFAULT_BUDGET) -> Certificate:
    if method == "socle":
        return centrally_essential_socle(A, budget)
    if method == "exhaustive":
        return centrally_essential_exhaustive(A, budget)
    raise ConfigurationError(f"unknown method {method!r}; use 'socle' or 'exhaustive'")


def central_witness(A: StructureAlgebra, r) -> tuple[np.ndarray, np.ndarray] | None:
    """Nonzero central (c, d) with r c = d, if any."""
    return _CentralTest(A).witness_pair(r)
