"""Zero divisors, singular ideals and the one-shot structural checks."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigurationError, ContractError
from .algebra import StructureAlgebra
from .certificate import Certificate, Method, Stopwatch, Verdict, refute
from .decide import (
    annihilator, ideal_violation, is_ideal, jacobson_radical, nilpotence_index, require_ideal,
)
from .exhaustive import DEFAULT_BUDGET, Enumerator, check_budget
from .linalg import Subspace, batch_rank, left_kernel

_CHUNK = 4096


def _sides(side: str) -> str:
    if side not in ("left", "right"):
        raise ConfigurationError(f"side must be 'left' or 'right', got {side!r}")
    return side


@dataclass
class ZeroDivisors:
    """Index masks over the lexicographic element list (0 is counted in both)."""

    left: np.ndarray
    right: np.ndarray
    two_sided: Certificate

    def left_elements(self, enum: Enumerator) -> np.ndarray:
        return enum.elements[self.left]


def zero_divisor_masks(enum: Enumerator) -> tuple[np.ndarray, np.ndarray]:
    """a is a left zero-divisor iff a x = 0 for some x != 0, i.e. x -> a x is singular."""
    A, E = enum.A, enum.elements
    left = np.zeros(len(E), dtype=bool)
    right = np.zeros(len(E), dtype=bool)
    for s in range(0, len(E), _CHUNK):
        chunk = E[s:s + _CHUNK]
        L = np.tensordot(chunk, A.mul, axes=(1, 0)) % A.p     # x -> a x
        R = np.tensordot(chunk, A.mul, axes=(1, 1)) % A.p     # x -> x a
        left[s:s + _CHUNK] = batch_rank(L, A.p) < A.dim
        right[s:s + _CHUNK] = batch_rank(R, A.p) < A.dim
    return left, right


def zero_divisor_analysis(A: StructureAlgebra, budget: int = DEFAULT_BUDGET,
                          enum: Enumerator | None = None) -> ZeroDivisors:
    watch = Stopwatch()
    enum = enum or Enumerator(A, budget, "zero-divisor scan")
    left, right = zero_divisor_masks(enum)
    diff = np.flatnonzero(left != right)
    clause = "every one-sided zero-divisor is a two-sided zero-divisor"
    if diff.size:
        i = int(diff[0])
        r = enum.elements[i]
        cert = refute(
            "zero_divisors_two_sided", r,
            lambda: bool(left_kernel(A.left_mult(r), A.p).shape[0]) != bool(
                left_kernel(A.right_mult(r), A.p).shape[0]),
            Method.EXHAUSTIVE, millis=watch.millis, clause=clause,
            detail="left zero-divisor" if left[i] else "right zero-divisor",
        )
    else:
        cert = Certificate(
            "zero_divisors_two_sided", Verdict.TRUE, Method.EXHAUSTIVE, millis=watch.millis,
            clause=clause, detail=f"{int(left.sum())} zero-divisors (including 0) on each side",
        )
    return ZeroDivisors(left, right, cert)


def singular_ideal(A: StructureAlgebra, side: str = "right", budget: int = DEFAULT_BUDGET,
                   enum: Enumerator | None = None, zd: ZeroDivisors | None = None) -> Subspace:
    """Right: {a : r.Ann(a) meets every nonzero bA}; left: {a : l.Ann(a) meets every Ab}.

    Only zero-divisors can qualify, and r.Ann(ta) = r.Ann(a) for scalars t != 0,
    so one normalized representative per line of zero-divisors is tested.
    """
    _sides(side)
    enum = enum or Enumerator(A, budget, f"{side} singular ideal")
    if zd is None:
        left, right = zero_divisor_masks(enum)
    else:
        left, right = zd.left, zd.right
    mask = left if side == "right" else right
    E = enum.elements
    first = E[np.arange(len(E)), (E != 0).argmax(axis=1)]
    cand = E[mask & (first == 1)]
    verdicts: dict[Subspace, bool] = {}
    members = [np.zeros(A.dim, dtype=np.int64)]
    for a in cand:
        ann = annihilator(A, a, side)
        if ann not in verdicts:
            verdicts[ann] = not ann.is_zero() and enum.meets_all(ann, side)[0]
        if verdicts[ann]:
            members.extend(t * a % A.p for t in range(1, A.p))
    S = A.span(np.array(members))
    if enum.p**S.rank != len(members):
        raise ContractError(f"{side} singular set is not closed under addition",
                            witness={"size": len(members), "span_rank": S.rank})
    require_ideal(A, S, f"{side} singular ideal")
    return S


def set_as_subspace(A: StructureAlgebra, vectors: np.ndarray) -> Subspace | None:
    """The span of ``vectors`` if they already form a subspace, else None."""
    S = A.span(vectors) if len(vectors) else A.zero_space()
    return S if A.p**S.rank == len(vectors) else None


# -- structural checks ---------------------------------------------------------------------

def uniform(A: StructureAlgebra, side: str = "right", budget: int = DEFAULT_BUDGET,
            enum: Enumerator | None = None) -> Certificate:
    """Uniform iff the smallest nonzero principal ideal lies in every other one.

    If that ideal S misses some P, then S and P meet in 0: a nonzero
    intersection would contain a principal ideal strictly smaller than S.
    """
    _sides(side)
    watch = Stopwatch()
    enum = enum or Enumerator(A, budget, f"{side} uniform check")
    ideals = sorted(enum.principal_ideals(side), key=lambda P: P.size)
    S = ideals[0]
    clause = f"any two nonzero {side} ideals intersect nontrivially"
    for P in ideals[1:]:
        if not S.space <= P.space:
            return refute(
                f"uniform_{side}", {"a": S.generator, "b": P.generator},
                lambda: (S.space & P.space).is_zero(), Method.EXHAUSTIVE,
                millis=watch.millis, clause=clause,
                detail=f"the principal {side} ideals of a and b meet only in 0",
            )
    return Certificate(f"uniform_{side}", Verdict.TRUE, Method.EXHAUSTIVE, millis=watch.millis,
                       clause=clause, detail=f"{len(ideals)} principal {side} ideals share a minimal one")


def uniserial(A: StructureAlgebra, side: str = "right", budget: int = DEFAULT_BUDGET,
              enum: Enumerator | None = None) -> Certificate:
    """Principal ideals sorted by size must form a chain; a break is an incomparable pair."""
    _sides(side)
    watch = Stopwatch()
    enum = enum or Enumerator(A, budget, f"{side} uniserial check")
    ideals = sorted(enum.principal_ideals(side), key=lambda P: P.size)
    clause = f"the {side} ideals are linearly ordered by inclusion"
    for P, Q in zip(ideals, ideals[1:]):
        if not P.space <= Q.space:
            return refute(
                f"uniserial_{side}", {"a": P.generator, "b": Q.generator},
                lambda: not P.space <= Q.space and not Q.space <= P.space,
                Method.EXHAUSTIVE, millis=watch.millis, clause=clause,
                detail=f"the principal {side} ideals of a and b are incomparable",
            )
    return Certificate(f"uniserial_{side}", Verdict.TRUE, Method.EXHAUSTIVE, millis=watch.millis,
                       clause=clause, detail=f"chain of {len(ideals)} nonzero principal {side} ideals")


def local(A: StructureAlgebra, budget: int = DEFAULT_BUDGET, J: Subspace | None = None) -> Certificate:
    """Every element outside J(A) is a unit.

    r + j is a unit iff r is (j is quasi-regular), so one representative per
    nonzero coset of J is enough.
    """
    watch = Stopwatch()
    J = jacobson_radical(A, budget) if J is None else J
    check_budget(A.p ** (A.dim - J.rank), budget, "local check")
    clause = "the non-units form an ideal"
    for r in J.coset_representatives()[1:]:
        if A.inverse(r) is None:
            return refute("local", r, lambda: A.inverse(r) is None, Method.STRUCTURAL,
                          millis=watch.millis, clause=clause,
                          detail=f"non-unit outside J(A), dim J = {J.rank}")
    return Certificate("local", Verdict.TRUE, Method.STRUCTURAL, millis=watch.millis, clause=clause,
                       detail=f"dim J = {J.rank}; all {A.p ** (A.dim - J.rank) - 1} nonzero cosets are units")


def essential_right_ideal(A: StructureAlgebra, I: Subspace, budget: int = DEFAULT_BUDGET,
                          enum: Enumerator | None = None) -> Certificate:
    watch = Stopwatch()
    if not is_ideal(A, I, "right"):
        raise ContractError("input is not a right ideal")
    enum = enum or Enumerator(A, budget, "essential right ideal check")
    clause = "the right ideal meets every nonzero right ideal"
    ok, P = enum.meets_all(I, "right")
    if not ok:
        return refute("essential_right_ideal", P.generator, lambda: (P.space & I).is_zero(),
                      Method.EXHAUSTIVE, millis=watch.millis, clause=clause,
                      detail="the principal right ideal of the witness meets I only in 0")
    return Certificate("essential_right_ideal", Verdict.TRUE, Method.EXHAUSTIVE,
                       millis=watch.millis, clause=clause)


def completely_prime(A: StructureAlgebra, P: Subspace, budget: int = DEFAULT_BUDGET) -> Certificate:
    """P proper and a, b outside P force ab outside P (decided on coset representatives)."""
    watch = Stopwatch()
    require_ideal(A, P, "completely_prime input")
    clause = "a proper ideal with ab in P only if a or b is in P"
    if P.is_full():
        return refute("completely_prime", {"reason": "P = A"}, lambda: True, Method.STRUCTURAL,
                      millis=watch.millis, clause=clause, detail="P is not proper")
    reps = P.coset_representatives()[1:]
    check_budget(len(reps) ** 2, budget, "completely prime check")
    prods = A.products(reps, reps)
    inside = np.array([P.contains(v) for v in prods])
    if inside.any():
        k = int(np.flatnonzero(inside)[0])
        a, b = reps[k // len(reps)], reps[k % len(reps)]
        return refute("completely_prime", {"a": a, "b": b}, lambda: P.contains(A.mult(a, b)),
                      Method.EXHAUSTIVE, millis=watch.millis, clause=clause,
                      detail="a, b outside P with ab in P")
    return Certificate("completely_prime", Verdict.TRUE, Method.EXHAUSTIVE, millis=watch.millis,
                       clause=clause, detail=f"{len(reps)} nonzero cosets of P")


def nilpotence_certificate(A: StructureAlgebra, I: Subspace) -> Certificate:
    require_ideal(A, I, "nilpotence input")
    n = nilpotence_index(A, I)
    if n is None:
        return refute("nilpotence_index", {"power": A.dim + 1}, lambda: True, Method.STRUCTURAL,
                      detail=f"I^{A.dim + 1} != 0")
    return Certificate("nilpotence_index", Verdict.TRUE, Method.STRUCTURAL, witness=n,
                       detail=f"I^{n} = 0 and I^{n - 1} != 0")


def ideal_certificate(A: StructureAlgebra, S: Subspace) -> Certificate:
    w = ideal_violation(A, S)
    if w is not None:
        return Certificate("is_ideal", Verdict.FALSE, Method.STRUCTURAL, witness=w)
    return Certificate("is_ideal", Verdict.TRUE, Method.STRUCTURAL)


def commutative(A: StructureAlgebra) -> Certificate:
    T = A.mul
    bad = np.argwhere((T != T.transpose(1, 0, 2)).any(axis=2))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        return Certificate("commutative", Verdict.FALSE, Method.STRUCTURAL,
                           witness={"a": A.basis_names[i], "b": A.basis_names[j]},
                           detail="ab != ba on these basis elements", clause="ab = ba for all a, b")
    return Certificate("commutative", Verdict.TRUE, Method.STRUCTURAL, clause="ab = ba for all a, b")


STRUCTURAL_CHECKS = (
    "uniform_right", "uniform_left", "uniserial_right", "uniserial_left", "local",
    "essential_right_ideal", "completely_prime", "nilpotence_index", "is_ideal", "commutative",
)


def structural_checks(A: StructureAlgebra, which: str, target: Subspace | None = None,
                      budget: int = DEFAULT_BUDGET) -> Certificate:
    """Dispatch one named check; ideal-valued checks take ``target``."""
    if which not in STRUCTURAL_CHECKS:
        raise ConfigurationError(f"unknown check {which!r}; choose from {', '.join(STRUCTURAL_CHECKS)}")
    if which.startswith("uniform_"):
        return uniform(A, which.split("_")[1], budget)
    if which.startswith("uniserial_"):
        return uniserial(A, which.split("_")[1], budget)
    if which == "local":
        return local(A, budget)
    if which == "commutative":
        return commutative(A)
    if target is None:
        raise ConfigurationError(f"check {which!r} needs a subspace argument")
    if which == "essential_right_ideal":
        return essential_right_ideal(A, target, budget)
    if which == "completely_prime":
        return completely_prime(A, target, budget)
    if which == "nilpotence_index":
        return nilpotence_certificate(A, target)
    return ideal_certificate(A, target)
