"""Property suite for finite centrally essential rings.

Each check returns one certificate. A check whose hypothesis fails on the
given ring reports ``not-applicable`` and names the failed hypothesis.
"""
from __future__ import annotations

import numpy as np

from .algebra import StructureAlgebra
from .certificate import Certificate, Method, Stopwatch, Verdict, refute
from .decide import (
    annihilator, center, centrally_essential_exhaustive, centrally_essential_socle,
    ideal_closure, is_ideal, jacobson_radical,
)
from .exhaustive import DEFAULT_BUDGET, Enumerator
from .linalg import Subspace
from .structure import (
    ZeroDivisors, completely_prime, set_as_subspace, singular_ideal, uniform, uniserial,
    zero_divisor_analysis,
)

CLAUSES = {
    "zero_divisor_ideal_completely_prime":
        "if the left zero-divisors form an ideal, that ideal is completely prime",
    "zero_divisors_two_sided":
        "in a centrally essential ring one-sided zero-divisors are two-sided",
    "uniform_left_iff_right":
        "a centrally essential ring is left uniform exactly when it is right uniform",
    "singular_ideal_is_zero_divisor_set":
        "in a right uniform centrally essential ring the right singular ideal is the set "
        "of zero-divisors and is completely prime",
    "quotient_by_zero_divisor_ideal_commutative":
        "modulo a proper ideal holding every left zero-divisor, a centrally essential ring "
        "is commutative",
    "annihilator_of_central_zero_divisor_ideal_central":
        "the left annihilator of an ideal holding every central zero-divisor is central",
    "singular_ideals_coincide":
        "in a right uniform centrally essential ring the left and right singular ideals agree",
    "completely_prime_ideal_absorbs_units":
        "in a right uniserial ring, a P = P for a completely prime P and every a outside P",
}


def _na(name: str, why: str) -> Certificate:
    return Certificate(name, Verdict.NOT_APPLICABLE, Method.STRUCTURAL, clause=CLAUSES[name],
                       detail=f"hypothesis fails: {why}")


def _ok(name: str, watch: Stopwatch, detail: str = "", method=Method.EXHAUSTIVE) -> Certificate:
    return Certificate(name, Verdict.TRUE, method, millis=watch.millis, clause=CLAUSES[name],
                       detail=detail)


def _fail(name: str, witness, recheck, watch: Stopwatch, detail: str) -> Certificate:
    return refute(name, witness, recheck, Method.EXHAUSTIVE, millis=watch.millis,
                  clause=CLAUSES[name], detail=detail)


class PropertySuite:
    """Shares the expensive scans (elements, zero-divisors, singular ideals) across checks."""

    def __init__(self, A: StructureAlgebra, budget: int = DEFAULT_BUDGET):
        self.A = A
        self.budget = budget
        self.enum = Enumerator(A, budget, "property suite")
        self.C = center(A)
        self.J = jacobson_radical(A, budget)
        self.ce = centrally_essential_exhaustive(A, budget)
        self.ce_socle = centrally_essential_socle(A, budget)
        self.zd: ZeroDivisors = zero_divisor_analysis(A, budget, self.enum)
        self.uniform_right = uniform(A, "right", budget, self.enum)
        self.uniform_left = uniform(A, "left", budget, self.enum)
        self.uniserial_right = uniserial(A, "right", budget, self.enum)
        self._sing: dict[str, Subspace] = {}

    def sing(self, side: str) -> Subspace:
        if side not in self._sing:
            self._sing[side] = singular_ideal(self.A, side, self.budget, self.enum, self.zd)
        return self._sing[side]

    @property
    def is_ce(self) -> bool:
        return self.ce.holds

    def zero_divisor_set(self) -> np.ndarray:
        return self.enum.elements[self.zd.left]

    # -- the checks -------------------------------------------------------------------

    def zero_divisor_ideal_completely_prime(self) -> Certificate:
        name, watch = "zero_divisor_ideal_completely_prime", Stopwatch()
        B = set_as_subspace(self.A, self.zero_divisor_set())
        if B is None or not is_ideal(self.A, B):
            return _na(name, "the left zero-divisors do not form an ideal")
        cert = completely_prime(self.A, B, self.budget)
        cert.property, cert.clause = name, CLAUSES[name]
        cert.millis = watch.millis
        return cert

    def zero_divisors_two_sided(self) -> Certificate:
        name = "zero_divisors_two_sided"
        if not self.is_ce:
            return _na(name, "not centrally essential")
        cert = self.zd.two_sided
        return Certificate(name, cert.verdict, cert.method, witness=cert.witness, millis=cert.millis,
                           clause=CLAUSES[name], detail=cert.detail)

    def uniform_left_iff_right(self) -> Certificate:
        name, watch = "uniform_left_iff_right", Stopwatch()
        if not self.is_ce:
            return _na(name, "not centrally essential")
        r, l = self.uniform_right, self.uniform_left
        detail = f"right uniform: {r.verdict.value}, left uniform: {l.verdict.value}"
        if r.verdict is not l.verdict:
            w = (l if r.holds else r).witness
            return _fail(name, w, lambda: True, watch, detail)
        return _ok(name, watch, detail)

    def singular_ideal_is_zero_divisor_set(self) -> Certificate:
        name, watch = "singular_ideal_is_zero_divisor_set", Stopwatch()
        if not self.is_ce:
            return _na(name, "not centrally essential")
        if not self.uniform_right.holds:
            return _na(name, "not right uniform")
        S = self.sing("right")
        in_sing = np.zeros(self.enum.count, dtype=bool)
        in_sing[self.enum.index(S.elements())] = True
        diff = np.flatnonzero(in_sing != self.zd.left)
        if diff.size:
            a = self.enum.elements[int(diff[0])]
            return _fail(name, a, lambda: S.contains(a) != bool(self.zd.left[int(diff[0])]), watch,
                         "element in exactly one of Sing and the zero-divisor set")
        cp = completely_prime(self.A, S, self.budget)
        if not cp.holds:
            return _fail(name, cp.witness, lambda: True, watch, "Sing is not completely prime")
        return _ok(name, watch, f"dim Sing = {S.rank}, {int(in_sing.sum())} elements")

    def quotient_by_zero_divisor_ideal_commutative(self) -> Certificate:
        name, watch = "quotient_by_zero_divisor_ideal_commutative", Stopwatch()
        if not self.is_ce:
            return _na(name, "not centrally essential")
        A = self.A
        B = ideal_closure(A, self.zero_divisor_set())
        if B.is_full():
            return _na(name, "the zero-divisors generate the whole ring")
        # [r + b, s + b'] = [r, s] mod B, so coset representatives decide it
        reps = B.coset_representatives()
        prods = A.products(reps, reps).reshape(len(reps), len(reps), A.dim)
        comm = (prods - prods.transpose(1, 0, 2)) % A.p
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if not B.contains(comm[i, j]):
                    a, b = reps[i], reps[j]
                    return _fail(name, {"a": a, "b": b},
                                 lambda: not B.contains((A.mult(a, b) - A.mult(b, a)) % A.p),
                                 watch, "commutator outside B")
        return _ok(name, watch, f"B = ideal generated by zero-divisors, dim {B.rank}; "
                                f"{len(reps)} cosets")

    def annihilator_of_central_zero_divisor_ideal_central(self) -> Certificate:
        name, watch = "annihilator_of_central_zero_divisor_ideal_central", Stopwatch()
        if not self.is_ce:
            return _na(name, "not centrally essential")
        A = self.A
        central = self.C.elements()
        czd = central[self.zd.left[self.enum.index(central)]]
        B = ideal_closure(A, czd) if czd.any() else A.zero_space()
        ann = A.full() if B.is_zero() else annihilator(A, B, "left")
        for v in ann.basis:
            if not self.C.contains(v):
                return _fail(name, v, lambda: not self.C.contains(v), watch,
                             "element of the left annihilator is not central")
        return _ok(name, watch, f"dim B = {B.rank}, dim l.Ann(B) = {ann.rank}, dim C = {self.C.rank}",
                   Method.STRUCTURAL)

    def singular_ideals_coincide(self) -> Certificate:
        name, watch = "singular_ideals_coincide", Stopwatch()
        if not self.is_ce:
            return _na(name, "not centrally essential")
        if not self.uniform_right.holds:
            return _na(name, "not right uniform")
        R, L = self.sing("right"), self.sing("left")
        if R != L:
            extra = next(v for v in list(R.basis) + list(L.basis) if not (R.contains(v) and L.contains(v)))
            return _fail(name, extra, lambda: R.contains(extra) != L.contains(extra), watch,
                         f"dim right Sing = {R.rank}, dim left Sing = {L.rank}")
        return _ok(name, watch, f"both have dim {R.rank}")

    def completely_prime_ideal_absorbs_units(self) -> Certificate:
        name, watch = "completely_prime_ideal_absorbs_units", Stopwatch()
        if not self.uniserial_right.holds:
            return _na(name, "not right uniserial")
        A = self.A
        candidates = [self.J, self.sing("right")]
        B = set_as_subspace(A, self.zero_divisor_set())
        if B is not None and is_ideal(A, B):
            candidates.append(B)
        primes = []
        for P in candidates:
            if P not in primes and completely_prime(A, P, self.budget).holds:
                primes.append(P)
        if not primes:
            return _na(name, "no completely prime ideal among J, Sing and the zero-divisor set")
        E = self.enum.elements
        tested = 0
        for P in primes:
            for a in E:
                if P.contains(a):
                    continue
                tested += 1
                aP = A.span(A.products([a], P.basis)) if P.rank else A.zero_space()
                if aP != P:
                    return _fail(name, {"a": a, "P": P.basis}, lambda: aP != P, watch,
                                 f"a P has dim {aP.rank}, P has dim {P.rank}")
        return _ok(name, watch, f"{len(primes)} completely prime ideal(s), {tested} elements a")

    def run(self) -> list[Certificate]:
        return [getattr(self, name)() for name in CLAUSES]


def property_suite(A: StructureAlgebra, budget: int = DEFAULT_BUDGET) -> list[Certificate]:
    return PropertySuite(A, budget).run()
