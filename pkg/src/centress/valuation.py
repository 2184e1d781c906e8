"""Valuations, division and ideal comparison in the twisted ring, plus its randomized suites.

v(a) is the index of the first nonzero coefficient (n for a = 0); an element
of valuation k is a unit times pi^k. Right division a z = w and left division
z a = w are triangular in the coefficients: the twist D1(.)D2(.) only touches
the top slot and only involves the constant coefficients.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .constructions.twisted import (
    TwistedConfig, TwistedElement, commutator_matrix, f_matrix, matrix_product_equals, pi_matrix,
    product_equals, random_element, random_nonzero_element, to_matrix,
)
from .errors import ConfigurationError, DomainError
from .exactalg.ratfunc import D1, D2, RatFunc
from .exactalg.sampling import random_nonzero_ratfunc
from .finalg.certificate import Certificate, Method, Stopwatch, Verdict, refute

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 200


def valuation(a: TwistedElement) -> int:
    for k, c in enumerate(a.coeffs):
        if c:
            return k
    return a.cfg.n


def _zero(cfg: TwistedConfig) -> RatFunc:
    return RatFunc.constant(cfg.p, 0)


def solve(a: TwistedElement, w: TwistedElement, side: str = "right") -> TwistedElement | None:
    """z with a z = w (``right``) or z a = w (``left``); None when w is not in aA (Aa).

    Free coefficients (those above n - 1 - v(a)) are set to 0.
    """
    a._same(w)
    cfg, n = a.cfg, a.cfg.n
    k = valuation(a)
    if valuation(w) < k:
        return None
    if k == n:
        return TwistedElement.zero(cfg)
    al, wl = a.coeffs, w.coeffs
    lead_inv = al[k].inv()
    z = [_zero(cfg)] * n
    for m in range(k, n):
        rhs = wl[m]
        j = m - k
        if side == "right":
            # (a z)_m = sum_{i >= k} a_i z_{m-i} (+ D1(a0) D2(z0) at the top when k = 0)
            for i in range(k + 1, m + 1):
                if al[i] and z[m - i]:
                    rhs = rhs - al[i] * z[m - i]
            if m == n - 1 and k == 0 and j > 0:
                rhs = rhs - D1(al[0]) * D2(z[0])
        elif side == "left":
            # (z a)_m = sum_i z_i a_{m-i} (+ D1(z0) D2(a0) at the top when k = 0)
            for i in range(j):
                if z[i] and al[m - i]:
                    rhs = rhs - z[i] * al[m - i]
            if m == n - 1 and k == 0 and j > 0:
                rhs = rhs - D1(z[0]) * D2(al[0])
        else:
            raise ConfigurationError(f"side must be 'left' or 'right', got {side!r}")
        z[j] = rhs * lead_inv
    # n = 1 would put the twist on the single slot; TwistedConfig requires n >= 2
    return TwistedElement(cfg, z)


def invert(a: TwistedElement) -> TwistedElement:
    """Two-sided inverse of a unit (v(a) = 0), verified on both sides."""
    v = valuation(a)
    if v != 0:
        err = DomainError(f"element of valuation {v} is not a unit")
        err.valuation = v
        raise err
    one = TwistedElement.one(a.cfg)
    b = solve(a, one, "right")
    if not (product_equals(a, b, one) and product_equals(b, a, one)):
        raise AssertionError(f"inverse of {a} failed verification")
    return b


def is_central(a: TwistedElement) -> bool:
    """[a, f(b)] = (D1(a0) D2(b) - D1(b) D2(a0)) pi^(n-1) and pi commutes with a,
    so a is central iff both derivatives of a0 vanish."""
    a0 = a.coeffs[0]
    return not D1(a0) and not D2(a0)


def ce_witness(a: TwistedElement) -> tuple[TwistedElement, TwistedElement]:
    """Nonzero central (c, d) with a c = d."""
    if a.is_zero():
        raise DomainError("the zero element has no centrally essential witness")
    cfg = a.cfg
    c = TwistedElement.one(cfg) if is_central(a) else TwistedElement.pi_power(cfg, cfg.n - 1)
    d = a * c
    if not (c and d and is_central(c) and is_central(d)):
        raise AssertionError(f"witness for {a} failed verification")
    return c, d


class Comparison(str, Enum):
    LEFT_CONTAINS = "left_contains"      # first ideal strictly contains the second
    RIGHT_CONTAINS = "right_contains"    # second strictly contains the first
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass
class IdealComparison:
    relation: Comparison
    first_in_second: TwistedElement | None   # s with b s = a (right side) / s b = a (left)
    second_in_first: TwistedElement | None


def _divides(a: TwistedElement, b: TwistedElement, side: str) -> TwistedElement | None:
    """s with a s = b (right) or s a = b (left), re-verified; else None."""
    s = solve(a, b, side)
    if s is None:
        return None
    ok = product_equals(a, s, b) if side == "right" else product_equals(s, a, b)
    if not ok:
        raise AssertionError(f"division witness for {b} by {a} failed verification")
    return s


def ideal_compare(a: TwistedElement, b: TwistedElement, side: str = "right") -> IdealComparison:
    """Compare aA with bA (``right``) or Aa with Ab (``left``) by explicit division."""
    b_in_a = _divides(a, b, side)
    a_in_b = _divides(b, a, side)
    if b_in_a is not None and a_in_b is not None:
        rel = Comparison.EQUAL
    elif b_in_a is not None:
        rel = Comparison.LEFT_CONTAINS
    elif a_in_b is not None:
        rel = Comparison.RIGHT_CONTAINS
    else:
        rel = Comparison.INCOMPARABLE
    return IdealComparison(rel, a_in_b, b_in_a)


# -- randomized checks --------------------------------------------------------------------

def _cert(name: str, cfg: TwistedConfig, seed: int, samples: int, watch: Stopwatch,
          clause: str, failure=None, detail: str = "") -> Certificate:
    if failure is not None:
        witness, why = failure
        return refute(name, witness, lambda: True, Method.RANDOMIZED, seed=seed, samples=samples,
                      millis=watch.millis, clause=clause, detail=f"{cfg.describe()}: {why}")
    return Certificate(name, Verdict.TRUE, Method.RANDOMIZED, seed=seed, samples=samples,
                       millis=watch.millis, clause=clause, detail=f"{cfg.describe()}: {detail}")


def _pairs_by_valuation(cfg: TwistedConfig, rng: random.Random):
    """Random element whose valuation is drawn uniformly from 0..n-1."""
    a = random_nonzero_element(cfg, rng)
    k = rng.randrange(cfg.n)
    coeffs = [_zero(cfg)] * k + list(a.coeffs[: cfg.n - k])
    if not coeffs[k]:
        coeffs[k] = RatFunc.constant(cfg.p, 1 + rng.randrange(cfg.p - 1))
    return TwistedElement(cfg, coeffs)


def valuation_additivity_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                               seed: int = DEFAULT_SEED) -> Certificate:
    """v(ab) = v(a) + v(b) when the sum is below n, and ab = 0 otherwise."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "if a has valuation k and b valuation l, ab has valuation k + l"
    for _ in range(samples):
        a, b = _pairs_by_valuation(cfg, rng), _pairs_by_valuation(cfg, rng)
        va, vb = valuation(a), valuation(b)
        ab = a * b
        expected = min(va + vb, cfg.n)
        if valuation(ab) != expected:
            return _cert("valuation_additivity", cfg, seed, samples, watch, clause,
                         ({"a": str(a), "b": str(b)}, f"v(ab) = {valuation(ab)}, expected {expected}"))
    return _cert("valuation_additivity", cfg, seed, samples, watch, clause,
                 detail="all sampled pairs")


def unit_absorbs_radical_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                               seed: int = DEFAULT_SEED) -> Certificate:
    """For units a and w in pi A, a z = w has a solution z in pi A, so a (pi A) = pi A."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "a P = P for the completely prime ideal P = pi A and every a outside P"
    for _ in range(samples):
        a = random_element(cfg, rng)
        if not a.coeffs[0]:
            a = TwistedElement(cfg, (random_nonzero_ratfunc(rng, cfg.p),) + a.coeffs[1:])
        w = random_element(cfg, rng)
        w = TwistedElement(cfg, [_zero(cfg)] + list(w.coeffs[1:]))
        z = solve(a, w, "right")
        if z is None or valuation(z) < 1 or not product_equals(a, z, w):
            return _cert("unit_absorbs_radical", cfg, seed, samples, watch, clause,
                         ({"a": str(a), "w": str(w)}, "no solution z in pi A"))
    return _cert("unit_absorbs_radical", cfg, seed, samples, watch, clause, detail="all solvable")


def ce_witness_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                     seed: int = DEFAULT_SEED) -> Certificate:
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "every nonzero r has nonzero central c, d with r c = d"
    central = 0
    for _ in range(samples):
        a = random_nonzero_element(cfg, rng)
        try:
            c, _ = ce_witness(a)
        except AssertionError as exc:
            return _cert("centrally_essential", cfg, seed, samples, watch, clause, (str(a), str(exc)))
        central += c.coeffs[0].is_one()
    return _cert("centrally_essential", cfg, seed, samples, watch, clause,
                 detail=f"witness verified on every sample ({central} already central)")


def unit_characterization_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                                seed: int = DEFAULT_SEED) -> Certificate:
    """a is invertible iff v(a) = 0; inverses checked on both sides."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "the units are exactly the elements outside pi A"
    one = TwistedElement.one(cfg)
    for _ in range(samples):
        a = random_element(cfg, rng)
        v = valuation(a)
        if v == 0:
            try:
                invert(a)
            except AssertionError:
                return _cert("units_are_valuation_zero", cfg, seed, samples, watch, clause,
                             (str(a), "valuation 0 but no two-sided inverse"))
        elif solve(a, one, "right") is not None or solve(a, one, "left") is not None:
            return _cert("units_are_valuation_zero", cfg, seed, samples, watch, clause,
                         (str(a), f"valuation {v} but a one-sided inverse exists"))
    return _cert("units_are_valuation_zero", cfg, seed, samples, watch, clause,
                 detail="invert succeeds exactly on valuation 0")


def ideal_chain_check(cfg: TwistedConfig, side: str = "right", samples: int = 100,
                      seed: int = DEFAULT_SEED) -> Certificate:
    """Sampled principal ideals plus the generators pi^k fall into exactly n + 1 levels.

    Each sample a is shown equal to pi^{v(a)} A (witnesses both ways) and the
    levels pi^k A are shown strictly nested, so any two samples are comparable.
    """
    watch, rng = Stopwatch(), random.Random(seed)
    name = f"ideal_chain_{side}"
    clause = f"the {side} ideals form the chain A, pi A, ..., pi^(n-1) A, 0"
    gens = [TwistedElement.pi_power(cfg, k) for k in range(cfg.n + 1)]
    for k in range(cfg.n):
        cmp = ideal_compare(gens[k], gens[k + 1], side)
        if cmp.relation is not Comparison.LEFT_CONTAINS:
            return _cert(name, cfg, seed, samples, watch, clause,
                         ({"k": k}, f"pi^{k} and pi^{k + 1} give {cmp.relation.value}"))
    elems = [random_element(cfg, rng) for _ in range(samples)] + gens
    levels = set()
    for a in elems:
        k = valuation(a)
        cmp = ideal_compare(a, gens[k], side)
        if cmp.relation is not Comparison.EQUAL:
            return _cert(name, cfg, seed, samples, watch, clause,
                         (str(a), f"ideal differs from pi^{k}: {cmp.relation.value}"))
        levels.add(k)
    if len(levels) != cfg.n + 1:
        return _cert(name, cfg, seed, samples, watch, clause,
                     ({"levels": sorted(levels)}, f"{len(levels)} levels, expected {cfg.n + 1}"))
    return _cert(name, cfg, seed, samples, watch, clause,
                 detail=f"{len(elems)} ideals in {cfg.n + 1} levels")


def quasi_regular_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                        seed: int = DEFAULT_SEED) -> Certificate:
    """1 + a is a unit and a is not, for every sampled a in pi A."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "pi A is the Jacobson radical: its elements are non-units and 1 + a is a unit"
    one = TwistedElement.one(cfg)
    for _ in range(samples):
        a = random_element(cfg, rng)
        a = TwistedElement(cfg, [_zero(cfg)] + list(a.coeffs[1:]))
        if solve(a, one, "right") is not None:
            return _cert("radical_quasi_regular", cfg, seed, samples, watch, clause,
                         (str(a), "element of pi A is invertible"))
        try:
            invert(one + a)
        except (DomainError, AssertionError):
            return _cert("radical_quasi_regular", cfg, seed, samples, watch, clause,
                         (str(a), "1 + a is not invertible"))
    return _cert("radical_quasi_regular", cfg, seed, samples, watch, clause, detail="all samples")


def uniform_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED) -> Certificate:
    """pi^(n-1) lies in aA for every sampled a != 0, so nonzero right ideals share it."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "any two nonzero right ideals intersect nontrivially"
    top = TwistedElement.pi_power(cfg, cfg.n - 1)
    for _ in range(samples):
        a = random_nonzero_element(cfg, rng)
        if _divides(a, top, "right") is None:
            return _cert("uniform_right", cfg, seed, samples, watch, clause,
                         (str(a), "pi^(n-1) not in aA"))
    return _cert("uniform_right", cfg, seed, samples, watch, clause, detail="pi^(n-1) in every aA")


def centrality_agreement_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                               seed: int = DEFAULT_SEED) -> Certificate:
    """The closed-form centrality test agrees with matrix commutators against generators."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "a is central iff D1(a0) = D2(a0) = 0"
    gens = [f_matrix(cfg, cfg.x), f_matrix(cfg, cfg.y), f_matrix(cfg, cfg.x + cfg.y ** 2),
            pi_matrix(cfg)]
    hits = 0
    for t in range(samples):
        a = random_element(cfg, rng)
        if t % 4 == 0:
            # force some central samples with a nonzero constant coefficient
            c = RatFunc.constant(cfg.p, 1 + rng.randrange(cfg.p - 1))
            a = TwistedElement(cfg, (c,) + a.coeffs[1:])
        M = to_matrix(a)
        by_matrix = all(commutator_matrix(M, g).is_zero() for g in gens)
        if by_matrix != is_central(a):
            return _cert("centrality_closed_form", cfg, seed, samples, watch, clause,
                         (str(a), f"matrix test says {by_matrix}"))
        hits += by_matrix
    return _cert("centrality_closed_form", cfg, seed, samples, watch, clause,
                 detail=f"{hits} central samples")


def structure_suite(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                    seed: int = DEFAULT_SEED) -> list[Certificate]:
    chain = min(samples, 100)
    return [
        ce_witness_check(cfg, samples, seed),
        unit_characterization_check(cfg, samples, seed),
        valuation_additivity_check(cfg, samples, seed),
        ideal_chain_check(cfg, "right", chain, seed),
        ideal_chain_check(cfg, "left", chain, seed),
    ]


def extended_suite(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                   seed: int = DEFAULT_SEED) -> list[Certificate]:
    return [
        quasi_regular_check(cfg, samples, seed),
        uniform_check(cfg, samples, seed),
        unit_absorbs_radical_check(cfg, samples, seed),
        centrality_agreement_check(cfg, samples, seed),
    ]


def representation_check(cfg: TwistedConfig, samples: int = DEFAULT_SAMPLES,
                         seed: int = DEFAULT_SEED) -> Certificate:
    """to_matrix is additive and multiplicative on sampled pairs, and inverses hold as matrices."""
    watch, rng = Stopwatch(), random.Random(seed)
    clause = "the coefficient product agrees with the matrix product"
    E = to_matrix(TwistedElement.one(cfg))
    inverses = 0
    for _ in range(samples):
        a, b = random_element(cfg, rng), random_element(cfg, rng)
        Ma, Mb = to_matrix(a), to_matrix(b)
        if to_matrix(a + b) != Ma + Mb:
            return _cert("matrix_model", cfg, seed, samples, watch, clause,
                         ({"a": str(a), "b": str(b)}, "not additive"))
        if not matrix_product_equals(Ma, Mb, to_matrix(a * b)):
            return _cert("matrix_model", cfg, seed, samples, watch, clause,
                         ({"a": str(a), "b": str(b)}, "not multiplicative"))
        if valuation(a) == 0:
            Mi = to_matrix(invert(a))
            if not (matrix_product_equals(Ma, Mi, E) and matrix_product_equals(Mi, Ma, E)):
                return _cert("matrix_model", cfg, seed, samples, watch, clause,
                             (str(a), "inverse fails in the matrix model"))
            inverses += 1
    return _cert("matrix_model", cfg, seed, samples, watch, clause,
                 detail=f"{samples} pairs, {inverses} inverses checked as matrices")
