"""Exact identities of the twisted matrix ring, checked on matrices."""
from __future__ import annotations

import random

from ..exactalg.ratfunc import D1, D2
from ..exactalg.sampling import random_ratfunc
from ..finalg.certificate import Certificate, Method, Stopwatch, Verdict, refute
from .twisted import RatMatrix, TwistedConfig, commutator_matrix, f_matrix, pi_matrix

DEFAULT_IDENTITY_SAMPLES = 50


def _result(name, cfg, watch, clause, failure=None, detail="", seed=None, samples=None):
    if failure is not None:
        witness, why = failure
        return refute(name, witness, lambda: True, Method.STRUCTURAL, seed=seed, samples=samples,
                      millis=watch.millis, clause=clause, detail=f"{cfg.describe()}: {why}")
    return Certificate(name, Verdict.TRUE, Method.STRUCTURAL, seed=seed, samples=samples,
                       millis=watch.millis, clause=clause, detail=f"{cfg.describe()}: {detail}")


def pi_nilpotent(cfg: TwistedConfig) -> Certificate:
    watch = Stopwatch()
    pi = pi_matrix(cfg)
    top = pi ** (cfg.n - 1)
    clause = "pi^n = 0 and pi^(n-1) = e[1, N]"
    if not (pi ** cfg.n).is_zero():
        return _result("pi_nilpotent", cfg, watch, clause, ("pi^n", "pi^n != 0"))
    if top != RatMatrix.unit(cfg.N, cfg.p, 1, cfg.N):
        return _result("pi_nilpotent", cfg, watch, clause, (repr(top), "pi^(n-1) != e[1, N]"))
    return _result("pi_nilpotent", cfg, watch, clause, detail="both hold")


def f_commutes_with_pi(cfg: TwistedConfig, samples: int = DEFAULT_IDENTITY_SAMPLES,
                       seed: int = 42) -> Certificate:
    watch, rng = Stopwatch(), random.Random(seed)
    pi = pi_matrix(cfg)
    clause = "f(a) pi = pi f(a) = a pi"
    for _ in range(samples):
        a = random_ratfunc(rng, cfg.p)
        fa = f_matrix(cfg, a)
        if not (fa * pi == pi * fa == pi * a):
            return _result("f_commutes_with_pi", cfg, watch, clause, (str(a), "identity fails"),
                           seed=seed, samples=samples)
    return _result("f_commutes_with_pi", cfg, watch, clause, detail="all samples",
                   seed=seed, samples=samples)


def f_commutator_formula(cfg: TwistedConfig, samples: int = DEFAULT_IDENTITY_SAMPLES,
                         seed: int = 42) -> Certificate:
    watch, rng = Stopwatch(), random.Random(seed)
    top = pi_matrix(cfg) ** (cfg.n - 1)
    clause = "[f(a), f(b)] = (D1(a) D2(b) - D1(b) D2(a)) pi^(n-1)"
    for _ in range(samples):
        a, b = random_ratfunc(rng, cfg.p), random_ratfunc(rng, cfg.p)
        lhs = commutator_matrix(f_matrix(cfg, a), f_matrix(cfg, b))
        rhs = top * (D1(a) * D2(b) - D1(b) * D2(a))
        if lhs != rhs:
            return _result("f_commutator_formula", cfg, watch, clause,
                           ({"a": str(a), "b": str(b)}, "commutator mismatch"), seed=seed, samples=samples)
    return _result("f_commutator_formula", cfg, watch, clause, detail="all samples",
                   seed=seed, samples=samples)


def not_commutative(cfg: TwistedConfig) -> Certificate:
    watch = Stopwatch()
    top = pi_matrix(cfg) ** (cfg.n - 1)
    c = commutator_matrix(f_matrix(cfg, cfg.x), f_matrix(cfg, cfg.y))
    clause = "[f(x), f(y)] = pi^(n-1) != 0, so the ring is not commutative"
    if c != top or top.is_zero():
        return _result("not_commutative", cfg, watch, clause, (repr(c), "[f(x), f(y)] != pi^(n-1)"))
    return _result("not_commutative", cfg, watch, clause, detail="[f(x), f(y)] = e[1, N]")


def identity_suite(cfg: TwistedConfig, samples: int = DEFAULT_IDENTITY_SAMPLES,
                   seed: int = 42) -> list[Certificate]:
    return [
        pi_nilpotent(cfg),
        f_commutes_with_pi(cfg, samples, seed),
        f_commutator_formula(cfg, samples, seed),
        not_commutative(cfg),
    ]
