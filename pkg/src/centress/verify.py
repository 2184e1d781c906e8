"""The acceptance suite: finite corpus checks plus the twisted-ring suites, each timed."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .constructions.buildspec import build
from .constructions.twisted import TwistedConfig
from .constructions.twisted_suite import DEFAULT_IDENTITY_SAMPLES, identity_suite
from .finalg.certificate import Certificate, Method, Verdict
from .finalg.decide import (
    central_witness, centrally_essential_exhaustive, centrally_essential_socle,
)
from .finalg.exhaustive import DEFAULT_BUDGET
from .finalg.structure import commutative, local
from .finalg.suite import property_suite
from .valuation import DEFAULT_SAMPLES, DEFAULT_SEED, representation_check, structure_suite

CORPUS = (
    "group:q8,p=2", "exterior:p=3,d=1", "exterior:p=3,d=2", "exterior:p=3,d=3",
    "truncpoly:p=2,n=2", "truncpoly:p=3,n=3", "diag:p=2,k=2", "matrix:p=2,N=2",
    "group:c2,p=2", "group:c3,p=2",
)
TWISTED_CONFIGS = tuple(TwistedConfig(p, n) for p in (2, 3, 5) for n in (2, 3, 4))
EXTERIOR_EXPECTED = {1: True, 2: False, 3: True, 4: False, 5: True}
EXTERIOR_EXHAUSTIVE_MAX_D = 3
GATING_CONTROL = "diag:p=2,k=2"
UNIFORM_GATED = ("singular_ideal_is_zero_divisor_set", "singular_ideals_coincide")


@dataclass
class VerifyConfig:
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    budget: int = DEFAULT_BUDGET
    configs: tuple = TWISTED_CONFIGS


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float | None
    certificates: list[Certificate] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def in_time(self) -> bool:
        return self.limit is None or self.seconds <= self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time

    def line(self) -> str:
        limit = "no limit" if self.limit is None else f"limit {self.limit:g} s"
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.passed else "; " + "; ".join(self.notes)
        late = "" if self.in_time else " (over time)"
        return f"[{status}] {self.number}. {self.title}: {self.seconds:.2f} s, {limit}{late}{extra}"

    def to_json(self) -> dict:
        return {
            "number": self.number, "title": self.title, "passed": self.passed, "ok": self.ok,
            "seconds": round(self.seconds, 3), "limit": self.limit, "notes": self.notes,
        }


def _expect(cert: Certificate, verdict: Verdict, what: str, notes: list[str]) -> bool:
    if cert.verdict is not verdict:
        notes.append(f"{what}: expected {verdict.value}, got {cert.verdict.value}")
        return False
    return True


def _all_true(certs: list[Certificate], notes: list[str], label: str = "") -> bool:
    bad = [c for c in certs if c.verdict is not Verdict.TRUE]
    for c in bad:
        notes.append(f"{label}{c.property}: {c.verdict.value} ({c.detail})")
    return not bad


def criterion_q8(cfg: VerifyConfig) -> tuple[bool, list, list]:
    A = build("group:q8,p=2")
    notes: list[str] = []
    certs = [centrally_essential_socle(A, cfg.budget), centrally_essential_exhaustive(A, cfg.budget),
             local(A, cfg.budget), commutative(A)]
    ok = all(_expect(c, v, w, notes) for c, v, w in zip(
        certs, (Verdict.TRUE, Verdict.TRUE, Verdict.TRUE, Verdict.FALSE),
        ("ce (socle)", "ce (exhaustive)", "local", "commutative")))
    return ok, certs, notes


def criterion_exterior(cfg: VerifyConfig) -> tuple[bool, list, list]:
    notes: list[str] = []
    certs, ok = [], True
    for d, expected in EXTERIOR_EXPECTED.items():
        A = build(f"exterior:p=3,d={d}")
        want = Verdict.of(expected)
        socle = centrally_essential_socle(A, cfg.budget)
        certs.append(socle)
        ok &= _expect(socle, want, f"d={d} (socle)", notes)
        if d <= EXTERIOR_EXHAUSTIVE_MAX_D:
            ex = centrally_essential_exhaustive(A, cfg.budget)
            certs.append(ex)
            ok &= _expect(ex, want, f"d={d} (exhaustive)", notes)
    return ok, certs, notes


def criterion_m2(cfg: VerifyConfig) -> tuple[bool, list, list]:
    A = build("matrix:p=2,N=2")
    notes: list[str] = []
    cert = centrally_essential_exhaustive(A, cfg.budget)
    ok = _expect(cert, Verdict.FALSE, "ce", notes)
    if ok:
        r = np.array(cert.witness, dtype=np.int64)
        if not r.any() or central_witness(A, r) is not None:
            notes.append("witness does not re-verify")
            ok = False
    return ok, [cert], notes


def criterion_socle_agreement(cfg: VerifyConfig) -> tuple[bool, list, list]:
    notes: list[str] = []
    certs, ok = [], True
    for spec in CORPUS:
        A = build(spec)
        s, e = centrally_essential_socle(A, cfg.budget), centrally_essential_exhaustive(A, cfg.budget)
        certs += [s, e]
        if s.verdict is not e.verdict or s.verdict is Verdict.UNKNOWN:
            notes.append(f"{spec}: socle {s.verdict.value}, exhaustive {e.verdict.value}")
            ok = False
    return ok, certs, notes


def criterion_property_suites(cfg: VerifyConfig) -> tuple[bool, list, list]:
    notes: list[str] = []
    certs, ok = [], True
    for spec in CORPUS:
        A = build(spec)
        if not centrally_essential_socle(A, cfg.budget).holds:
            continue
        results = property_suite(A, cfg.budget)
        certs += results
        for c in results:
            if c.verdict not in (Verdict.TRUE, Verdict.NOT_APPLICABLE):
                notes.append(f"{spec}: {c.property} is {c.verdict.value}")
                ok = False
        if spec == GATING_CONTROL:
            gated = {c.property: c.verdict for c in results if c.property in UNIFORM_GATED}
            if any(v is not Verdict.NOT_APPLICABLE for v in gated.values()):
                notes.append(f"{spec}: uniform-gated checks ran on a non-uniform ring")
                ok = False
    return ok, certs, notes


def _twisted(cfg: VerifyConfig, run: Callable[[TwistedConfig], list[Certificate]]):
    notes: list[str] = []
    certs = []
    for tc in cfg.configs:
        certs += run(tc)
    ok = _all_true(certs, notes)
    return ok, certs, notes


def criterion_identities(cfg: VerifyConfig):
    return _twisted(cfg, lambda tc: identity_suite(tc, DEFAULT_IDENTITY_SAMPLES, cfg.seed))


def criterion_structure(cfg: VerifyConfig):
    return _twisted(cfg, lambda tc: structure_suite(tc, cfg.samples, cfg.seed))


def criterion_representation(cfg: VerifyConfig):
    return _twisted(cfg, lambda tc: [representation_check(tc, cfg.samples, cfg.seed)])


# (number, title, runner, time limit in seconds, limit scales with the sample count)
CRITERIA = (
    (1, "F_2[Q8] is centrally essential, local and not commutative", criterion_q8, 1.0, False),
    (2, "exterior algebras over F_3 are centrally essential exactly for odd d", criterion_exterior,
     10.0, False),
    (3, "M_2(F_2) is not centrally essential, with a verified witness", criterion_m2, 1.0, False),
    (4, "socle criterion agrees with the definition on the finite corpus",
     criterion_socle_agreement, 30.0, False),
    (5, "property suites hold on every centrally essential corpus ring", criterion_property_suites,
     30.0, False),
    (6, "exact identities of the twisted matrix ring", criterion_identities, 60.0, False),
    (7, "randomized structure suite of the twisted ring", criterion_structure, 120.0, True),
    (8, "coefficient product agrees with the matrix model", criterion_representation, None, True),
)


def run_criterion(number: int, cfg: VerifyConfig | None = None) -> CriterionResult:
    cfg = cfg or VerifyConfig()
    for num, title, runner, limit, scales in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, certs, notes = runner(cfg)
            seconds = time.perf_counter() - start
            if limit is not None and scales:
                limit *= max(1.0, cfg.samples / DEFAULT_SAMPLES)
            return CriterionResult(num, title, passed, seconds, limit, certs, notes)
    raise KeyError(f"no acceptance criterion numbered {number}")


def verify_all(cfg: VerifyConfig | None = None,
               report: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    results = []
    for number, *_ in CRITERIA:
        r = run_criterion(number, cfg)
        if report:
            report(r)
        results.append(r)
    return results


def criterion_certificate(r: CriterionResult) -> Certificate:
    """Summarize one criterion as a certificate for reports."""
    if r.ok:
        return Certificate(f"acceptance_{r.number}", Verdict.TRUE, Method.STRUCTURAL,
                           millis=r.seconds * 1000, detail=r.title, clause=r.title)
    why = r.notes or [f"took {r.seconds:.2f} s, limit {r.limit} s"]
    return Certificate(f"acceptance_{r.number}", Verdict.FALSE, Method.STRUCTURAL,
                       witness=why, millis=r.seconds * 1000, detail=r.title, clause=r.title)
