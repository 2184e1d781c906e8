"""Command-line entry point.

Exit codes: 0 when the overall verdict is true, 1 when it is false or
unknown, 2 on usage, input or resource errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import __version__
from .constructions.buildspec import build
from .constructions.twisted import TwistedConfig
from .constructions.twisted_suite import DEFAULT_IDENTITY_SAMPLES, identity_suite
from .errors import CentressError, ConfigurationError, SchemaError
from .finalg.algebra import StructureAlgebra
from .finalg.certificate import Certificate, Verdict
from .finalg.decide import centrally_essential_exhaustive, centrally_essential_socle, jacobson_radical
from .finalg.exhaustive import DEFAULT_BUDGET
from .finalg.structure import commutative, local, nilpotence_certificate, uniform, uniserial
from .finalg.suite import property_suite
from .valuation import (
    DEFAULT_SAMPLES, DEFAULT_SEED, ce_witness_check, centrality_agreement_check, extended_suite,
    ideal_chain_check, quasi_regular_check, representation_check, structure_suite,
    unit_absorbs_radical_check, unit_characterization_check, uniform_check,
    valuation_additivity_check,
)
from .verify import VerifyConfig, criterion_certificate, verify_all

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2
BUDGET_ENV = "CENTRESS_BUDGET"

FINITE_CHECKS: dict[str, Callable[[StructureAlgebra, int], Certificate]] = {
    "ce": centrally_essential_socle,
    "ce_exhaustive": centrally_essential_exhaustive,
    "local": local,
    "commutative": lambda A, budget: commutative(A),
    "uniform_right": lambda A, budget: uniform(A, "right", budget),
    "uniform_left": lambda A, budget: uniform(A, "left", budget),
    "uniserial_right": lambda A, budget: uniserial(A, "right", budget),
    "uniserial_left": lambda A, budget: uniserial(A, "left", budget),
    "radical_nilpotent": lambda A, budget: nilpotence_certificate(A, jacobson_radical(A, budget)),
}

TWISTED_CHECKS: dict[str, Callable[[TwistedConfig, int, int], Certificate]] = {
    "ce": ce_witness_check,
    "units": unit_characterization_check,
    "additivity": valuation_additivity_check,
    "chain_right": lambda c, n, s: ideal_chain_check(c, "right", min(n, 100), s),
    "chain_left": lambda c, n, s: ideal_chain_check(c, "left", min(n, 100), s),
    "radical": quasi_regular_check,
    "uniform": uniform_check,
    "absorbs": unit_absorbs_radical_check,
    "centrality": centrality_agreement_check,
    "matrix_model": representation_check,
}

TWISTED_SUITES = {
    "identities": lambda c, n, s: identity_suite(c, DEFAULT_IDENTITY_SAMPLES, s),
    "structure": structure_suite,
    "extended": extended_suite,
    "matrix": lambda c, n, s: [representation_check(c, n, s)],
}


# -- reports -------------------------------------------------------------------------------

@dataclass
class Assertion:
    check: str
    expected: Verdict
    actual: Verdict

    @property
    def holds(self) -> bool:
        return self.expected is self.actual

    def to_json(self) -> dict:
        return {"check": self.check, "expected": self.expected.value, "actual": self.actual.value,
                "holds": self.holds}

    @classmethod
    def from_json(cls, data: dict) -> Assertion:
        return cls(data["check"], Verdict(data["expected"]), Verdict(data["actual"]))


@dataclass
class Report:
    command: str
    input: str
    certificates: list[Certificate] = field(default_factory=list)
    assertions: list[Assertion] | None = None
    seconds: float | None = None
    version: str = __version__
    extra: dict = field(default_factory=dict)

    @property
    def overall(self) -> Verdict:
        """With assertions, their conjunction; otherwise the AND of all non-N/A verdicts."""
        if self.assertions is not None:
            return Verdict.of(all(a.holds for a in self.assertions))
        verdicts = [c.verdict for c in self.certificates if c.verdict is not Verdict.NOT_APPLICABLE]
        if Verdict.FALSE in verdicts:
            return Verdict.FALSE
        if Verdict.UNKNOWN in verdicts:
            return Verdict.UNKNOWN
        return Verdict.TRUE

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.overall is Verdict.TRUE else EXIT_FALSE

    def strip_timings(self) -> None:
        self.seconds = None
        for c in self.certificates:
            c.millis = 0.0
        for item in self.extra.get("criteria", []):
            item["seconds"] = None

    def to_json(self) -> dict:
        out = {
            "version": self.version,
            "command": self.command,
            "input": self.input,
            "overall": self.overall.value,
            "seconds": None if self.seconds is None else round(self.seconds, 3),
            "certificates": [c.to_json() for c in self.certificates],
        }
        if self.assertions is not None:
            out["assertions"] = [a.to_json() for a in self.assertions]
        out.update(self.extra)
        return out

    @classmethod
    def from_json(cls, data: dict) -> Report:
        known = {"version", "command", "input", "overall", "seconds", "certificates", "assertions"}
        asserts = data.get("assertions")
        return cls(
            command=data["command"], input=data["input"],
            certificates=[Certificate.from_json(c) for c in data["certificates"]],
            assertions=None if asserts is None else [Assertion.from_json(a) for a in asserts],
            seconds=data.get("seconds"), version=data["version"],
            extra={k: v for k, v in data.items() if k not in known},
        )

    def to_text(self) -> str:
        lines = [f"centress {self.version} {self.command} {self.input}"]
        for c in self.certificates:
            line = f"  {c.property}: {c.verdict.value} [{c.method.value}]"
            if c.detail:
                line += f" {c.detail}"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"    witness: {json.dumps(c.witness)}")
        for item in self.extra.get("criteria", []):
            status = "PASS" if item["ok"] else "FAIL"
            lines.append(f"  [{status}] criterion {item['number']}: {item['title']}")
        for a in self.assertions or []:
            mark = "ok" if a.holds else "FAILED"
            lines.append(f"  assert {a.check}={a.expected.value}: {mark} (got {a.actual.value})")
        lines.append(f"overall: {self.overall.value}")
        return "\n".join(lines)


# -- inputs --------------------------------------------------------------------------------

def ingest_ring(path) -> StructureAlgebra | TwistedConfig:
    """Load a ring file: a structure-constant table, or an exported twisted-ring config."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read ({exc.strerror})") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    if data.get("kind") == "prop29":
        return TwistedConfig(int(data["p"]), int(data["n"]))
    return StructureAlgebra.from_json(data, name=str(path))


def export_ring(ring: StructureAlgebra | TwistedConfig) -> dict:
    if isinstance(ring, TwistedConfig):
        return {"kind": "prop29", "p": ring.p, "n": ring.n}
    return ring.to_json()


def _ring(args) -> tuple[StructureAlgebra | TwistedConfig, str]:
    if bool(args.ring) == bool(args.build):
        raise ConfigurationError("give exactly one ring source: --ring FILE or --build SPEC")
    if args.ring:
        return ingest_ring(args.ring), args.ring
    return build(args.build), args.build


def _names(text: str | None) -> list[str]:
    return [s.strip() for s in (text or "").split(",") if s.strip()]


def _parse_assertions(text: str | None, known) -> dict[str, Verdict]:
    out = {}
    for item in _names(text):
        key, eq, value = item.partition("=")
        if not eq:
            raise ConfigurationError(f"assertion {item!r} must look like check=verdict")
        key = key.strip()
        if key not in known:
            raise ConfigurationError(f"unknown check {key!r}; choose from {', '.join(known)}")
        try:
            out[key] = Verdict(value.strip().lower())
        except ValueError:
            choices = ", ".join(v.value for v in Verdict)
            raise ConfigurationError(f"verdict {value!r} must be one of {choices}") from None
    return out


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigurationError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


# -- commands ------------------------------------------------------------------------------

def cmd_build(args) -> tuple[dict, int]:
    ring, _ = _ring(args)
    return export_ring(ring), EXIT_OK


def cmd_check(args) -> Report:
    ring, label = _ring(args)
    twisted = isinstance(ring, TwistedConfig)
    table = TWISTED_CHECKS if twisted else FINITE_CHECKS
    checks = _names(args.check)
    for name in checks:
        if name not in table:
            raise ConfigurationError(f"unknown check {name!r}; choose from {', '.join(table)}")
    asserted = _parse_assertions(args.assertions, table)
    if not checks and not asserted:
        raise ConfigurationError("nothing to do: give --check and/or --assert")
    budget = _budget(args)
    certs = {}
    for name in checks + [k for k in asserted if k not in checks]:
        if twisted:
            certs[name] = table[name](ring, args.samples, args.seed)
        else:
            certs[name] = table[name](ring, budget)
    assertions = [Assertion(k, v, certs[k].verdict) for k, v in asserted.items()]
    return Report("check", label, list(certs.values()), assertions)


def cmd_suite(args) -> Report:
    ring, label = _ring(args)
    if isinstance(ring, TwistedConfig):
        certs = []
        for run in TWISTED_SUITES.values():
            certs += run(ring, args.samples, args.seed)
    else:
        certs = property_suite(ring, _budget(args))
    return Report("suite", label, certs)


def cmd_prop29(args) -> Report:
    cfg = TwistedConfig(args.p, args.n)
    names = list(TWISTED_SUITES) if args.suite == "all" else [args.suite]
    certs = []
    for name in names:
        certs += TWISTED_SUITES[name](cfg, args.samples, args.seed)
    return Report("prop29", cfg.describe(), certs)


def cmd_verify(args) -> Report:
    cfg = VerifyConfig(seed=args.seed, samples=args.samples, budget=_budget(args))
    progress = (lambda r: print(r.line(), file=sys.stderr, flush=True)) if args.progress else None
    results = verify_all(cfg, progress)
    report = Report("verify-paper", f"seed={args.seed},samples={args.samples}",
                    [criterion_certificate(r) for r in results])
    report.extra["criteria"] = [r.to_json() for r in results]
    return report


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help=f"element-enumeration budget (env {BUDGET_ENV}; default {DEFAULT_BUDGET})")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--no-timings", action="store_true",
                        help="omit wall-clock fields so reports are byte-for-byte reproducible")
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--ring", help="ring description file (JSON)")
    source.add_argument("--build", help="build spec, e.g. group:q8,p=2 or prop29:p=5,n=3")

    parser = argparse.ArgumentParser(prog="centress", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"centress {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common, source], help="build a ring and print its description")
    p = sub.add_parser("check", parents=[common, source], help="run named checks and assertions")
    p.add_argument("--check", help="comma-separated check names (informational)")
    p.add_argument("--assert", dest="assertions", help="comma-separated check=verdict pairs")
    sub.add_parser("suite", parents=[common, source], help="run the full property suite")
    p = sub.add_parser("prop29", parents=[common], help="suites of the twisted matrix ring")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=("all", *TWISTED_SUITES), default="all")
    p = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    p.add_argument("--progress", action="store_true", help="print one line per criterion to stderr")
    return parser


COMMANDS = {"check": cmd_check, "suite": cmd_suite, "prop29": cmd_prop29, "verify-paper": cmd_verify}


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "build":
            data, code = cmd_build(args)
            _emit(json.dumps(data), args.out)
            return code
        report = COMMANDS[args.command](args)
    except CentressError as exc:
        print(f"centress: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.seconds = time.perf_counter() - start
    if args.no_timings:
        report.strip_timings()
    text = report.to_text() if args.format == "text" else json.dumps(report.to_json(), indent=2)
    _emit(text, args.out)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
