"""Verdicts with witnesses, and their JSON form."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

import numpy as np


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"
    NOT_APPLICABLE = "not-applicable"

    @classmethod
    def of(cls, flag: bool) -> Verdict:
        return cls.TRUE if flag else cls.FALSE


class Method(str, Enum):
    STRUCTURAL = "structural"
    SOCLE = "socle-criterion"
    EXHAUSTIVE = "exhaustive"
    RANDOMIZED = "randomized"


class CertificateError(AssertionError):
    """A counterexample failed re-verification; indicates a bug, not a verdict."""


def jsonable(obj: Any) -> Any:
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Enum):
        return obj.value
    return obj


@dataclass
class Certificate:
    property: str
    verdict: Verdict
    method: Method
    witness: Any = None
    seed: int | None = None
    samples: int | None = None
    millis: float = 0.0
    detail: str = ""
    clause: str = ""

    def __post_init__(self):
        self.verdict = Verdict(self.verdict)
        self.method = Method(self.method)
        self.witness = jsonable(self.witness)
        if self.verdict is Verdict.FALSE and self.witness is None:
            raise CertificateError(f"{self.property}: a false verdict needs a counterexample")

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def definitive(self) -> bool:
        return self.method is not Method.RANDOMIZED or self.verdict is Verdict.FALSE

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict.value,
            "witness": self.witness,
            "method": self.method.value,
            "seed": self.seed,
            "samples": self.samples,
            "millis": round(self.millis, 3),
            "detail": self.detail,
            "clause": self.clause,
        }

    @classmethod
    def from_json(cls, data: dict) -> Certificate:
        return cls(
            property=data["property"],
            verdict=Verdict(data["verdict"]),
            method=Method(data["method"]),
            witness=data.get("witness"),
            seed=data.get("seed"),
            samples=data.get("samples"),
            millis=data.get("millis", 0.0),
            detail=data.get("detail", ""),
            clause=data.get("clause", ""),
        )


def refute(prop: str, witness: Any, recheck: Callable[[], bool], method: Method, **kw) -> Certificate:
    """Build a false certificate after re-verifying its counterexample."""
    if not recheck():
        raise CertificateError(f"{prop}: counterexample {jsonable(witness)!r} does not re-verify")
    return Certificate(prop, Verdict.FALSE, method, witness=witness, **kw)


@dataclass
class Stopwatch:
    start: float = field(default_factory=time.perf_counter)

    @property
    def millis(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0
