"""Parse textual build specs such as ``exterior:p=3,d=3`` or ``group:q8,p=2``.

Grammar: ``kind:item,item,...`` where each item is ``key=value``; a group
spec also takes one bare item naming the group (q8, d4, c1..c16).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ConfigurationError
from ..finalg.algebra import StructureAlgebra
from .builders import (
    diagonal_algebra, exterior_algebra, group_algebra, matrix_algebra, truncated_polynomial,
)
from .groups import group_by_name
from .twisted import TwistedConfig

# kind -> required integer parameters
KINDS = {
    "exterior": ("p", "d"),
    "group": ("p",),
    "matrix": ("p", "N"),
    "truncpoly": ("p", "n"),
    "diag": ("p", "k"),
    "prop29": ("p", "n"),
}


@dataclass(frozen=True)
class BuildSpec:
    kind: str
    params: dict = field(default_factory=dict)
    group: str | None = None

    def __str__(self):
        items = ([self.group] if self.group else []) + [f"{k}={v}" for k, v in self.params.items()]
        return f"{self.kind}:{','.join(items)}"

    @property
    def is_twisted(self) -> bool:
        return self.kind == "prop29"


def parse_build_spec(text: str) -> BuildSpec:
    kind, sep, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if not sep or kind not in KINDS:
        raise ConfigurationError(
            f"build spec {text!r} must look like kind:key=value,...; kinds: {', '.join(KINDS)}")
    params: dict[str, int] = {}
    group = None
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            if kind != "group" or group is not None:
                raise ConfigurationError(f"unexpected bare item {item!r} in {text!r}")
            group = key.lower()
            continue
        key = key.strip()
        if key not in KINDS[kind]:
            raise ConfigurationError(f"{kind} specs take {', '.join(KINDS[kind])}; got {key!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise ConfigurationError(f"{key} must be an integer, got {value!r}") from None
    missing = [k for k in KINDS[kind] if k not in params]
    if missing:
        raise ConfigurationError(f"{text!r} is missing {', '.join(missing)}")
    if kind == "group" and group is None:
        raise ConfigurationError(f"{text!r} must name a group, e.g. group:q8,p=2")
    return BuildSpec(kind, params, group)


def build(spec: BuildSpec | str) -> StructureAlgebra | TwistedConfig:
    """A StructureAlgebra for finite kinds, a TwistedConfig for ``prop29``."""
    if isinstance(spec, str):
        spec = parse_build_spec(spec)
    q = spec.params
    if spec.kind == "exterior":
        return exterior_algebra(q["p"], q["d"])
    if spec.kind == "group":
        G = group_by_name(spec.group)
        return group_algebra(G, q["p"], name=f"F_{q['p']}[{spec.group.upper()}]")
    if spec.kind == "matrix":
        return matrix_algebra(q["p"], q["N"])
    if spec.kind == "truncpoly":
        return truncated_polynomial(q["p"], q["n"])
    if spec.kind == "diag":
        return diagonal_algebra(q["p"], q["k"])
    return TwistedConfig(q["p"], q["n"])
