"""Prime fields F_p with elements stored as canonical residues in [0, p)."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigurationError, DomainError

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < MAX_MODULUS:
            raise ConfigurationError(f"modulus must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise ConfigurationError(f"modulus {self.p} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DomainError(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


def field_arith(field: PrimeField, a: int, b: int | None, op: str) -> int:
    """Dispatch ``op`` in {add, mul, inv, neg}; unary ops ignore ``b``."""
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "inv":
        return field.inv(a)
    if op == "neg":
        return field.neg(a)
    raise ConfigurationError(f"unknown field operation {op!r}")
