"""Finite groups by multiplication table."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import AlgebraAxiomError, ConfigurationError


@dataclass(frozen=True)
class GroupTable:
    """``table[a][b]`` is the index of the product of elements a and b."""

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.names)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ConfigurationError(f"group table must be {n} x {n}")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise ConfigurationError("group table entries out of range")
        e, t = self.identity, self.table
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                raise AlgebraAxiomError(f"{self.names[e]} is not an identity for {self.names[a]}", triple=(a,))
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise AlgebraAxiomError(
                            f"group multiplication not associative at ({a},{b},{c})", triple=(a, b, c)
                        )
        inv = []
        for a in range(n):
            found = [b for b in range(n) if t[a][b] == e and t[b][a] == e]
            if not found:
                raise AlgebraAxiomError(f"{self.names[a]} has no inverse", triple=(a,))
            inv.append(found[0])
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def center(self) -> list[int]:
        n = self.order
        return [a for a in range(n) if all(self.table[a][b] == self.table[b][a] for b in range(n))]

    def conjugacy_classes(self) -> list[list[int]]:
        seen, classes = set(), []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.mul(self.mul(g, a), self.inverse[g]) for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes


# units of Q8 in the order 1, i, j, k; product (sign, unit)
_QUAT = {
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
    (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
}


def quaternion_group() -> GroupTable:
    """Q8 with elements ordered 1, i, j, k, -1, -i, -j, -k (index = 4*sign + unit)."""
    names = ("1", "i", "j", "k", "-1", "-i", "-j", "-k")
    table = []
    for a in range(8):
        row = []
        for b in range(8):
            sa, ua = divmod(a, 4)
            sb, ub = divmod(b, 4)
            if ua == 0:
                s, u = 0, ub
            elif ub == 0:
                s, u = 0, ua
            else:
                s, u = _QUAT[(ua, ub)]
            row.append(4 * ((sa + sb + s) % 2) + u)
        table.append(tuple(row))
    return GroupTable(names, tuple(table))


def cyclic_group(m: int) -> GroupTable:
    if not 1 <= m <= 16:
        raise ConfigurationError(f"cyclic groups are built for 1 <= m <= 16, got {m}")
    names = tuple("1" if a == 0 else ("g" if a == 1 else f"g^{a}") for a in range(m))
    return GroupTable(names, tuple(tuple((a + b) % m for b in range(m)) for a in range(m)))


def dihedral_group_d4() -> GroupTable:
    """Symmetries of the square, elements r^a s^b indexed 2a + b."""
    def name(a, b):
        r = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
        s = "s" if b else ""
        return (r + s) or "1"

    names = tuple(name(a, b) for a in range(4) for b in range(2))
    table = []
    for a in range(4):
        for b in range(2):
            row = []
            for c in range(4):
                for d in range(2):
                    # r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
                    e = (a + (c if b == 0 else -c)) % 4
                    row.append(2 * e + (b + d) % 2)
            table.append(tuple(row))
    return GroupTable(names, tuple(table))


BUILTIN_GROUPS = {"q8": quaternion_group, "d4": dihedral_group_d4}


def group_by_name(name: str) -> GroupTable:
    key = name.lower()
    if key in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[key]()
    if key.startswith("c") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    raise ConfigurationError(f"unknown group {name!r}; built in: q8, d4, c1..c16")
