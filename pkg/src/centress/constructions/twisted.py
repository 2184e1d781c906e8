"""Matrix ring over F_p(x, y) twisted by the two partial derivations.

With N = 2n - 1 and E the identity matrix,

    f(a) = a E + D1(a) e[1, N-1] + D2(a) e[N-1, N],    pi = sum_{i<n} e[2i-1, 2i+1],

and A is the subring generated by f(F) and pi. Every element of A is
f(a0) + a1 pi + ... + a_{n-1} pi^(n-1), and the coefficient tuple multiplies as
a truncated polynomial in pi plus one correction D1(a0) D2(b0) in the top slot
(since e[1, N-1] e[N-1, N] = e[1, N] = pi^(n-1)). ``TwistedElement`` works on
the tuple; ``to_matrix`` is the reference model it is checked against.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import ConfigurationError
from ..exactalg.field import is_prime
from ..exactalg.ratfunc import D1, D2, RatFunc, parse_ratfunc
from ..exactalg.sampling import random_ratfunc

MAX_N = 8


@dataclass(frozen=True)
class TwistedConfig:
    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ConfigurationError(f"modulus {self.p} is not prime")
        if not 2 <= self.n <= MAX_N:
            raise ConfigurationError(f"nilpotence index n must lie in [2, {MAX_N}], got {self.n}")
        x, y = self.x, self.y
        # x in ker D2 \ ker D1 and y in ker D1 \ ker D2: the kernels are incomparable
        if not (D1(x) and not D2(x) and D2(y) and not D1(y)):
            raise ConfigurationError("derivations do not have incomparable kernels")

    @property
    def N(self) -> int:
        return 2 * self.n - 1

    @property
    def x(self) -> RatFunc:
        return RatFunc.var(self.p, "x")

    @property
    def y(self) -> RatFunc:
        return RatFunc.var(self.p, "y")

    def scalar(self, c) -> RatFunc:
        if isinstance(c, RatFunc):
            return c
        if isinstance(c, str):
            return parse_ratfunc(c, self.p)
        return RatFunc.constant(self.p, int(c))

    def describe(self) -> str:
        return f"prop29:p={self.p},n={self.n}"


# -- sparse matrices over F_p(x, y) ---------------------------------------------------------

class RatMatrix:
    """Square matrix stored as {(row, col): nonzero entry}, 0-indexed."""

    __slots__ = ("size", "p", "entries")

    def __init__(self, size: int, p: int, entries: dict | None = None):
        self.size = size
        self.p = p
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def identity(cls, size: int, p: int) -> RatMatrix:
        one = RatFunc.constant(p, 1)
        return cls(size, p, {(i, i): one for i in range(size)})

    @classmethod
    def unit(cls, size: int, p: int, i: int, j: int) -> RatMatrix:
        """e[i, j] in 1-indexed positions."""
        return cls(size, p, {(i - 1, j - 1): RatFunc.constant(p, 1)})

    def _same(self, other: RatMatrix) -> None:
        if self.size != other.size or self.p != other.p:
            raise ConfigurationError("matrix size or modulus mismatch")

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._same(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return RatMatrix(self.size, self.p, out)

    def __neg__(self) -> RatMatrix:
        return RatMatrix(self.size, self.p, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return RatMatrix(self.size, self.p, {k: v * other for k, v in self.entries.items()})
        self._same(other)
        rows: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), u in self.entries.items():
            for j, v in rows.get(k, ()):
                t = u * v
                out[(i, j)] = out[(i, j)] + t if (i, j) in out else t
        return RatMatrix(self.size, self.p, out)

    def __rmul__(self, scalar: RatFunc) -> RatMatrix:
        return self * scalar

    def __pow__(self, k: int) -> RatMatrix:
        out = RatMatrix.identity(self.size, self.p)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash((self.size, frozenset(self.entries.items())))

    def __repr__(self):
        body = ", ".join(f"[{i + 1},{j + 1}]={v}" for (i, j), v in sorted(self.entries.items()))
        return f"RatMatrix({self.size}; {body})"


def commutator_matrix(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return a * b - b * a


def f_matrix(cfg: TwistedConfig, alpha) -> RatMatrix:
    """f(a) = a E + D1(a) e[1, N-1] + D2(a) e[N-1, N]."""
    a = cfg.scalar(alpha)
    N = cfg.N
    entries = {(i, i): a for i in range(N)}
    entries[(0, N - 2)] = D1(a)
    entries[(N - 2, N - 1)] = D2(a)
    return RatMatrix(N, cfg.p, entries)


def pi_matrix(cfg: TwistedConfig) -> RatMatrix:
    """pi = e[1,3] + e[3,5] + ... + e[2n-3, 2n-1]."""
    one = RatFunc.constant(cfg.p, 1)
    return RatMatrix(cfg.N, cfg.p, {(2 * i - 2, 2 * i): one for i in range(1, cfg.n)})


# -- the coefficient representation -----------------------------------------------------------

class TwistedElement:
    """f(c0) + c1 pi + ... + c_{n-1} pi^(n-1)."""

    __slots__ = ("cfg", "coeffs")

    def __init__(self, cfg: TwistedConfig, coeffs):
        coeffs = tuple(cfg.scalar(c) for c in coeffs)
        if len(coeffs) != cfg.n:
            raise ConfigurationError(f"expected {cfg.n} coefficients, got {len(coeffs)}")
        if any(c.p != cfg.p for c in coeffs):
            raise ConfigurationError("coefficient modulus does not match the configuration")
        self.cfg = cfg
        self.coeffs = coeffs

    @classmethod
    def zero(cls, cfg: TwistedConfig) -> TwistedElement:
        return cls(cfg, [0] * cfg.n)

    @classmethod
    def one(cls, cfg: TwistedConfig) -> TwistedElement:
        return cls(cfg, [1] + [0] * (cfg.n - 1))

    @classmethod
    def pi_power(cls, cfg: TwistedConfig, k: int) -> TwistedElement:
        """pi^k (zero for k >= n)."""
        c = [0] * cfg.n
        if k < cfg.n:
            c[k] = 1
        return cls(cfg, c)

    @classmethod
    def f(cls, cfg: TwistedConfig, alpha) -> TwistedElement:
        return cls(cfg, [alpha] + [0] * (cfg.n - 1))

    @classmethod
    def parse(cls, cfg: TwistedConfig, text: str) -> TwistedElement:
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ConfigurationError(f"twisted element must look like (a0; a1; ...), got {text!r}")
        return cls(cfg, [parse_ratfunc(part, cfg.p) for part in s[1:-1].split(";")])

    def _same(self, other: TwistedElement) -> None:
        if not isinstance(other, TwistedElement) or other.cfg != self.cfg:
            raise ConfigurationError("twisted elements from different configurations")

    def __add__(self, other: TwistedElement) -> TwistedElement:
        self._same(other)
        return TwistedElement(self.cfg, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> TwistedElement:
        return TwistedElement(self.cfg, [-a for a in self.coeffs])

    def __sub__(self, other: TwistedElement) -> TwistedElement:
        return self + (-other)

    def __mul__(self, other: TwistedElement) -> TwistedElement:
        return twisted_mul(self, other)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return self.cfg == other.cfg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.cfg, self.coeffs))

    def __str__(self):
        return "(" + "; ".join(str(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"TwistedElement{self}"


def twisted_mul(a: TwistedElement, b: TwistedElement) -> TwistedElement:
    a._same(b)
    n = a.cfg.n
    A, B = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        acc = None
        for i in range(k + 1):
            if A[i] and B[k - i]:
                t = A[i] * B[k - i]
                acc = t if acc is None else acc + t
        out.append(acc if acc is not None else RatFunc.constant(a.cfg.p, 0))
    if A[0] and B[0]:
        out[n - 1] = out[n - 1] + D1(A[0]) * D2(B[0])
    return TwistedElement(a.cfg, out)


def _lazy_sum_equals(parts: list, want: RatFunc) -> bool:
    """Sum the unreduced fractions (num, den) and compare with ``want`` by cross-multiplication."""
    if not parts:
        return not want
    num, den = parts[0]
    for pn, pd in parts[1:]:
        if pd == den:
            num = num + pn
        else:
            num, den = num * pd + pn * den, den * pd
    return num * want.den._f == want.num._f * den


def _raw_product(u: RatFunc, v: RatFunc) -> tuple:
    return u.num._f * v.num._f, u.den._f * v.den._f


def product_equals(a: TwistedElement, b: TwistedElement, target: TwistedElement) -> bool:
    """Exact test of a * b == target that skips gcd normalization.

    Each slot of a * b is summed as an unreduced fraction of FLINT polynomials
    and compared with the target slot by cross-multiplication.
    """
    a._same(b)
    a._same(target)
    n = a.cfg.n
    A, B = a.coeffs, b.coeffs
    for k in range(n):
        parts = [_raw_product(A[i], B[k - i]) for i in range(k + 1) if A[i] and B[k - i]]
        if k == n - 1 and A[0] and B[0]:
            t = D1(A[0]) * D2(B[0])
            if t:
                parts.append((t.num._f, t.den._f))
        if not _lazy_sum_equals(parts, target.coeffs[k]):
            return False
    return True


def matrix_product_equals(a: RatMatrix, b: RatMatrix, target: RatMatrix) -> bool:
    """Exact test of a * b == target for RatMatrix, without normalizing entry sums."""
    a._same(b)
    a._same(target)
    rows: dict[int, list] = {}
    for (k, j), v in b.entries.items():
        rows.setdefault(k, []).append((j, v))
    parts: dict = {}
    for (i, k), u in a.entries.items():
        for j, v in rows.get(k, ()):
            parts.setdefault((i, j), []).append(_raw_product(u, v))
    zero = RatFunc.constant(a.p, 0)
    for key in set(parts) | set(target.entries):
        if not _lazy_sum_equals(parts.get(key, []), target.entries.get(key, zero)):
            return False
    return True


def to_matrix(a: TwistedElement) -> RatMatrix:
    cfg = a.cfg
    M = f_matrix(cfg, a.coeffs[0])
    pi = pi_matrix(cfg)
    power = pi
    for k in range(1, cfg.n):
        if a.coeffs[k]:
            M = M + power * a.coeffs[k]
        power = power * pi
    return M


def random_element(cfg: TwistedConfig, rng: random.Random, max_degree: int = 3,
                   zero_probability: float = 0.25) -> TwistedElement:
    """Each coefficient is 0 with probability ``zero_probability``, else a random fraction."""
    coeffs = []
    for _ in range(cfg.n):
        if rng.random() < zero_probability:
            coeffs.append(RatFunc.constant(cfg.p, 0))
        else:
            coeffs.append(random_ratfunc(rng, cfg.p, max_degree))
    return TwistedElement(cfg, coeffs)


def random_nonzero_element(cfg: TwistedConfig, rng: random.Random, **kw) -> TwistedElement:
    a = random_element(cfg, rng, **kw)
    while a.is_zero():
        a = random_element(cfg, rng, **kw)
    return a
