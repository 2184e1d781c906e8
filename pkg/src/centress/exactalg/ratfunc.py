"""The rational function field F_p(x, y) and the partial derivations on it."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ConfigurationError, DomainError
from .poly import MultiPoly, poly_gcd


class RatFunc:
    """``num / den`` with gcd(num, den) = 1 and a monic denominator.

    Sums and products use Henrici's reductions, which only take gcds of the
    operands' parts instead of the full result.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.constant(num.p, 1)
        if num.p != den.p:
            raise ConfigurationError(f"modulus mismatch: {num.p} vs {den.p}")
        if den.is_zero():
            raise DomainError("zero denominator")
        if num.is_zero():
            num, den = num, MultiPoly.constant(num.p, 1)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num.divexact(g), den.divexact(g)
            lc = den.leading_coeff()
            if lc != 1:
                inv = pow(lc, -1, num.p)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: MultiPoly, den: MultiPoly) -> RatFunc:
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, p: int, c: int) -> RatFunc:
        return cls._raw(MultiPoly.constant(p, c), MultiPoly.constant(p, 1))

    @classmethod
    def var(cls, p: int, name: str) -> RatFunc:
        return cls._raw(MultiPoly.var(p, name), MultiPoly.constant(p, 1))

    @classmethod
    def parse(cls, text: str, p: int) -> RatFunc:
        return parse_ratfunc(text, p)

    @property
    def p(self) -> int:
        return self.num.p

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.p != self.p:
                raise ConfigurationError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return RatFunc.constant(self.p, other)
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFunc(a + c, b)
        g = poly_gcd(b, d)
        if g.is_one():
            # gcd(ad + bc, bd) = 1 when b, d coprime and both inputs reduced
            return _normalized_raw(a * d + b * c, b * d)
        b1, d1 = b.divexact(g), d.divexact(g)
        t = a * d1 + c * b1
        if t.is_zero():
            return RatFunc.constant(self.p, 0)
        h = poly_gcd(t, g)
        if h.is_one():
            return _normalized_raw(t, b1 * d)
        return _normalized_raw(t.divexact(h), b1 * d.divexact(h))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFunc.constant(self.p, 0)
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, b)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = a.divexact(g1), d.divexact(g1)
        if not g2.is_one():
            c, b = c.divexact(g2), b.divexact(g2)
        return _normalized_raw(a * c, b * d)

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if self.is_zero():
            raise DomainError("0 has no inverse in F_p(x,y)")
        return _normalized_raw(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            return self.inv() ** (-k)
        return RatFunc._raw(self.num**k, self.den**k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.constant(self.p, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def cross_equal(self, other: RatFunc) -> bool:
        """Equality by cross-multiplication, independent of normal forms."""
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"RatFunc({str(self)!r}, p={self.p})"

    def __str__(self):
        num = str(self.num)
        if self.den.is_one():
            return num
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def _normalized_raw(num: MultiPoly, den: MultiPoly) -> RatFunc:
    # num/den already coprime; only fix the leading coefficient of den
    if num.is_zero():
        return RatFunc.constant(num.p, 0)
    lc = den.leading_coeff()
    if lc != 1:
        inv = pow(lc, -1, num.p)
        num, den = num.scale(inv), den.scale(inv)
    return RatFunc._raw(num, den)


def normalize(r: RatFunc) -> RatFunc:
    return RatFunc(r.num, r.den)


def ratfunc_arith(a: RatFunc, b: RatFunc | None, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise ConfigurationError(f"unknown rational-function operation {op!r}")


@dataclass(frozen=True)
class Derivation:
    """Partial derivative with respect to variable ``var`` (0 -> x, 1 -> y)."""

    var: int

    def __post_init__(self):
        if self.var not in (0, 1):
            raise ConfigurationError(f"derivation index must be 0 or 1, got {self.var}")

    def __call__(self, a: RatFunc) -> RatFunc:
        return derive(self, a)

    @property
    def name(self) -> str:
        return f"D{self.var + 1}"


D1 = Derivation(0)
D2 = Derivation(1)


def derive(D: Derivation, a: RatFunc) -> RatFunc:
    dn = a.num.derivative(D.var)
    if a.den.is_one():
        return RatFunc._raw(dn, a.den)
    dd = a.den.derivative(D.var)
    return RatFunc(dn * a.den - a.num * dd, a.den * a.den)


# -- text form -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, p: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.p = p
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> RatFunc:
        val = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self) -> RatFunc:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ValueError(f"exponent must be a non-negative integer in {self.text!r}")
            base = base ** int(exp)
        return base

    def atom(self) -> RatFunc:
        tok = self.take()
        if tok.isdigit():
            return RatFunc.constant(self.p, int(tok))
        if tok in ("x", "y"):
            return RatFunc.var(self.p, tok)
        if tok == "(":
            val = self.expr()
            self.take(")")
            return val
        raise ValueError(f"unexpected token {tok!r} in {self.text!r}")


def parse_ratfunc(text: str, p: int) -> RatFunc:
    """Parse e.g. ``(x^2+4*y)/(x*y)``; integers are read modulo p."""
    parser = _Parser(text, p)
    val = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input {parser.peek()!r} in {text!r}")
    return val
