"""Bivariate polynomials over F_p in the variables (x, y).

Terms are stored as ``{(i, j): c}`` for ``c * x^i * y^j`` with ``0 < c < p``.
Monomials are ordered lexicographically with x > y, so ``max(terms)`` is the
leading monomial.

Arithmetic and the production gcd run on FLINT. ``gcd_recursive`` is an
independent pure-Python gcd in F_p[y][x] (content/primitive-part splitting, a
primitive pseudo-remainder sequence in x, Euclid in F_p[y] for the contents).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

import flint

from ..errors import ConfigurationError, DomainError, ResourceError
from .field import is_prime

VARIABLES = ("x", "y")
DEGREE_CAP = 512
# largest image degree worth a univariate gcd before deferring to FLINT
KRONECKER_LIMIT = 96

Monomial = tuple[int, int]


class MultiPoly:
    """Immutable polynomial in F_p[x, y] backed by a FLINT ``nmod_mpoly``."""

    __slots__ = ("p", "_f", "_terms", "_hash")

    def __init__(self, p: int, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c %= p
            if c:
                if len(mono) != 2 or min(mono) < 0:
                    raise ConfigurationError(f"bad exponent vector {mono!r}")
                mono = (int(mono[0]), int(mono[1]))
                clean[mono] = c
        self.p = p
        self._f = _context(p).from_dict(clean) if clean else _context(p).from_dict({})
        self._terms = None
        self._hash = None

    @classmethod
    def _wrap(cls, p: int, f) -> MultiPoly:
        obj = cls.__new__(cls)
        obj.p = p
        obj._f = f
        obj._terms = None
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, p: int, c: int) -> MultiPoly:
        return cls(p, {(0, 0): c})

    @classmethod
    def var(cls, p: int, name: str) -> MultiPoly:
        return cls(p, {(1, 0) if name == "x" else (0, 1): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        if self._terms is None:
            self._terms = {tuple(m): int(c) for m, c in zip(self._f.monoms(), self._f.coeffs())}
        return self._terms

    # -- predicates / accessors -------------------------------------------------

    def is_zero(self) -> bool:
        return self._f.is_zero()

    def is_one(self) -> bool:
        return self._f.is_one()

    def is_constant(self) -> bool:
        return self._f.is_constant()

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return -1 if self._f.is_zero() else int(self._f.total_degree())

    def degree_in(self, var: int) -> int:
        return -1 if self._f.is_zero() else int(self._f.degrees()[var])

    def leading_monomial(self) -> Monomial:
        return max(self.terms)

    def leading_coeff(self) -> int:
        return 0 if self._f.is_zero() else int(self._f.leading_coefficient())

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), reverse=True)

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return MultiPoly.constant(self.p, other)
        if isinstance(other, MultiPoly):
            if self.p != other.p:
                raise ConfigurationError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiPoly._wrap(self.p, self._f + other._f)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap(self.p, -self._f)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiPoly._wrap(self.p, self._f - other._f)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> MultiPoly:
        return MultiPoly._wrap(self.p, self._f * (c % self.p))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return MultiPoly._wrap(self.p, self._f * 0)
        _guard(self.degree() + other.degree())
        return MultiPoly._wrap(self.p, self._f * other._f)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise DomainError("negative power of a polynomial")
        if not self.is_zero():
            _guard(self.degree() * k)
        return MultiPoly._wrap(self.p, self._f**k)

    def derivative(self, var: int) -> MultiPoly:
        return MultiPoly._wrap(self.p, self._f.derivative(var))

    def monic(self) -> MultiPoly:
        if self.is_zero():
            return self
        return self.scale(pow(self.leading_coeff(), -1, self.p))

    def evaluate(self, x: int, y: int) -> int:
        p = self.p
        return sum(c * pow(x, i, p) * pow(y, j, p) for (i, j), c in self.terms.items()) % p

    # -- comparison / hashing -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.p, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.p == other.p and self._f == other._f

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return not self._f.is_zero()

    def __repr__(self):
        return f"MultiPoly({self.p}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        return "+".join(_format_term(m, c) for m, c in self.sorted_terms())

    def divexact(self, other: MultiPoly) -> MultiPoly:
        """Quotient ``self / other``; raises DomainError if the division is not exact."""
        other = self._coerce(other)
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        q, r = divmod(self._f, other._f)
        if not r.is_zero():
            raise DomainError("inexact polynomial division")
        return MultiPoly._wrap(self.p, q)


def _guard(degree: int) -> None:
    if degree > DEGREE_CAP:
        raise ResourceError(f"polynomial degree {degree} exceeds cap {DEGREE_CAP}")


@lru_cache(maxsize=None)
def _context(p: int):
    if not is_prime(p):
        raise ConfigurationError(f"modulus {p} is not prime")
    return flint.nmod_mpoly_ctx.get(VARIABLES, ordering="lex", modulus=p)


def _format_term(mono: Monomial, c: int) -> str:
    factors = []
    for name, e in zip(VARIABLES, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


def poly_arith(f: MultiPoly, g: MultiPoly, op: str) -> MultiPoly:
    if f.p != g.p:
        raise ConfigurationError(f"modulus mismatch: {f.p} vs {g.p}")
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ConfigurationError(f"unknown polynomial operation {op!r}")


# -- univariate helpers over F_p (coefficient lists, low degree first) -----------

def _utrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _uadd(a: list, b: list, p: int) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _utrim(out)


def _usub(a: list, b: list, p: int) -> list:
    return _uadd(a, [(-c) % p for c in b], p)


def _umul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _utrim([c % p for c in out])


def _uscale(a: list, c: int, p: int) -> list:
    c %= p
    if not c:
        return []
    return [v * c % p for v in a]


def _udivmod(a: list, b: list, p: int) -> tuple[list, list]:
    if not b:
        raise DomainError("division by zero polynomial")
    r = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for i, cb in enumerate(b):
                r[k + i] = (r[k + i] - c * cb) % p
    return _utrim(q), _utrim(r[:db])


def _umonic(a: list, p: int) -> list:
    if not a:
        return a
    return _uscale(a, pow(a[-1], -1, p), p)


def _ugcd(a: list, b: list, p: int) -> list:
    while b:
        a, b = b, _udivmod(a, b, p)[1]
    return _umonic(a, p)


def _udivexact(a: list, b: list, p: int) -> list:
    q, r = _udivmod(a, b, p)
    if r:
        raise DomainError("inexact division in F_p[y]")
    return q


# -- bivariate as polynomials in x with coefficients in F_p[y] --------------------

def _to_dense(f: MultiPoly) -> list:
    dx = f.degree_in(0)
    out = [[] for _ in range(dx + 1)]
    for (i, j), c in f.terms.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = c
    return [_utrim(r) for r in out]


def _from_dense(p: int, F: list) -> MultiPoly:
    return MultiPoly(p, {(i, j): c for i, row in enumerate(F) for j, c in enumerate(row) if c})


def _btrim(F: list) -> list:
    while F and not F[-1]:
        F.pop()
    return F


def _bcontent(F: list, p: int) -> list:
    g: list = []
    for row in F:
        if row:
            g = _ugcd(g, row, p) if g else _umonic(row, p)
            if len(g) == 1:
                break
    return g


def _bprimitive(F: list, p: int) -> list:
    c = _bcontent(F, p)
    if len(c) == 1 and c[0] == 1:
        return F
    return [_udivexact(row, c, p) if row else [] for row in F]


def _bprem(F: list, G: list, p: int) -> list:
    """Pseudo-remainder of F by G with respect to x."""
    R = [row[:] for row in F]
    dg = len(G) - 1
    lc = G[-1]
    while len(R) - 1 >= dg and R:
        k = len(R) - 1 - dg
        lr = R[-1]
        R = [_umul(row, lc, p) for row in R]
        for i, grow in enumerate(G):
            R[k + i] = _usub(R[k + i], _umul(lr, grow, p), p)
        _btrim(R)
    return R


def _bgcd(F: list, G: list, p: int) -> list:
    if not F:
        return G
    if not G:
        return F
    cont = _ugcd(_bcontent(F, p), _bcontent(G, p), p)
    a, b = _bprimitive(F, p), _bprimitive(G, p)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _bprem(a, b, p)
        if not r:
            break
        a, b = b, _bprimitive(r, p)
    if len(b) == 1:
        # b is a nonzero element of F_p[y] that is primitive in x, hence a unit
        return [cont]
    return [_umul(row, cont, p) for row in b]


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd under lex order (x > y); ``poly_gcd(f, 0) == f.monic()``."""
    if f.p != g.p:
        raise ConfigurationError(f"modulus mismatch: {f.p} vs {g.p}")
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return MultiPoly.constant(f.p, 1)
    fast = _gcd_by_images(f, g)
    if fast is not None:
        return fast
    return MultiPoly._wrap(f.p, f._f.gcd(g._f)).monic()


def _coefficients(f: MultiPoly, var: int) -> list[flint.nmod_poly]:
    """Coefficients of f as a polynomial in ``var``, each univariate in the other variable."""
    rows: dict[int, dict[int, int]] = {}
    for mono, c in f.terms.items():
        rows.setdefault(mono[var], {})[mono[1 - var]] = c
    out = []
    for row in rows.values():
        dense = [0] * (max(row) + 1)
        for e, c in row.items():
            dense[e] = c
        out.append(flint.nmod_poly(dense, f.p))
    return out


def _content_gcd(f: MultiPoly, g: MultiPoly, var: int, start: flint.nmod_poly | None = None) -> MultiPoly:
    """gcd of every coefficient of f and g with respect to ``var`` (and ``start``)."""
    h = start
    for q in _coefficients(f, var) + _coefficients(g, var):
        h = q if h is None else h.gcd(q)
        if h.degree() == 0:
            return MultiPoly.constant(f.p, 1)
    other = 1 - var
    terms = {(e, 0) if other == 0 else (0, e): int(c) for e, c in enumerate(h.coeffs()) if int(c)}
    return MultiPoly(f.p, terms).monic()


def _free_of(F, G, var: int, p: int) -> bool:
    """True if a constant substitution for the other variable proves deg_var gcd(F, G) = 0.

    Where the substitution keeps the degree of F in ``var``, the image of
    h = gcd(F, G) keeps its degree too and divides both images, so a constant
    image gcd rules out any factor involving ``var``.
    """
    name = VARIABLES[1 - var]
    top = F.degrees()[var]
    for c in range(p):
        fi = F.subs({name: c})
        if fi.is_zero() or fi.degrees()[var] != top:
            continue
        gi = G.subs({name: c})
        if not gi.is_zero() and fi.gcd(gi).is_constant():
            return True
    return False


def _gcd_by_images(f: MultiPoly, g: MultiPoly, trials: int = 2) -> MultiPoly | None:
    """Exact gcd from univariate images when it involves at most one variable; else None.

    First constant substitutions show which variables the gcd is free of; a gcd
    free of one variable is the gcd of the coefficients taken in that variable.
    Failing that, substitute y = x^k + c with k above the x-degrees: a nonzero
    h maps to degree k * deg_y(h) + (top x-degree among its highest y-terms),
    so an image gcd d of degree below k forces h into F_p[x] with h | d.
    """
    F, G = f._f, g._f
    free_x, free_y = _free_of(F, G, 0, f.p), _free_of(F, G, 1, f.p)
    if free_x and free_y:
        return MultiPoly.constant(f.p, 1)
    if free_x:
        return _content_gcd(f, g, 0)
    if free_y:
        return _content_gcd(f, g, 1)
    x = F.context().gens()[0]
    k = max(F.degrees()[0], G.degrees()[0]) + 1
    if k * max(F.degrees()[1], G.degrees()[1]) > KRONECKER_LIMIT:
        return None
    bound = None
    for c in range(min(trials, f.p)):
        sub = x**k + c
        d = F.compose(x, sub).gcd(G.compose(x, sub))
        if d.is_constant():
            return MultiPoly.constant(f.p, 1)
        if d.degrees()[0] < k:
            dense = [0] * (d.degrees()[0] + 1)
            for (i, _), v in zip(d.monoms(), d.coeffs()):
                dense[i] = int(v)
            dx = flint.nmod_poly(dense, f.p)
            bound = dx if bound is None else bound.gcd(dx)
    if bound is None:
        return None
    return _content_gcd(f, g, 1, bound)


def gcd_recursive(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Same contract as ``poly_gcd`` via content/primitive-part reduction in F_p[y][x].

    Pure Python; kept as an independent route for cross-checking the FLINT gcd.
    """
    if f.p != g.p:
        raise ConfigurationError(f"modulus mismatch: {f.p} vs {g.p}")
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    return _from_dense(f.p, _bgcd(_to_dense(f), _to_dense(g), f.p)).monic()


def poly_from_terms(p: int, terms: Iterable[tuple[Monomial, int]]) -> MultiPoly:
    if not is_prime(p):
        raise ConfigurationError(f"modulus {p} is not prime")
    acc: dict = {}
    for m, c in terms:
        acc[m] = acc.get(m, 0) + c
    return MultiPoly(p, acc)
