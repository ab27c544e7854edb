"""Univariate polynomial algebra over a FieldSpec.

Coefficients are stored as element indices (constant term first, no
trailing zeros).  Includes composition/iteration with a degree budget,
gcd, complete factorization (squarefree / distinct-degree / seeded
equal-degree splitting) and constant-times-square detection.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .errors import (
    BothZero,
    ConstantInput,
    DegreeBudgetExceeded,
    DivisionByZero,
    MixedFields,
)
from .field import FieldElement, FieldSpec

DEFAULT_DEGREE_BUDGET = int(os.environ.get("ORBITSQUARES_DEGREE_BUDGET", "4096"))


def _norm(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    """Dense univariate polynomial over a FieldSpec; immutable value type."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs, *, normalize: bool = True):
        self.field = field
        c = list(coeffs)
        if normalize:
            _norm(c)
        self.coeffs = tuple(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_elements(cls, field: FieldSpec, elems) -> "Poly":
        return cls(field, [e.idx if isinstance(e, FieldElement) else field.from_int(e).idx
                           for e in elems])

    @classmethod
    def from_ints(cls, field: FieldSpec, ints) -> "Poly":
        """Coefficients given as integers in the prime subfield."""
        return cls(field, [field.from_int(n).idx for n in ints])

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Poly":
        """Comma-separated coefficient list, constant term first.

        Each entry is an element index (for prime fields, the residue mod p).
        """
        idxs = [int(t) % field.q for t in text.strip().split(",")]
        return cls(field, idxs)

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, [field.one_idx])

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, [0, field.one_idx])

    @classmethod
    def constant(cls, c: FieldElement) -> "Poly":
        return cls(c.field, [c.idx])

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one_idx,)

    def leading(self) -> FieldElement:
        if not self.coeffs:
            return self.field.zero
        return FieldElement(self.field, self.coeffs[-1])

    def coefficient(self, i: int) -> FieldElement:
        idx = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.field, idx)

    def element_coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedFields("polynomials over different fields")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add_i(out[i], c)
        return Poly(F, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg_i(c) for c in self.coeffs], normalize=False)

    def __mul__(self, other) -> "Poly":
        F = self.field
        if isinstance(other, FieldElement):
            other = Poly.constant(other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        mul, add = F.mul_i, F.add_i
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(F, out)

    def scale(self, c: FieldElement) -> "Poly":
        F = self.field
        mul = F.mul_i
        return Poly(F, [mul(ci, c.idx) for ci in self.coeffs])

    def __divmod__(self, other: "Poly"):
        self._check(other)
        F = self.field
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lb = F.inv_i(b[-1])
        q = [0] * max(0, len(a) - db)
        mul, sub = F.mul_i, F.sub_i
        while len(a) - 1 >= db and a:
            shift = len(a) - 1 - db
            c = mul(a[-1], inv_lb)
            q[shift] = c
            for i, bi in enumerate(b):
                if bi:
                    a[shift + i] = sub(a[shift + i], mul(c, bi))
            _norm(a)
        return Poly(F, q), Poly(F, a)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pow_mod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def monic(self) -> "Poly":
        if self.is_zero() or self.coeffs[-1] == self.field.one_idx:
            return self
        return self.scale(self.leading().inverse())

    # -- evaluation / composition / calculus --------------------------------

    def evaluate(self, a: FieldElement) -> FieldElement:
        if isinstance(a, FieldElement):
            if a.field != self.field:
                raise MixedFields("point and polynomial over different fields")
            ai = a.idx
        else:
            ai = self.field.from_int(a).idx
        return FieldElement(self.field, self.eval_i(ai))

    def eval_i(self, ai: int) -> int:
        F = self.field
        acc = 0
        mul, add = F.mul_i, F.add_i
        for c in reversed(self.coeffs):
            acc = add(mul(acc, ai), c)
        return acc

    def __call__(self, a):
        return self.evaluate(a)

    def compose(self, other: "Poly") -> "Poly":
        """self(other(x)) by Horner over polynomial arguments."""
        self._check(other)
        F = self.field
        acc = Poly.zero(F)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly(F, [c])
        return acc

    def iterate(self, n: int, budget: int | None = None) -> "Poly":
        """n-fold self-composition; iterate(0) is x."""
        if n < 0:
            raise ValueError("iteration count must be nonnegative")
        budget = DEFAULT_DEGREE_BUDGET if budget is None else budget
        if self.degree >= 2 and self.degree**n > budget:
            raise DegreeBudgetExceeded(
                f"deg {self.degree}^{n} exceeds degree budget {budget}"
            )
        acc = Poly.x(self.field)
        for _ in range(n):
            acc = acc.compose(self)
        return acc

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul_i(self.coeffs[i], F.from_int(i).idx))
        return Poly(F, out)

    # -- misc ---------------------------------------------------------------

    def shift_const(self, c: FieldElement) -> "Poly":
        """self + c (constant)."""
        F = self.field
        out = list(self.coeffs) or [0]
        out[0] = F.add_i(out[0], c.idx)
        return Poly(F, out)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field._key, self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs[::-1])

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __repr__(self):
        return f"Poly({self.field}; {self})"


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# --- factorization ---------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^mult) == input, factors monic irreducible, sorted."""

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for g, m in self.factors:
            out = out * g**m
        return out

    def as_dict(self) -> dict[Poly, int]:
        return dict(self.factors)

    def multiplicity_of(self, g: Poly) -> int:
        for h, m in self.factors:
            if h == g:
                return m
        return 0


def _pth_root(f: Poly) -> Poly:
    """p-th root of f(x) = g(x^p); valid when the derivative vanishes."""
    F = f.field
    p, q = F.p, F.q
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.pow_i(f.coeffs[i], q // p))
    return Poly(F, out)


def _squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic input; list of (squarefree part, multiplicity), handles char p."""
    F = f.field
    p = F.p
    out: list[tuple[Poly, int]] = []
    fd = f.derivative()
    if fd.is_zero():
        for g, m in _squarefree_decomposition(_pth_root(f)):
            out.append((g, m * p))
        return out
    c = gcd(f, fd)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if not c.is_one():
        for g, m in _squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree input; list of (product of irreducibles of degree e, e)."""
    F = f.field
    q = F.q
    out = []
    x = Poly.x(F)
    h = x % f
    e = 0
    while f.degree > 0:
        e += 1
        if f.degree < 2 * e:
            out.append((f, f.degree))
            break
        h = h.pow_mod(q, f)
        g = gcd(h - x, f)
        if not g.is_one():
            out.append((g, e))
            f = f // g
            h = h % f
    return out


def _equal_degree_split(f: Poly, e: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus for a monic product of distinct degree-e irreducibles."""
    F = f.field
    if f.degree == e:
        return [f]
    q = F.q
    exponent = (q**e - 1) // 2
    while True:
        a = Poly(F, [rng.randrange(q) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = gcd(a, f) if not a.is_zero() else f
        if not g.is_one() and g.degree < f.degree:
            left, right = g, f // g
        else:
            b = a.pow_mod(exponent, f)
            g = gcd(b - Poly.one(F), f)
            if g.is_one() or g.degree == f.degree:
                continue
            left, right = g, f // g
        return _equal_degree_split(left, e, rng) + _equal_degree_split(right, e, rng)


def factor(f: Poly, seed: int = 0) -> Factorization:
    """Complete irreducible factorization with deterministic output order.

    Randomized splitting uses a generator derived from the caller's seed, so
    identical (f, seed) pairs give identical work; the output order is sorted
    by (degree, coefficients) regardless.
    """
    if f.degree < 1:
        raise ConstantInput("cannot factor a constant polynomial")
    unit = f.leading()
    mf = f.monic()
    rng = random.Random(repr((seed, f.field._key, f.coeffs)))
    found: dict[Poly, int] = {}
    for sf, mult in _squarefree_decomposition(mf):
        for prod, e in _distinct_degree(sf):
            for irr in _equal_degree_split(prod, e, rng):
                found[irr] = found.get(irr, 0) + mult
    ordered = tuple(sorted(found.items(), key=lambda t: t[0].sort_key()))
    return Factorization(unit=unit, factors=ordered)


@dataclass(frozen=True)
class SquareDecomposition:
    """f == c * h^2 with h monic; c_is_square reports squareness of c in F_q."""

    c: FieldElement
    h: Poly
    c_is_square: bool


def constant_times_square(f: Poly, seed: int = 0) -> SquareDecomposition | None:
    """Detect f = c*h^2 (every irreducible factor with even multiplicity).

    Returns None when some factor has odd multiplicity.  Constants are
    treated as c * 1^2; the zero polynomial yields None.
    """
    if f.is_zero():
        return None
    F = f.field
    if f.degree == 0:
        c = f.leading()
        return SquareDecomposition(c=c, h=Poly.one(F), c_is_square=c.chi() >= 0)
    if f.degree % 2:
        return None
    fac = factor(f, seed)
    h = Poly.one(F)
    for g, m in fac.factors:
        if m % 2:
            return None
        h = h * g ** (m // 2)
    c = fac.unit
    return SquareDecomposition(c=c, h=h, c_is_square=c.chi() >= 0)
