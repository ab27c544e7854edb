"""Arithmetic in F_{p^k} for odd prime p, with quadratic character and square roots.

Elements are encoded as integer indices.  An element with power-basis
coordinates (c_0, ..., c_{k-1}) (c_0 = constant coordinate) has index

    idx = c_0 * p^(k-1) + c_1 * p^(k-2) + ... + c_{k-1}

so that increasing index order coincides with lexicographic order on the
coordinate vector.  Multiplicative structure is handled with discrete
exp/log tables w.r.t. the smallest generator (in index order), which makes
the character, inverses and square roots O(1) and fully deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    MixedFields,
    NonSquare,
    NotPrime,
    ReducibleModulus,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomial helpers over F_p (plain int lists, constant first) ---

def _pnorm(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _pdivmod(res, mod, p)[1]


def _pdivmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and _pnorm(a):
        shift = len(a) - 1 - db
        c = a[-1] * inv_lb % p
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _pnorm(a)
    return _pnorm(q), a


def _pgcd(a, b, p):
    a, b = _pnorm(list(a)), _pnorm(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod_x(e, mod, p):
    """x^e mod `mod` over F_p."""
    result = [1]
    base = _pdivmod([0, 1], mod, p)[1]
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible_fp(f, p) -> bool:
    """Irreducibility of a monic degree-k polynomial over F_p."""
    k = len(f) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    if _ppowmod_x(p**k, f, p) != [0, 1]:
        return False
    for r in prime_factors(k):
        h = _ppowmod_x(p ** (k // r), f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(diff, f, p)
        if len(g) - 1 != 0:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Ordering is on the coefficient tuple (c_0, ..., c_{k-1}).
    """
    if k == 1:
        return (0, 1)
    for idx in range(p**k):
        coeffs = []
        rem = idx
        for i in range(k):
            coeffs.append(rem // p ** (k - 1 - i))
            rem %= p ** (k - 1 - i)
        cand = coeffs + [1]
        if _is_irreducible_fp(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """A concrete realization of F_{p^k}; immutable after construction."""

    __slots__ = (
        "p", "k", "q", "modulus", "_exp", "_log", "_neg", "_pk", "one_idx", "_key",
    )

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ReducibleModulus(
                    f"modulus must be monic of degree {k}, got {list(modulus)}"
                )
            if not _is_irreducible_fp(list(modulus), p):
                raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._pk = [p**i for i in range(k)]  # place values, c_i weight p^(k-1-i)
        self._key = (p, k, modulus)
        self._build_tables()

    # -- encoding -----------------------------------------------------------

    def coords(self, idx: int) -> tuple[int, ...]:
        """Power-basis coordinates (c_0, ..., c_{k-1}) of an element index."""
        p, k = self.p, self.k
        out = []
        for i in range(k):
            w = p ** (k - 1 - i)
            out.append(idx // w)
            idx %= w
        return tuple(out)

    def index(self, coords) -> int:
        p, k = self.p, self.k
        return sum((c % p) * p ** (k - 1 - i) for i, c in enumerate(coords))

    def from_int(self, n: int):
        """The image of the integer n in the prime subfield."""
        return FieldElement(self, (n % self.p) * self.p ** (self.k - 1))

    def from_coords(self, coords):
        return FieldElement(self, self.index(coords))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, self.one_idx)

    @property
    def gen(self):
        """The residue class of x modulo the field modulus (for k >= 2)."""
        return self.from_coords([0, 1] + [0] * (self.k - 2)) if self.k > 1 else self.one

    def elements(self):
        """All q elements, in coordinate-lexicographic order."""
        for idx in range(self.q):
            yield FieldElement(self, idx)

    # -- table construction -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        ca = list(self.coords(a))  # already constant-first
        cb = list(self.coords(b))
        _pnorm(ca)
        _pnorm(cb)
        if not ca or not cb:
            return 0
        rem = _pmulmod(ca, cb, list(self.modulus), self.p)
        rem = rem + [0] * (self.k - len(rem))
        return self.index(tuple(rem))

    def _raw_pow(self, a: int, e: int) -> int:
        result = self.one_idx
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        self.one_idx = p ** (k - 1)
        # negation table
        self._neg = [self.index(tuple((-c) % p for c in self.coords(i))) for i in range(q)]
        # find smallest generator of the multiplicative group
        rs = prime_factors(q - 1)
        gen = None
        for cand in range(1, q):
            if all(self._raw_pow(cand, (q - 1) // r) != self.one_idx for r in rs):
                gen = cand
                break
        exp = [0] * (q - 1)
        log = [0] * q
        cur = self.one_idx
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._raw_mul(cur, gen)
        self._exp = exp
        self._log = log

    # -- index-level kernels ------------------------------------------------

    def add_i(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return self.index(tuple((x + y) % p for x, y in zip(self.coords(a), self.coords(b))))

    def sub_i(self, a: int, b: int) -> int:
        return self.add_i(a, self._neg[b])

    def neg_i(self, a: int) -> int:
        return self._neg[a]

    def mul_i(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div_i(self, a: int, b: int) -> int:
        return self.mul_i(a, self.inv_i(b))

    def pow_i(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return self.one_idx if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def chi_i(self, a: int) -> int:
        """Quadratic character as a sign in {-1, 0, +1}."""
        if a == 0:
            return 0
        return 1 if self._log[a] % 2 == 0 else -1

    def sqrt_i(self, a: int) -> int:
        """Canonical square root: the root with the smaller index."""
        if a == 0:
            return 0
        e = self._log[a]
        if e % 2:
            raise NonSquare(f"element {self.coords(a)} is not a square")
        r = self._exp[e // 2]
        return min(r, self._neg[r])

    # -- misc ---------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse "p", "p^k", or "p^k/(c0,c1,...,1)"."""
        text = text.strip()
        modulus = None
        if "/" in text:
            head, tail = text.split("/", 1)
            tail = tail.strip()
            if not (tail.startswith("(") and tail.endswith(")")):
                raise ValueError(f"bad modulus syntax in field spec {text!r}")
            modulus = [int(t) for t in tail[1:-1].split(",")]
            text = head.strip()
        if "^" in text:
            p_s, k_s = text.split("^", 1)
            p, k = int(p_s), int(k_s)
        else:
            p, k = int(text), 1
        return cls(p, k, modulus)

    def __str__(self):
        if self.k == 1:
            return str(self.p)
        return f"{self.p}^{self.k}"

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __getstate__(self):
        return self._key

    def __setstate__(self, state):
        p, k, modulus = state
        self.__init__(p, k, modulus)


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1, modulus: tuple | None = None) -> FieldSpec:
    """Construct (and cache) a FieldSpec; modulus defaults to the smallest irreducible."""
    return FieldSpec(p, k, modulus)


class FieldElement:
    """An element of a FieldSpec; a thin immutable wrapper over its index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: FieldSpec, idx: int):
        self.field = field
        self.idx = idx

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coords(self.idx)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields("elements belong to different fields")
            return other.idx
        if isinstance(other, int):
            return self.field.from_int(other).idx
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add_i(self.idx, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub_i(self.idx, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub_i(o, self.idx))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_i(self.idx))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul_i(self.idx, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise DivisionByZero("division by zero")
        return FieldElement(self.field, self.field.div_i(self.idx, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.idx == 0:
            raise DivisionByZero("division by zero")
        return FieldElement(self.field, self.field.div_i(o, self.idx))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_i(self.idx, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_i(self.idx))

    def chi(self) -> int:
        """Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise."""
        return self.field.chi_i(self.idx)

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.field, self.field.sqrt_i(self.idx))

    def is_zero(self) -> bool:
        return self.idx == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.idx == other.idx
        if isinstance(other, int):
            return self.idx == self.field.from_int(other).idx
        return NotImplemented

    def __hash__(self):
        return hash((self.field._key, self.idx))

    def __lt__(self, other):
        # coordinate-lexicographic order == index order
        o = self._coerce(other)
        return self.idx < o

    def __repr__(self):
        if self.field.k == 1:
            return str(self.idx)
        return f"{self.coeffs}"
