"""Classification machinery: the five exceptional shapes that break
dynamical 2-ordinarity, finite-depth factorization oracles, exceptional
family generators from the coefficient recurrences, and linear conjugacy
search (including conjugacy to Chebyshev polynomials)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import chebyshev as cheb
from .errors import (
    DegreeBudgetExceeded,
    DegreeMismatch,
    DegreeTooSmall,
    FamilyDegenerate,
    MixedFields,
    ParityMismatch,
    RecurrenceDivisorVanishes,
    SqrtDoesNotExist,
    ZeroA,
)
from .field import FieldElement, FieldSpec
from .fpoly import DEFAULT_DEGREE_BUDGET, Factorization, Poly, factor

TWO_ORDINARY = "TwoOrdinary"
NOT_TWO_ORDINARY = "NotTwoOrdinary"
ORDINARY = "Ordinary"
NOT_ORDINARY = "NotOrdinary"


def _as_p_power(d: int, p: int) -> int | None:
    """e >= 1 with d == p^e, else None."""
    e = 0
    while d > 1 and d % p == 0:
        d //= p
        e += 1
    return e if d == 1 and e >= 1 else None


def _even_square_root(fac: Factorization) -> Poly | None:
    """Monic h with monic(f) = h^2 when all multiplicities are even."""
    F = fac.unit.field
    h = Poly.one(F)
    for g, m in fac.factors:
        if m % 2:
            return None
        h = h * g ** (m // 2)
    return h


def _recurrence_holds(coeffs: list[FieldElement], B: FieldElement, n: int, even_family: bool) -> bool:
    """i(2i-1)B a_i == -2(n+i-1)(n-i+1)a_{i-1} (even) or
    i(2i-1)B a_i == -2(n-i+1)(n+i)a_{i-1} (odd), checked without division."""
    F = B.field
    for i in range(1, n + 1):
        lhs = F.from_int(i * (2 * i - 1)) * B * coeffs[i]
        if even_family:
            rhs = F.from_int(-2 * (n + i - 1) * (n - i + 1)) * coeffs[i - 1]
        else:
            rhs = F.from_int(-2 * (n - i + 1) * (n + i)) * coeffs[i - 1]
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class FormMatch:
    form: str  # one of "a".."e"
    witness: dict

    def to_json(self):
        out = {"form": self.form}
        for k, v in self.witness.items():
            if isinstance(v, FieldElement):
                out[k] = v.idx
            elif isinstance(v, Poly):
                out[k] = str(v)
            else:
                out[k] = v
        return out


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    matched_forms: tuple[FormMatch, ...]
    ordinary_verdict: str
    ordinary_witness: dict | None = None

    def matched(self, form: str) -> bool:
        return any(m.form == form for m in self.matched_forms)

    def to_json(self):
        ow = None
        if self.ordinary_witness is not None:
            ow = {
                k: (v.idx if isinstance(v, FieldElement) else v)
                for k, v in self.ordinary_witness.items()
            }
        return {
            "verdict": self.verdict,
            "forms": [m.to_json() for m in self.matched_forms],
            "ordinary": {"verdict": self.ordinary_verdict, "witness": ow},
        }


def _single_linear_power(fac: Factorization, d: int):
    """(A, B) when the factorization is A*(x-B)^d, else None."""
    if len(fac.factors) != 1:
        return None
    g, m = fac.factors[0]
    if g.degree != 1 or m != d:
        return None
    return fac.unit, -g.coefficient(0)


def classify_ordinary(f: Poly, seed: int = 0):
    """(verdict, witness): NotOrdinary iff f = A(x-B)^(p^e)."""
    d = f.degree
    if d < 2:
        raise DegreeTooSmall("classification needs degree >= 2")
    F = f.field
    fac = factor(f, seed)
    single = _single_linear_power(fac, d)
    if single is not None:
        e = _as_p_power(d, F.p)
        if e is not None:
            A, B = single
            return NOT_ORDINARY, {"A": A, "B": B, "e": e}
    return ORDINARY, None


def classify_2_ordinary(f: Poly, seed: int = 0) -> ClassificationReport:
    """Closed-form membership tests for the five exceptional shapes.

    Shapes (d)/(e) are recognized by scanning candidate constants B and
    verifying the coefficient recurrence plus the constant-term condition on
    the extracted monic square root (both are invariant under the rescaling
    freedom in A and h/g, so the monic representative decides membership).
    """
    d = f.degree
    if d < 2:
        raise DegreeTooSmall("classification needs degree >= 2")
    F = f.field
    matches: list[FormMatch] = []
    fac = factor(f, seed)

    # (a) f = A(x-B)^(p^e)
    single = _single_linear_power(fac, d)
    ordinary_verdict, ordinary_witness = ORDINARY, None
    if single is not None:
        e = _as_p_power(d, F.p)
        if e is not None:
            A, B = single
            matches.append(FormMatch("a", {"A": A, "B": B, "e": e}))
            ordinary_verdict, ordinary_witness = NOT_ORDINARY, {"A": A, "B": B, "e": e}

    if d % 2 == 0:
        # (b) f = A g^2
        h = _even_square_root(fac)
        if h is not None:
            matches.append(FormMatch("b", {"A": fac.unit, "g": h}))
        # (d) f = A h^2 + B; the conditions force f(0) = 0
        if f.coefficient(0).is_zero():
            n = d // 2
            for B in F.elements():
                if B.is_zero():
                    continue
                shifted = f - Poly.constant(B)
                hfac = factor(shifted, seed)
                hroot = _even_square_root(hfac)
                if hroot is None:
                    continue
                c = hfac.unit
                if c * hroot.coefficient(0) ** 2 != -B:
                    continue
                if _recurrence_holds(hroot.element_coeffs(), B, n, even_family=True):
                    matches.append(FormMatch("d", {"A": c, "B": B, "h": hroot}))
    else:
        # (c) f = A x g^2
        mult_x = fac.multiplicity_of(Poly.x(F))
        if mult_x % 2 == 1 and all(
            m % 2 == 0 for g, m in fac.factors if g != Poly.x(F)
        ):
            g = Poly.x(F) ** ((mult_x - 1) // 2)
            for irr, m in fac.factors:
                if irr != Poly.x(F):
                    g = g * irr ** (m // 2)
            matches.append(FormMatch("c", {"A": fac.unit, "g": g}))
        # (e) f = A(x-B)g^2; the conditions force B = f(0)
        B = f.coefficient(0)
        if not B.is_zero() and f.evaluate(B).is_zero():
            n = (d - 1) // 2
            linear = Poly.from_elements(F, [-B, F.one])
            mult_lin = fac.multiplicity_of(linear)
            if mult_lin % 2 == 1 and all(
                m % 2 == 0 for gg, m in fac.factors if gg != linear
            ):
                g = linear ** ((mult_lin - 1) // 2)
                for irr, m in fac.factors:
                    if irr != linear:
                        g = g * irr ** (m // 2)
                c = fac.unit
                if c * g.coefficient(0) ** 2 == F.from_int(-1) and _recurrence_holds(
                    g.element_coeffs(), B, n, even_family=False
                ):
                    matches.append(FormMatch("e", {"A": c, "B": B, "g": g}))

    verdict = NOT_TWO_ORDINARY if matches else TWO_ORDINARY
    return ClassificationReport(
        verdict=verdict,
        matched_forms=tuple(matches),
        ordinary_verdict=ordinary_verdict,
        ordinary_witness=ordinary_witness,
    )


# --- single-root power-map diagnostics -------------------------------------

@dataclass(frozen=True)
class HnSequence:
    values: tuple[FieldElement, ...]
    repeat: tuple[int, int]  # first (i, j), i < j, with H_i == H_j


def hn_sequence(A: FieldElement, B: FieldElement, d: int, max_n: int | None = None) -> HnSequence:
    """H_n = W_n/Z_n with Z_0=A, W_0=-B, Z_n=A Z_{n-1}^d, W_n=A W_{n-1}^d - B.

    Runs until the first repeat, which the pigeonhole guarantees within q+1
    steps; max_n only tightens that cap."""
    if A.is_zero():
        raise ZeroA("A must be nonzero")
    F = A.field
    cap = F.q + 1 if max_n is None else max_n
    Z, W = A, -B
    values: list[FieldElement] = []
    seen: dict[int, int] = {}
    for n_idx in range(cap + 1):
        H = W / Z
        if H.idx in seen:
            return HnSequence(values=tuple(values), repeat=(seen[H.idx], n_idx))
        seen[H.idx] = n_idx
        values.append(H)
        Z = A * Z**d
        W = A * W**d - B
    raise AssertionError("no repeat within the pigeonhole cap")  # pragma: no cover


# --- exceptional family generation -----------------------------------------

@dataclass(frozen=True)
class FamilyParams:
    family: str  # "d" (even degree) or "e" (odd degree)
    field: FieldSpec
    A: FieldElement
    B: FieldElement
    sign: int = 1  # which square-root branch seeds a_0


def generate_family(params: FamilyParams, d: int) -> Poly:
    """Build the exceptional polynomial of degree d from the recurrence."""
    F = params.field
    A, B = params.A, params.B
    if A.is_zero() or B.is_zero():
        raise ValueError("family parameters require A != 0 and B != 0")
    if params.sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if params.family == "d":
        if d % 2:
            raise ParityMismatch("even-degree family needs even d")
        n = d // 2
        seed_sq = -B / A
        even_family = True
    elif params.family == "e":
        if d % 2 == 0:
            raise ParityMismatch("odd-degree family needs odd d")
        n = (d - 1) // 2
        seed_sq = -F.one / A
        even_family = False
    else:
        raise ValueError(f"unknown family {params.family!r}")
    if seed_sq.chi() == -1:
        raise SqrtDoesNotExist(f"{seed_sq!r} has no square root in F_{F.q}")
    a = [seed_sq.sqrt() if params.sign == 1 else -seed_sq.sqrt()]
    for i in range(1, n + 1):
        div = F.from_int(i * (2 * i - 1)) * B
        if div.is_zero():
            raise RecurrenceDivisorVanishes(
                f"i(2i-1)B vanishes at i={i} in characteristic {F.p}"
            )
        if even_family:
            num = F.from_int(-2 * (n + i - 1) * (n - i + 1))
        else:
            num = F.from_int(-2 * (n - i + 1) * (n + i))
        a.append(num * a[i - 1] / div)
    core = Poly.from_elements(F, a)
    if core.degree != n:
        raise FamilyDegenerate(
            f"recurrence coefficients vanish before degree {n} (char {F.p})"
        )
    if even_family:
        return core * core * Poly.constant(A) + Poly.constant(B)
    linear = Poly.from_elements(F, [-B, F.one])
    return Poly.constant(A) * linear * core * core


# --- finite-depth factorization oracles ------------------------------------

def iterate_factor_levels(f: Poly, depth: int, seed: int = 0, budget: int | None = None):
    """Yield (n, {irreducible -> multiplicity}) for f^n, n = 1..depth.

    Levels are built incrementally: the factors of f^n are the factors of
    g(f(x)) over the factors g of f^(n-1), so f^n itself is never
    materialized and per-level work follows the actual factor sizes."""
    budget = DEFAULT_DEGREE_BUDGET if budget is None else budget
    d = f.degree
    level = factor(f, seed).as_dict()
    yield 1, level
    for n in range(2, depth + 1):
        if d >= 2 and d**n > budget:
            raise DegreeBudgetExceeded(f"deg {d}^{n} exceeds budget {budget}")
        nxt: dict[Poly, int] = {}
        for g, m in level.items():
            comp = g.compose(f)
            for h, e in factor(comp, seed).factors:
                nxt[h] = nxt.get(h, 0) + m * e
        level = nxt
        yield n, level


@dataclass(frozen=True)
class OracleResult:
    """CertifiedNot(level) when certified_not, else ConsistentUpTo(depth)."""

    certified_not: bool
    level: int | None
    depth: int

    def __str__(self):
        if self.certified_not:
            return f"CertifiedNot({self.level})"
        return f"ConsistentUpTo({self.depth})"


def _oracle(f: Poly, depth: int, seed: int, budget: int | None, need_odd: bool) -> OracleResult:
    if f.degree < 1:
        raise DegreeTooSmall("oracle needs a nonconstant polynomial")
    seen: set[Poly] = {Poly.x(f.field)}  # f^0 = x
    for n, level in iterate_factor_levels(f, depth, seed, budget):
        fresh = [
            g
            for g, m in level.items()
            if (not need_odd or m % 2 == 1) and g not in seen
        ]
        if not fresh:
            return OracleResult(certified_not=True, level=n, depth=depth)
        seen.update(level.keys())
    return OracleResult(certified_not=False, level=None, depth=depth)


def oracle_2_ordinary(f: Poly, depth: int, seed: int = 0, budget: int | None = None) -> OracleResult:
    """Look for a level n <= depth at which no new odd-multiplicity factor appears."""
    return _oracle(f, depth, seed, budget, need_odd=True)


def oracle_ordinary(f: Poly, depth: int, seed: int = 0, budget: int | None = None) -> OracleResult:
    """Look for a level n <= depth at which no new factor at all appears."""
    return _oracle(f, depth, seed, budget, need_odd=False)


# --- linear conjugacy ------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyWitness:
    a: FieldElement
    b: FieldElement

    def apply(self, f: Poly) -> Poly:
        """phi o f o phi^(-1) for phi(x) = a x + b."""
        F = f.field
        phi = Poly.from_elements(F, [self.b, self.a])
        inv_a = self.a.inverse()
        phi_inv = Poly.from_elements(F, [-self.b * inv_a, inv_a])
        return phi.compose(f.compose(phi_inv))

    def map_point(self, x: FieldElement) -> FieldElement:
        return self.a * x + self.b


def are_conjugate(f: Poly, g: Poly) -> ConjugacyWitness | None:
    """First linear map phi (a, b in enumeration order) with phi o f o phi^(-1) = g."""
    if f.field != g.field:
        raise MixedFields("conjugacy requires a common field")
    if f.degree != g.degree:
        raise DegreeMismatch("conjugacy preserves degree")
    F = f.field
    for a in F.elements():
        if a.is_zero():
            continue
        for b in F.elements():
            w = ConjugacyWitness(a, b)
            if w.apply(f) == g:
                return w
    return None


def chebyshev_conjugacy(f: Poly) -> tuple[str, ConjugacyWitness] | None:
    """Conjugacy of f to +T_d or -T_d reduced into the field; tries + first."""
    d = f.degree
    F = f.field
    t = cheb.chebyshev(d).reduce_mod(F)
    for sign, target in (("+", t), ("-", -t)):
        w = are_conjugate(f, target)
        if w is not None:
            return sign, w
    return None
