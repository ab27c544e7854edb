"""Field construction, index arithmetic, character and square roots."""

import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitsquares.errors import (
    DivisionByZero,
    EvenCharacteristic,
    NonSquare,
    NotPrime,
    ReducibleModulus,
)
from orbitsquares.field import FieldElement, FieldSpec, make_field, smallest_irreducible

F3 = make_field(3)
F7 = make_field(7)
F9 = make_field(3, 2)


def el(field, idx):
    return FieldElement(field, idx)


class TestConstruction:
    def test_prime_field(self):
        assert F7.p == 7 and F7.k == 1 and F7.q == 7

    def test_f9_default_modulus_is_x2_plus_1(self):
        # smallest monic irreducible quadratic over F_3 in the canonical order
        assert F9.modulus == (1, 0, 1)
        assert smallest_irreducible(3, 2) == (1, 0, 1)

    def test_modulus_degree_mismatch(self):
        with pytest.raises(ReducibleModulus):
            FieldSpec(5, 1, (1, 0, 1))

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ReducibleModulus):
            FieldSpec(3, 2, (2, 0, 1))  # x^2 + 2 = (x-1)(x+1) over F_3

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            make_field(9)

    def test_even_characteristic(self):
        with pytest.raises(EvenCharacteristic):
            make_field(2)

    def test_make_field_is_cached(self):
        assert make_field(7) is make_field(7)

    def test_parse(self):
        assert FieldSpec.parse("7").q == 7
        assert FieldSpec.parse("3^2").q == 9
        assert FieldSpec.parse("3^2/(1,0,1)").modulus == (1, 0, 1)

    def test_pickle_roundtrip(self):
        g = pickle.loads(pickle.dumps(F9))
        assert g == F9 and g.q == 9


class TestArithmetic:
    def test_mul_f7(self):
        assert (el(F7, 3) * el(F7, 5)).idx == 1

    def test_mul_f9_generator_squares_to_minus_one(self):
        # t = residue of x; t^2 = -1 = 2 with modulus x^2 + 1
        t = F9.gen
        assert t == F9.from_coords((0, 1))
        assert (t * t) == F9.from_int(2)

    def test_div_by_zero(self):
        with pytest.raises(DivisionByZero):
            el(F7, 1) / el(F7, 0)

    def test_pow_fermat(self):
        assert (el(F7, 3) ** 6).idx == 1

    def test_pow_direct(self):
        assert (el(F7, 3) ** 3).idx == 6

    def test_pow_zero_zero(self):
        assert (el(F7, 0) ** 0).idx == F7.one_idx

    def test_add_sub_neg(self):
        a, b = el(F7, 5), el(F7, 4)
        assert (a + b).idx == 2
        assert (a - b).idx == 1
        assert (-a).idx == 2

    def test_int_coercion(self):
        assert el(F7, 3) + 4 == F7.zero
        assert 2 * el(F7, 4) == el(F7, 1)


class TestCharacter:
    def test_chi_zero(self):
        assert F7.chi_i(0) == 0

    def test_chi_f7(self):
        # nonzero squares mod 7 are {1, 2, 4}
        assert [F7.chi_i(i) for i in range(7)] == [0, 1, 1, -1, 1, -1, -1]

    def test_chi_f9_of_t(self):
        t = F9.from_coords((1, 0))
        assert t.chi() == 1  # t^4 = (t^2)^2 = 1

    def test_chi_multiplicative(self):
        for a in range(1, 7):
            for b in range(1, 7):
                assert F7.chi_i(F7.mul_i(a, b)) == F7.chi_i(a) * F7.chi_i(b)


class TestSqrt:
    def test_sqrt_zero(self):
        assert F7.sqrt_i(0) == 0

    def test_sqrt_canonical(self):
        assert F7.sqrt_i(2) == 3  # canonical pick of {3, 4}

    def test_sqrt_nonsquare(self):
        with pytest.raises(NonSquare):
            F7.sqrt_i(3)

    def test_sqrt_squares_back(self):
        for F in (F3, F7, F9):
            for a in F.elements():
                if a.chi() >= 0:
                    r = a.sqrt()
                    assert r * r == a


class TestElements:
    def test_f3_stream(self):
        assert [e.idx for e in F3.elements()] == [0, 1, 2]

    def test_f9_stream(self):
        es = list(F9.elements())
        assert len(es) == 9 and len(set(es)) == 9 and es[0].is_zero()

    def test_f7_no_repeats(self):
        es = list(F7.elements())
        assert len(es) == 7 and len(set(es)) == 7


@settings(max_examples=60)
@given(a=st.integers(0, 8), b=st.integers(0, 8), c=st.integers(0, 8))
def test_f9_ring_axioms(a, b, c):
    x, y, z = el(F9, a), el(F9, b), el(F9, c)
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    assert x + y == y + x and x * y == y * x


@settings(max_examples=30)
@given(a=st.integers(1, 8))
def test_f9_inverse(a):
    x = el(F9, a)
    assert x * x.inverse() == F9.one
    assert (F9.one / x) == x.inverse()
