import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lefkit.errors import DivisionByZero, FieldMismatch, NonPrimeModulus
from lefkit.fields import GF, QQ, Scalar, field_arith, is_prime, random_scalar


def test_gf7_division():
    # 3 * 5 = 15 = 1 mod 7, so 3 / 5 = 3 * 3 = 9 = 2
    assert field_arith(Scalar(GF(7), 3), Scalar(GF(7), 5), "div").value == 2


def test_rationals_reduce():
    r = Scalar(QQ, Fraction(1, 2)) + Scalar(QQ, Fraction(1, 2))
    assert r.value == 1 and type(r.value) is int
    assert (Scalar(QQ, 2) / Scalar(QQ, 6)).value == Fraction(1, 3)


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatch):
        Scalar(GF(2), 1) + Scalar(GF(3), 1)
    with pytest.raises(FieldMismatch):
        Scalar(QQ, 1) * Scalar(GF(5), 1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Scalar(QQ, 1) / Scalar(QQ, 0)
    with pytest.raises(DivisionByZero):
        Scalar(GF(5), 1) / Scalar(GF(5), 10)


def test_non_prime_modulus():
    for p in (0, 1, 4, 9, 91, 561):
        with pytest.raises(NonPrimeModulus):
            GF(p)


def test_residues_canonical():
    assert Scalar(GF(5), -1).value == 4
    assert Scalar(GF(5), 12).value == 2
    assert str(GF(5)) == "GF(5)" and str(QQ) == "QQ"


def test_is_prime_against_sieve():
    limit = 2000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]
    assert is_prime(2**61 - 1)


def test_random_scalar_ranges():
    rng = random.Random(0)
    vals = [random_scalar(QQ, rng, 10).value for _ in range(500)]
    assert min(vals) >= 1 and max(vals) <= 10 and len(set(vals)) == 10
    vals = [random_scalar(GF(3), rng).value for _ in range(100)]
    assert set(vals) == {1, 2}
    with pytest.raises(ValueError):
        random_scalar(QQ, rng, 1)


def test_random_scalar_deterministic():
    a = [random_scalar(QQ, random.Random(5)).value for _ in range(3)]
    b = [random_scalar(QQ, random.Random(5)).value for _ in range(3)]
    assert a == b


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 50))
def test_rational_field_axioms(a, b, c):
    x, y, z = Scalar(QQ, Fraction(a, c)), Scalar(QQ, b), Scalar(QQ, c)
    assert (x + y) * z == x * z + y * z
    assert (x - x).value == 0
    assert (x / z) * z == x


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(), st.integers())
def test_prime_field_inverse(p, a, b):
    F = GF(p)
    x = Scalar(F, a)
    if x.value:
        assert (x / x).value == 1
    assert (Scalar(F, a) * Scalar(F, b)).value == (a * b) % p
