import pytest
from hypothesis import given, strategies as st

from girthcover.field import FieldElement, PrimeField, is_prime, next_prime_at_least


def sieve_primes(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            for j in range(i * i, limit + 1, i):
                flags[j] = False
    return [i for i, f in enumerate(flags) if f]


def test_add_examples():
    f5, f7 = PrimeField(5), PrimeField(7)
    assert f5(3) + f5(4) == f5(2)
    assert f5(0) + f5(3) == f5(3)
    assert f7(6) + f7(1) == f7(0)


def test_mul_examples():
    f5, f7 = PrimeField(5), PrimeField(7)
    assert f5(2) * f5(3) == f5(1)
    assert f5(1) * f5(4) == f5(4)
    assert f7(3) * f7(5) == f7(1)


def test_inv_examples():
    f5, f7 = PrimeField(5), PrimeField(7)
    assert f5(2).inv() == f5(3)
    assert f5(1).inv() == f5(1)
    assert f7(3).inv() == f7(5)


def test_inv_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        PrimeField(5)(0).inv()


def test_mismatched_moduli_rejected():
    with pytest.raises(ValueError):
        PrimeField(5)(1) + PrimeField(7)(1)
    with pytest.raises(ValueError):
        PrimeField(5)(1) * PrimeField(7)(1)


def test_modulus_must_be_prime_at_least_5():
    for bad in (0, 1, 4, 6, 9, 2, 3):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_next_prime_at_least():
    assert next_prime_at_least(5) == 5
    assert next_prime_at_least(6) == 7
    # oracle: sieve over the relevant window
    primes = sieve_primes(200)
    assert next_prime_at_least(120) == min(p for p in primes if p >= 120) == 127
    for m in range(5, 150):
        assert next_prime_at_least(m) == min(p for p in primes if p >= m)
    with pytest.raises(ValueError):
        next_prime_at_least(4)


def test_is_prime_against_sieve():
    primes = set(sieve_primes(1000))
    for n in range(1001):
        assert is_prime(n) == (n in primes)


@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_field_axioms_exhaustive(q):
    f = PrimeField(q)
    elems = list(f.elements())
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a * a.inv() == f(1)


@pytest.mark.parametrize("q", [5, 7, 11, 101, 1009])
def test_two_and_three_invertible(q):
    f = PrimeField(q)
    assert f(2) * f(2).inv() == f(1)
    assert f(3) * f(3).inv() == f(1)


@given(st.integers(), st.integers(), st.sampled_from([17, 101, 997]))
def test_axioms_sampled(a, b, q):
    f = PrimeField(q)
    x, y = f(a), f(b)
    assert x + y == y + x
    assert x * y == y * x
    assert (x - y) + y == x
    if y != 0:
        assert (x / y) * y == x
