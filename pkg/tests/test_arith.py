"""Exact-arithmetic layer: spec'd values plus brute-force oracles."""

import math
import random

import numpy as np
import pytest

from spinsieve import arith as ar


def trial_division(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def test_factorize_examples():
    assert ar.factorize(1).factors == ()
    assert ar.factorize(30030).factors == trial_division(30030)
    assert ar.factorize(2**40).factors == ((2, 40),)


def test_factorize_roundtrip_exhaustive():
    for n in range(1, 10**6 + 1, 1):
        f = ar.factorize(n)
        prod = 1
        for p, e in f.factors:
            prod *= p**e
        assert prod == n


def test_factorize_random_63bit():
    rng = random.Random(0)
    for _ in range(10**4):
        n = rng.randrange(1, 2**63)
        f = ar.factorize(n)
        prod = 1
        for p, e in f.factors:
            assert ar.is_prime(p) and e >= 1
            prod *= p**e
        assert prod == n
        assert [p for p, _ in f.factors] == sorted(p for p, _ in f.factors)


def test_is_prime_examples_and_oracle():
    assert ar.is_prime(2) and ar.is_prime(97) and not ar.is_prime(91)
    sieve = set(ar.primes_up_to(50000).tolist())
    for n in range(50000):
        assert ar.is_prime(n) == (n in sieve)
    # vectorized path agrees with the scalar one
    rng = np.random.default_rng(1)
    v = rng.integers(2, 2**32 - 1, 5000)
    assert (ar.is_prime_vec(v) == np.array([ar.is_prime(int(x)) for x in v])).all()


def test_multiplicative_functions():
    assert ar.mobius(30) == -1
    assert ar.tau_k(12, 3) == 18
    assert ar.von_mangoldt(32) == pytest.approx(math.log(2), abs=1e-15)
    for n in range(1, 2000):
        f = trial_division(n)
        mu = 0 if any(e > 1 for _, e in f) else (-1) ** len(f)
        assert ar.mobius(n) == mu
        assert ar.euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    # tau_k against direct tuple enumeration
    for n in (1, 2, 12, 30, 64, 360):
        triples = sum(
            1
            for a in range(1, n + 1)
            for b in range(1, n // a + 1)
            if n % (a * b) == 0
        )
        assert ar.tau_k(n, 3) == triples


def test_jacobi_examples_and_multiplicativity():
    assert ar.jacobi(2, 1) == 1
    assert ar.jacobi(2, 3) == -1
    assert ar.jacobi(3, 5) == -1
    with pytest.raises(ValueError):
        ar.jacobi(3, 10)
    rng = random.Random(2)
    for _ in range(2000):
        m1 = rng.randrange(1, 10**5) * 2 + 1
        m2 = rng.randrange(1, 10**5) * 2 + 1
        a = rng.randrange(-(10**6), 10**6)
        assert ar.jacobi(a, m1 * m2) == ar.jacobi(a, m1) * ar.jacobi(a, m2)
        b = rng.randrange(-(10**6), 10**6)
        assert ar.jacobi(a * b, m1) == ar.jacobi(a, m1) * ar.jacobi(b, m1)
    # Legendre-symbol oracle on odd primes
    for p in (3, 5, 7, 11, 13, 101):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert ar.jacobi(a, p) == (1 if a in squares else -1)


def test_quadratic_reciprocity_with_hilbert():
    rng = random.Random(3)
    for _ in range(5000):
        a = rng.randrange(-500, 501) * 2 + 1
        b = rng.randrange(-500, 501) * 2 + 1
        if math.gcd(a, b) != 1:
            continue
        lhs = ar.jacobi(a, abs(b)) * ar.jacobi(b, abs(a))
        rhs = (-1) ** ((a - 1) // 2 * ((b - 1) // 2)) * ar.hilbert_infinity(a, b)
        assert lhs == rhs, (a, b)


def test_jacobi_two_supplement():
    # (2/d) equals the fourth root of unity i^((d^2-1)/4), which is +-1
    for d in range(1, 10**4, 2):
        k = (d * d - 1) // 4 % 4
        expect = {0: 1, 2: -1}[k]
        assert ar.jacobi(2, d) == expect


def test_jacobi_extended():
    assert ar.jacobi_extended(9, 32) == 1
    assert ar.jacobi_extended(3, 10) == -1
    assert ar.jacobi_extended(7, -3) == 1
    with pytest.raises(ValueError):
        ar.jacobi_extended(4, 5)
    with pytest.raises(ValueError):
        ar.jacobi_extended(3, 0)


def test_hilbert_infinity():
    assert ar.hilbert_infinity(-1, -1) == -1
    assert ar.hilbert_infinity(-1, 1) == 1
    assert ar.hilbert_infinity(5, 7) == 1
    with pytest.raises(ValueError):
        ar.hilbert_infinity(0, 3)


def test_chi4():
    assert ar.chi4(5) == 1 and ar.chi4(7) == -1 and ar.chi4(6) == 0
    for n in range(-50, 50):
        assert ar.chi4(n) == ar.chi4(n + 4)


def test_sqrt_mod_examples():
    assert ar.sqrt_mod(-1, 25) == [7, 18]
    assert ar.sqrt_mod(9, 25) == [3, 22]
    assert ar.sqrt_mod(2, 3) == []


def test_sqrt_mod_exhaustive():
    # complete agreement with a direct scan for every prime power <= 1e4
    for pk in range(2, 10**4 + 1):
        try:
            p, e = ar._prime_power_split(pk)
        except ValueError:
            continue
        table = {}
        for x in range(pk):
            table.setdefault(x * x % pk, []).append(x)
        for a in range(pk):
            assert ar.sqrt_mod(a, pk) == table.get(a, []), (a, pk)


def test_divisor_witness():
    assert ar.divisor_witness(1, 2) == 1
    d = ar.divisor_witness(30030, 2)
    assert 30030 % d == 0 and d * d <= 30030
    assert ar.tau(30030) <= (2 * ar.tau(d)) ** 2
    assert ar.divisor_witness(101, 3) == 1
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randrange(1, 10**6)
        for k in (2, 3):
            d = ar.divisor_witness(n, k)
            assert n % d == 0 and d**k <= n
            assert ar.tau(n) <= (2 * ar.tau(d)) ** (k * math.log(k) / math.log(2)) + 1e-9
