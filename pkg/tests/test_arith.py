import math
import random

import numpy as np
import pytest

from rfprimes import (
    OutOfRangeError,
    ResourceLimitError,
    build_prime_table,
    divisors,
    euler_phi,
    factorize,
    lambda1,
    lambda1_sieve,
    mobius,
    von_mangoldt,
)


def test_build_prime_table_examples():
    assert build_prime_table(10).primes.tolist() == [2, 3, 5, 7]
    assert build_prime_table(2).primes.tolist() == [2]


def test_prime_count_to_one_million(table_big):
    # classical value, cross-checked below by an independent boolean sieve
    assert int((table_big.primes <= 10**6).sum()) == 78498

    composite = [False] * (10**6 + 1)
    for d in range(2, 1001):
        if composite[d]:
            continue
        for m in range(d * d, 10**6 + 1, d):
            composite[m] = True
    brute = sum(1 for n in range(2, 10**6 + 1) if not composite[n])
    assert brute == 78498


def test_smallest_factor_invariants(table_big):
    spf = table_big.smallest_factor[: 10**5 + 1]
    n = np.arange(2, 10**5 + 1, dtype=np.int64)
    s = spf[2:].astype(np.int64)
    assert np.all(n % s == 0)
    # the smallest factor of any n is itself prime
    assert np.all(spf[s] == s.astype(np.uint32))
    composite = s != n
    assert np.all(s[composite] * s[composite] <= n[composite])


def test_is_prime(table_small):
    assert table_small.is_prime(9973)
    assert not table_small.is_prime(9991)  # 97 * 103
    assert not table_small.is_prime(1)
    assert not table_small.is_prime(0)
    with pytest.raises(OutOfRangeError):
        table_small.is_prime(10_001)


def test_build_prime_table_validation():
    with pytest.raises(ValueError):
        build_prime_table(1)
    with pytest.raises(ResourceLimitError):
        build_prime_table(10**7, ceiling=10**6)


def test_factorize_examples(table_small):
    assert factorize(12, table_small).factors == ((2, 2), (3, 1))
    assert factorize(1, table_small).factors == ()
    assert factorize(9991, table_small).factors == ((97, 1), (103, 1))


def test_factorize_trial_division_fallback(table_small):
    # 10007 and 99991 are primes above the sieve limit
    assert factorize(10007 * 9973, table_small).factors == ((9973, 1), (10007, 1))
    assert factorize(99991, table_small).factors == ((99991, 1),)
    with pytest.raises(OutOfRangeError):
        factorize(10**8 + 1, table_small)
    with pytest.raises(ValueError):
        factorize(0, table_small)


def test_factorize_product_identity(table_big):
    for n in range(1, 10**5 + 1):
        f = factorize(n, table_big)
        product = 1
        previous = 0
        for p, e in f.factors:
            assert p > previous and e >= 1
            previous = p
            product *= p**e
        assert product == n


def test_mobius_examples(table_small):
    assert mobius(factorize(30, table_small)) == -1
    assert mobius(factorize(12, table_small)) == 0
    assert mobius(factorize(1, table_small)) == 1


def test_euler_phi_examples_and_gcd_oracle(table_small):
    assert euler_phi(factorize(9, table_small)) == 6
    assert euler_phi(factorize(1, table_small)) == 1
    assert euler_phi(factorize(10, table_small)) == 4
    for n in range(1, 301):
        direct = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert euler_phi(factorize(n, table_small)) == direct


def test_von_mangoldt_examples(table_small):
    assert von_mangoldt(factorize(8, table_small)) == pytest.approx(math.log(2), abs=1e-12)
    assert von_mangoldt(factorize(6, table_small)) == 0.0
    assert von_mangoldt(factorize(1, table_small)) == 0.0


def test_lambda1_examples(table_small):
    assert lambda1(factorize(2, table_small)) == pytest.approx(0.346574, abs=1e-6)
    assert lambda1(factorize(9, table_small)) == pytest.approx(0.732408, abs=1e-6)
    assert lambda1(factorize(6, table_small)) == 0.0


def test_lambda1_sieve_matches_pointwise(table_small):
    values = lambda1_sieve(2000, table_small)
    assert values[0] == 0.0 and values[1] == 0.0
    for n in range(1, 2001):
        assert values[n] == lambda1(factorize(n, table_small))
    with pytest.raises(OutOfRangeError):
        lambda1_sieve(20_000, table_small)


def test_multiplicativity(table_big):
    rng = random.Random(20260817)
    checked = 0
    while checked < 2000:
        m = rng.randint(1, 10**4)
        n = rng.randint(1, 10**4)
        if math.gcd(m, n) != 1:
            continue
        fm, fn, fmn = (factorize(k, table_big) for k in (m, n, m * n))
        assert euler_phi(fmn) == euler_phi(fm) * euler_phi(fn)
        assert mobius(fmn) == mobius(fm) * mobius(fn)
        checked += 1


def test_phi_divisor_sum(table_small):
    for n in range(1, 10**4 + 1):
        f = factorize(n, table_small)
        assert sum(euler_phi(factorize(d, table_small)) for d in divisors(f)) == n


def test_mobius_inversion(table_small):
    for n in range(1, 10**4 + 1):
        f = factorize(n, table_small)
        total = sum(mobius(factorize(d, table_small)) for d in divisors(f))
        assert total == (1 if n == 1 else 0)


def test_divisors(table_small):
    assert divisors(factorize(12, table_small)) == [1, 2, 3, 4, 6, 12]
    assert divisors(factorize(1, table_small)) == [1]
    assert divisors(factorize(9973, table_small)) == [1, 9973]


def test_chebyshev_band(table_big):
    # sum of Lambda(n) for n <= 1e6, accumulated prime by prime over powers
    N = 10**6
    terms = []
    for p in table_big.primes[table_big.primes <= N].tolist():
        weight = math.log(p)
        power = p
        while power <= N:
            terms.append(weight)
            power *= p
    assert 0.9 <= math.fsum(terms) / N <= 1.1
