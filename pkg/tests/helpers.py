"""Shared test oracles, all independent of the package's sieve machinery."""

import math

from rfprimes import PairTriple


def reference_lambda1(n):
    """Trial-division lambda1: (1 - 1/p) log p on prime powers p^k, else 0."""
    if n < 2:
        return 0.0
    p = None
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            p = d
            break
        d += 1
    if p is None:
        p = m
    while m % p == 0:
        m //= p
    if m != 1:
        return 0.0
    return (1 - 1 / p) * math.log(p)


def reference_psi(a, b, l, N):
    """Unfiltered double-definition oracle: test divisibility on every n."""
    terms = []
    for n in range(1, N + 1):
        numerator = b * n + l
        if numerator % a:
            continue
        terms.append(reference_lambda1(n) * reference_lambda1(numerator // a))
    return math.fsum(terms)


def random_triple(rng, a_max=5, b_max=9, l_max=10):
    """Random valid triple with gcd(a, b) = 1."""
    while True:
        a = rng.randint(1, a_max)
        b = rng.randint(1, b_max)
        if math.gcd(a, b) == 1:
            return PairTriple(a, b, rng.randint(1, l_max))
