"""Prime sieving, factorization, and elementary arithmetic functions.

Everything downstream needs fast access to primes and factorizations.
The sieve stores the smallest prime factor of every integer up to a
limit, so factorizing any n <= limit costs O(log n) array lookups.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import OutOfRangeError, ResourceLimitError

DEFAULT_CEILING = 2**31


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Immutable sieve data shared by every arithmetic routine.

    Attributes
    ----------
    limit : int
        Largest integer covered by the sieve.
    primes : np.ndarray
        All primes <= limit, ascending, dtype int64.
    smallest_factor : np.ndarray
        smallest_factor[n] is the least prime factor of n for 2 <= n <= limit.
        Entries 0 and 1 are sentinels (0 and 1 respectively).
    """

    limit: int
    primes: np.ndarray
    smallest_factor: np.ndarray

    def is_prime(self, n: int) -> bool:
        """True iff n is prime; n must lie within the sieve range."""
        if n < 0 or n > self.limit:
            raise OutOfRangeError(f"n={n} outside sieve range [0, {self.limit}]")
        return n >= 2 and int(self.smallest_factor[n]) == n


def build_prime_table(limit: int, ceiling: int = DEFAULT_CEILING) -> PrimeTable:
    """Sieve smallest prime factors for 2..limit and collect the primes.

    Parameters
    ----------
    limit : int
        Inclusive sieve bound, 2 <= limit <= ceiling.
    ceiling : int
        Allocation guard: limits above it raise ResourceLimitError before
        any array is allocated.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > ceiling:
        raise ResourceLimitError(f"limit {limit} exceeds the configured ceiling {ceiling}")
    spf = np.zeros(limit + 1, dtype=np.uint32)
    spf[1] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p::p]
            block[block == 0] = p
    # integers still unmarked are the primes above sqrt(limit)
    untouched = np.flatnonzero(spf == 0)
    spf[untouched] = untouched
    idx = np.arange(limit + 1, dtype=np.uint32)
    # positions 0 and 1 trivially satisfy spf == index; drop them
    primes = np.flatnonzero(spf == idx)[2:].astype(np.int64)
    return PrimeTable(limit=limit, primes=primes, smallest_factor=spf)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of n as ascending (prime, exponent) pairs.

    n = 1 carries the empty sequence.
    """

    n: int
    factors: tuple


def factorize(n: int, table: PrimeTable) -> Factorization:
    """Factor n, by sieve lookup for n <= table.limit and by trial division
    over the table's primes for table.limit < n <= table.limit**2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n <= table.limit:
        spf = table.smallest_factor
        pairs = []
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
        return Factorization(n=n, factors=tuple(pairs))
    if n > table.limit * table.limit:
        raise OutOfRangeError(f"n={n} exceeds the factorizable range table.limit**2 = {table.limit**2}")
    pairs = []
    m = n
    for p in table.primes:
        p = int(p)
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    if m > 1:
        # no prime <= sqrt(m) remains, so the cofactor is prime
        pairs.append((m, 1))
    return Factorization(n=n, factors=tuple(pairs))


def mobius(f: Factorization) -> int:
    """Moebius function: (-1)^k on squarefree n with k prime factors, else 0."""
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(f: Factorization) -> int:
    """Euler totient, in exact integer arithmetic."""
    result = 1
    for p, e in f.factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def von_mangoldt(f: Factorization) -> float:
    """log p when n is a power of the prime p, else 0 (including n = 1)."""
    if len(f.factors) != 1:
        return 0.0
    return math.log(f.factors[0][0])


def lambda1(f: Factorization) -> float:
    """Totient-weighted von Mangoldt function (phi(n)/n) * Lambda(n).

    Nonzero only on prime powers p^k, where phi/n reduces exactly to
    (p-1)/p; the rational factor is simplified exactly before the single
    float conversion.
    """
    if len(f.factors) != 1:
        return 0.0
    p = f.factors[0][0]
    return float(Fraction(p - 1, p)) * math.log(p)


def divisors(f: Factorization) -> list:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def lambda1_sieve(limit: int, table: PrimeTable) -> np.ndarray:
    """Array L with L[n] = lambda1(n) for 0 <= n <= limit.

    Only prime powers are nonzero, so the fill loops over primes and their
    powers. Each entry is bit-identical to lambda1(factorize(n)): IEEE
    division (p - 1.0) / p equals the correctly rounded float of the exact
    fraction (p-1)/p.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit > table.limit:
        raise OutOfRangeError(f"limit {limit} exceeds table.limit {table.limit}")
    values = np.zeros(limit + 1)
    for p in table.primes[table.primes <= limit]:
        p = int(p)
        weight = (p - 1.0) / p * math.log(p)
        power = p
        while power <= limit:
            values[power] = weight
            power *= p
    return values
