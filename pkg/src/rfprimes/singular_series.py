"""The twin-prime constant, admissibility of pair triples, the conjectured
pair density, and two independent evaluations of the singular series.

A triple (a, b, l) encodes the pair condition a*p' - b*p = l with
gcd(a, b) = 1. Its conjectured density is the Euler product
(2C/a) * prod over odd primes p | a*b*l of (p-1)/(p-2) when the triple is
admissible, and 0 otherwise.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith_core import PrimeTable, divisors, euler_phi, factorize, mobius
from .errors import NumericInstabilityError, OutOfRangeError
from .ramanujan import ramanujan_sum

BRUTEFORCE_COST_LIMIT = 200


@dataclass(frozen=True)
class PairTriple:
    """Coefficients (a, b, l) of the pair condition a*p' - b*p = l."""

    a: int
    b: int
    l: int

    def __post_init__(self):
        for name, value in (("a", self.a), ("b", self.b), ("l", self.l)):
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd(a,b) must be 1, got gcd({self.a},{self.b}) = {math.gcd(self.a, self.b)}")


@dataclass(frozen=True)
class DensityResult:
    """Admissibility flag plus the density value (zero when inadmissible)."""

    admissible: bool
    value: float


def twin_prime_constant(prime_limit: int, table: PrimeTable) -> float:
    """Partial twin-prime constant: product of 1 - 1/(p-1)^2 over odd
    primes p <= prime_limit.

    Accumulated in log space with exactly rounded summation of log1p
    terms, so the result is independent of chunking and monotonically
    nonincreasing in prime_limit. The truncation tail is about
    1 / (prime_limit * log prime_limit).
    """
    if prime_limit < 3:
        raise ValueError(f"prime_limit must be >= 3, got {prime_limit}")
    if prime_limit > table.limit:
        raise OutOfRangeError(f"prime_limit {prime_limit} exceeds table.limit {table.limit}")
    p = table.primes[(table.primes > 2) & (table.primes <= prime_limit)].astype(np.float64)
    return math.exp(math.fsum(np.log1p(-1.0 / (p - 1.0) ** 2).tolist()))


def is_admissible(t: PairTriple) -> bool:
    """True iff gcd(a,l) = gcd(b,l) = 1 and exactly one of a, b, l is even."""
    evens = (t.a % 2 == 0) + (t.b % 2 == 0) + (t.l % 2 == 0)
    return math.gcd(t.a, t.l) == 1 and math.gcd(t.b, t.l) == 1 and evens == 1


def conjectured_density(t: PairTriple, prime_limit: int, table: PrimeTable) -> DensityResult:
    """Conjectured pair density (2C/a) * prod_{p | abl, p > 2} (p-1)/(p-2),
    with C the partial twin-prime constant at prime_limit.

    The distinct odd primes dividing a*b*l are collected by factorizing
    a, b, l separately; the correction product is exact rational until the
    final float conversion.
    """
    if not is_admissible(t):
        return DensityResult(admissible=False, value=0.0)
    constant = twin_prime_constant(prime_limit, table)
    odd_primes = set()
    for component in (t.a, t.b, t.l):
        for p, _ in factorize(component, table).factors:
            if p > 2:
                odd_primes.add(p)
    correction = Fraction(1)
    for p in odd_primes:
        correction *= Fraction(p - 1, p - 2)
    return DensityResult(admissible=True, value=2.0 * constant / t.a * float(correction))


def lemma_sum_truncated(t: PairTriple, Q: int, table: PrimeTable) -> float:
    """Singular series of the pair correlation, truncated at q2 <= Q.

    The full series is a triple sum over squarefree d1 | a, d2 | b and
    squarefree q2 coprime to a*b, with summand
    mu(d1)/phi(d1) * mu(d2)/phi(d2) * c_{q2}(l) c_{d1}(l) c_{d2}(l) / phi(q2)^2,
    all divided by a. The finite divisor sums factor out exactly as
    rational numbers; the q2 sum is truncated at Q and accumulated in
    ascending q2 order with exactly rounded summation. All c-values come
    from the exact integer closed form.
    """
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")

    def divisor_weight(u: int) -> Fraction:
        total = Fraction(0)
        for d in divisors(factorize(u, table)):
            fd = factorize(d, table)
            mu = mobius(fd)
            if mu:
                total += Fraction(mu * ramanujan_sum(d, t.l, table), euler_phi(fd))
        return total

    prefactor = divisor_weight(t.a) * divisor_weight(t.b) / t.a
    if prefactor == 0:
        return 0.0
    ab = t.a * t.b
    terms = []
    for q2 in range(1, Q + 1):
        if math.gcd(q2, ab) != 1:
            continue
        fq2 = factorize(q2, table)
        if mobius(fq2) == 0:
            continue
        phi = euler_phi(fq2)
        terms.append(ramanujan_sum(q2, t.l, table) / (phi * phi))
    return float(prefactor) * math.fsum(terms)


@lru_cache(maxsize=None)
def _trial_mobius_phi(n: int) -> tuple:
    """(mobius, totient) by trial division, for squarefree n; the totient
    slot is unused (returned as 0) when mobius is 0."""
    mu, phi, m = 1, 1, n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0, 0
            mu = -mu
            phi *= d - 1
        else:
            d += 1
    if m > 1:
        mu = -mu
        phi *= m - 1
    return mu, phi


def _radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    rad, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            rad *= d
            while m % d == 0:
                m //= d
        d += 1
    return rad * m if m > 1 else rad


def _coprime_part(n: int, m: int) -> int:
    """Largest divisor of n coprime to m."""
    g = math.gcd(n, m)
    while g > 1:
        while n % g == 0:
            n //= g
        g = math.gcd(n, m)
    return n


def lemma_sum_bruteforce(t: PairTriple, Q: int) -> float:
    """Independent oracle for lemma_sum_truncated.

    Expands the correlation mean directly into exponential frequencies:
    every pair of reduced fractions k/q, k'/q' whose frequencies match,
    meaning (k'/q' + j) * b/a - k/q is an integer for some shift
    0 <= j < a, contributes
    mu(q)/phi(q) * mu(q')/phi(q') * e^{-2 pi i (k'/q' + j) l / a}.
    Given (j, q', k') the matching k/q is forced: it is the reduction of
    (k'/q' + j) * b/a mod 1, computed here in exact rational arithmetic,
    so the enumeration runs over j, q', k' alone and no matching pair is
    ever missed.

    Truncation: q' ranges over all moduli up to radical(b) * Q whose part
    coprime to a*b is at most Q. Moduli sharing a factor with a vanish
    through mu(q) = 0, and the survivors factor as q' = d2 * q2 with
    squarefree d2 | b and q2 <= Q coprime to a*b, which is exactly the
    index set of lemma_sum_truncated at the same Q. The divided-out j-sum
    reproduces the d1 | a divisor weight because each residue class mod a
    hits every matching frequency once.

    mu and phi are recomputed locally by trial division; the oracle shares
    no arithmetic code with the fast path. The accumulated imaginary part
    must stay below 1e-9 or NumericInstabilityError is raised.
    """
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    if Q > BRUTEFORCE_COST_LIMIT:
        raise ValueError(f"Q={Q} exceeds the brute-force cost limit {BRUTEFORCE_COST_LIMIT}")
    a, b, l = t.a, t.b, t.l
    ab = a * b
    total = 0j
    for j in range(a):
        for q_prime in range(1, _radical(b) * Q + 1):
            if _coprime_part(q_prime, ab) > Q:
                continue
            mu_qp, phi_qp = _trial_mobius_phi(q_prime)
            if mu_qp == 0:
                continue
            for k_prime in range(1, q_prime + 1):
                if math.gcd(k_prime, q_prime) != 1:
                    continue
                frequency = Fraction(k_prime + j * q_prime, q_prime) * Fraction(b, a)
                mu_q, phi_q = _trial_mobius_phi(frequency.denominator)
                if mu_q == 0:
                    continue
                weight = (mu_q / phi_q) * (mu_qp / phi_qp)
                phase = (Fraction(k_prime, q_prime) + j) * Fraction(l, a) % 1
                angle = -2.0 * math.pi * float(phase)
                total += weight * complex(math.cos(angle), math.sin(angle))
    total /= a
    if abs(total.imag) >= 1e-9:
        raise NumericInstabilityError(f"residual imaginary part {total.imag} in brute-force series")
    return total.real


def divisor_indicator(a: int, m: int) -> int:
    """Indicator of a | m via the exponential average
    (1/a) * sum_{0<=j<a} e^{2 pi i j m / a}, cross-checked against direct
    divisibility.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    r = m % a
    total = 0j
    for j in range(a):
        angle = 2.0 * math.pi * ((j * r) % a) / a
        total += complex(math.cos(angle), math.sin(angle))
    average = total / a
    rounded = round(average.real)
    if abs(average - rounded) >= 1e-9:
        raise NumericInstabilityError(f"exponential average {average} is not within 1e-9 of an integer")
    expected = 1 if r == 0 else 0
    if rounded != expected:
        raise NumericInstabilityError(f"exponential average rounded to {rounded}, divisibility gives {expected}")
    return rounded
