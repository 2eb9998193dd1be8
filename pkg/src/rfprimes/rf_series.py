"""Mean values, Carmichael coefficients, and truncated Ramanujan-Fourier
expansions of arithmetic functions.

An arithmetic-function handle is either a callable mapping positive
integers to reals or a numpy array indexed by n (entry 0 unused). The
array form exists because averaging a sieved function over n <= 10^6
must not cost 10^6 Python calls.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith_core import PrimeTable, euler_phi, factorize, mobius
from .ramanujan import ramanujan_sum


@dataclass(frozen=True)
class MeanValueEstimate:
    """Finite-N estimate of the mean value lim (1/N) sum_{n<=N} f(n)."""

    value: float
    sample_count: int


def _check_array_cover(f: np.ndarray, N: int) -> None:
    if f.shape[0] < N + 1:
        raise ValueError(f"array handle of length {f.shape[0]} does not cover n <= {N}")


def mean_value(f, N: int) -> MeanValueEstimate:
    """Average f over n = 1..N with exactly rounded summation.

    No extrapolation happens: the estimate is literally (1/N) sum f(n).
    A non-finite sum raises FloatingPointError.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if isinstance(f, np.ndarray):
        _check_array_cover(f, N)
        total = math.fsum(f[1 : N + 1].tolist())
    else:
        total = math.fsum(float(f(n)) for n in range(1, N + 1))
    if not math.isfinite(total):
        raise FloatingPointError(f"sum of f over 1..{N} is not finite: {total}")
    return MeanValueEstimate(value=total / N, sample_count=N)


def carmichael_coefficient(f, q: int, N: int, table: PrimeTable) -> float:
    """Finite-N estimator of the RF coefficient a_q of f:
    (1/phi(q)) * (1/N) * sum_{n<=N} f(n) c_q(n).
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if N < q:
        raise ValueError(f"N must be >= q, got N={N}, q={q}")
    cq = np.array([ramanujan_sum(q, r, table) for r in range(q)], dtype=np.float64)
    if isinstance(f, np.ndarray):
        _check_array_cover(f, N)
        residues = np.arange(1, N + 1, dtype=np.int64) % q
        total = math.fsum((f[1 : N + 1] * cq[residues]).tolist())
    else:
        total = math.fsum(float(f(n)) * cq[n % q] for n in range(1, N + 1))
    if not math.isfinite(total):
        raise FloatingPointError(f"sum of f * c_{q} over 1..{N} is not finite: {total}")
    phi_q = euler_phi(factorize(q, table))
    return total / N / phi_q


def lambda1_partial_sum(n: int, Q: int, table: PrimeTable) -> float:
    """Truncation sum_{q<=Q} mu(q)/phi(q) * c_q(n) of the RF expansion
    whose coefficients are mu(q)/phi(q).

    No convergence claim is attached to a finite Q; the caller compares
    truncations, not limits.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    terms = []
    for q in range(1, Q + 1):
        fq = factorize(q, table)
        mu = mobius(fq)
        if mu == 0:
            continue
        terms.append(mu / euler_phi(fq) * ramanujan_sum(q, n, table))
    return math.fsum(terms)


def exponential_mean(x: Fraction, y: Fraction, N: int) -> complex:
    """(1/N) * sum_{n<=N} e^{2 pi i (x - y) n} for reduced fractions
    x, y in (0, 1].

    The phase difference x - y is rational with denominator v, so the
    summands repeat with period v and every full period sums to exactly
    zero. Only the N mod v leftover terms are evaluated in floating
    point, which keeps the equal-fraction case exactly 1 and the
    whole-period case exactly 0.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    for name, value in (("x", x), ("y", y)):
        if not isinstance(value, Fraction):
            raise TypeError(f"{name} must be a Fraction, got {type(value).__name__}")
        if not 0 < value <= 1:
            raise ValueError(f"{name} must lie in (0, 1], got {value}")
    delta = x - y
    if delta == 0:
        return complex(1.0, 0.0)
    u, v = delta.numerator, delta.denominator
    total = 0j
    for n in range(1, N % v + 1):
        angle = 2.0 * math.pi * ((u * n) % v) / v
        total += complex(math.cos(angle), math.sin(angle))
    return total / N
