"""The totient-weighted pair correlation sum, its incremental table, and
raw prime-pair counts.

The correlation sum at N adds lambda1(n) * lambda1((b*n + l) / a) over
n <= N; the second factor is defined (and the term nonzero) only when
a divides b*n + l, which pins n to a single residue class mod a.
"""

import math
from dataclasses import dataclass

import numpy as np

from .arith_core import PrimeTable, lambda1_sieve
from .errors import OutOfRangeError
from .singular_series import PairTriple, conjectured_density

DEFAULT_CHUNK = 1 << 19


@dataclass(frozen=True)
class CongruenceClass:
    """Residue class {n : n = residue (mod modulus)} where the pair term
    is defined."""

    residue: int
    modulus: int


@dataclass(frozen=True)
class CorrelationRow:
    """One table row: the correlation sum at N and its comparison columns.

    ratio is rhs / (psi/N) when psi > 0 and 0 otherwise.
    """

    N: int
    psi: float
    psi_over_N: float
    rhs: float
    ratio: float


def solve_congruence(t: PairTriple) -> CongruenceClass:
    """The unique residue r mod a with b*r + l = 0 (mod a), via the modular
    inverse of b (gcd(a, b) = 1 guarantees both existence and uniqueness).
    For a = 1 the class is residue 0: every n qualifies.
    """
    if t.a == 1:
        return CongruenceClass(residue=0, modulus=1)
    inverse = pow(t.b, -1, t.a)
    return CongruenceClass(residue=(-t.l * inverse) % t.a, modulus=t.a)


def _first_member(cls: CongruenceClass, lo: int) -> int:
    """Smallest member of the class that is >= max(lo, 1)."""
    base = cls.residue or cls.modulus
    if lo <= base:
        return base
    offset = -(-(lo - cls.residue) // cls.modulus)
    return cls.residue + offset * cls.modulus


def _collect_terms(t: PairTriple, cls: CongruenceClass, values: np.ndarray,
                   lo: int, hi: int, chunk: int, out: list) -> None:
    """Append the nonzero products lambda1(n) * lambda1((b*n+l)/a) for
    class members lo <= n <= hi to out, in ascending n order."""
    start = _first_member(cls, lo)
    stride = cls.modulus
    for block_lo in range(start, hi + 1, stride * chunk):
        block_hi = min(hi, block_lo + stride * (chunk - 1))
        n = np.arange(block_lo, block_hi + 1, stride, dtype=np.int64)
        m = (t.b * n + t.l) // t.a
        products = values[n] * values[m]
        out.extend(products[products != 0.0].tolist())


def psi(t: PairTriple, N: int, table: PrimeTable, values: np.ndarray = None,
        chunk: int = DEFAULT_CHUNK) -> float:
    """Correlation sum over n <= N of lambda1(n) * lambda1((b*n + l) / a),
    restricted to the residue class where the second argument is an
    integer (every other term vanishes by the definedness convention).

    values may carry a precomputed lambda1_sieve array covering
    max(N, (b*N + l) // a); otherwise one is built from the table. The
    nonzero products are collected in ascending n order, chunk by chunk,
    and fed to one exactly rounded summation, so the result is
    bit-identical for every chunk size.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if chunk < 1:
        raise ValueError(f"chunk must be >= 1, got {chunk}")
    bound = max(N, (t.b * N + t.l) // t.a)
    if values is None:
        if bound > table.limit:
            raise OutOfRangeError(f"table.limit {table.limit} does not cover (b*N+l)/a = {bound}")
        values = lambda1_sieve(bound, table)
    elif values.shape[0] < bound + 1:
        raise OutOfRangeError(f"values array of length {values.shape[0]} does not cover {bound}")
    terms = []
    _collect_terms(t, solve_congruence(t), values, 1, N, chunk, terms)
    return math.fsum(terms)


def psi_table(t: PairTriple, n_max: int, step: int, prime_limit: int,
              table: PrimeTable, chunk: int = DEFAULT_CHUNK) -> list:
    """Correlation rows at N = step, 2*step, ..., n_max, built in one pass:
    each row's sum extends the previous row's term list, so the whole
    table costs O(n_max) extraction plus one exactly rounded summation
    per row. Every row is bit-identical to a standalone psi call at its N.

    rhs is the conjectured density at prime_limit, shared by all rows.
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if n_max < step:
        raise ValueError(f"n_max must be >= step, got n_max={n_max}, step={step}")
    bound = max(n_max, (t.b * n_max + t.l) // t.a)
    if bound > table.limit:
        raise OutOfRangeError(f"table.limit {table.limit} does not cover (b*n_max+l)/a = {bound}")
    if prime_limit > table.limit:
        raise OutOfRangeError(f"table.limit {table.limit} does not cover prime_limit {prime_limit}")
    values = lambda1_sieve(bound, table)
    rhs = conjectured_density(t, prime_limit, table).value
    cls = solve_congruence(t)
    rows = []
    terms = []
    for N in range(step, n_max + 1, step):
        _collect_terms(t, cls, values, N - step + 1, N, chunk, terms)
        total = math.fsum(terms)
        psi_over_n = total / N
        ratio = rhs / psi_over_n if total > 0 else 0.0
        rows.append(CorrelationRow(N=N, psi=total, psi_over_N=psi_over_n, rhs=rhs, ratio=ratio))
    return rows


def prime_pair_count(t: PairTriple, N: int, table: PrimeTable) -> int:
    """Count primes p <= N with a | (b*p + l) and (b*p + l) / a also prime."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    bound = (t.b * N + t.l) // t.a
    if N > table.limit or bound > table.limit:
        raise OutOfRangeError(f"table.limit {table.limit} does not cover the pair bound {bound}")
    p = table.primes[table.primes <= N]
    quotient, remainder = np.divmod(t.b * p + t.l, t.a)
    quotient = quotient[remainder == 0]
    spf = table.smallest_factor
    return int(np.count_nonzero((quotient >= 2) & (spf[quotient] == quotient)))
