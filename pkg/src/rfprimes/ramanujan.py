"""Ramanujan sums c_q(n), computed two independent ways.

The defining exponential sum costs O(q) and serves as the oracle for the
fast multiplicative closed form used everywhere else.
"""

import math

import numpy as np

from .arith_core import PrimeTable, euler_phi, factorize, mobius
from .errors import NumericInstabilityError

DEFINITION_COST_LIMIT = 100_000


def ramanujan_sum_definition(q: int, n: int) -> int:
    """c_q(n) as the literal sum of e^{2 pi i k n / q} over 1 <= k <= q
    with gcd(k, q) = 1, in double-precision complex arithmetic.

    n is reduced mod q first (the sum is periodic in n). The result must
    land within 1e-6*q of an integer on the real axis and within 1e-6*q of
    zero on the imaginary axis, else NumericInstabilityError is raised.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if q > DEFINITION_COST_LIMIT:
        raise ValueError(f"q={q} exceeds the O(q) cost limit {DEFINITION_COST_LIMIT}")
    r = n % q
    k = np.arange(1, q + 1, dtype=np.int64)
    k = k[np.gcd(k, q) == 1]
    angles = (2.0 * math.pi / q) * ((k * r) % q)
    real = float(np.cos(angles).sum())
    imag = float(np.sin(angles).sum())
    nearest = round(real)
    tolerance = 1e-6 * q
    if abs(imag) >= tolerance or abs(real - nearest) >= tolerance:
        raise NumericInstabilityError(f"c_{q}({n}) evaluated to {real}{imag:+}j, not near an integer")
    return int(nearest)


def ramanujan_sum(q: int, n: int, table: PrimeTable) -> int:
    """c_q(n) by the multiplicative identity mu(m) * phi(q) / phi(m) with
    m = q / gcd(q, n), in exact integer arithmetic, O(log q).
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    d = math.gcd(q, n % q)
    m = q // d
    fm = factorize(m, table)
    mu = mobius(fm)
    if mu == 0:
        return 0
    # phi(m) divides phi(q) whenever m divides q, so the quotient is exact
    return mu * (euler_phi(factorize(q, table)) // euler_phi(fm))
