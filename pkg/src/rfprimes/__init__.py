"""Number-theoretic toolkit for totient-weighted prime pair correlations.

The package computes Ramanujan sums, Ramanujan-Fourier coefficient
estimates, Hardy-Littlewood style pair densities, and the empirical
correlation tables they predict.
"""

from .arith_core import (
    Factorization,
    PrimeTable,
    build_prime_table,
    divisors,
    euler_phi,
    factorize,
    lambda1,
    lambda1_sieve,
    mobius,
    von_mangoldt,
)
from .correlation import (
    CongruenceClass,
    CorrelationRow,
    prime_pair_count,
    psi,
    psi_table,
    solve_congruence,
)
from .errors import NumericInstabilityError, OutOfRangeError, ResourceLimitError
from .ramanujan import ramanujan_sum, ramanujan_sum_definition
from .rf_series import (
    MeanValueEstimate,
    carmichael_coefficient,
    exponential_mean,
    lambda1_partial_sum,
    mean_value,
)
from .singular_series import (
    DensityResult,
    PairTriple,
    conjectured_density,
    divisor_indicator,
    is_admissible,
    lemma_sum_bruteforce,
    lemma_sum_truncated,
    twin_prime_constant,
)

__version__ = "1.0.0"

__all__ = [
    "Factorization",
    "PrimeTable",
    "build_prime_table",
    "divisors",
    "euler_phi",
    "factorize",
    "lambda1",
    "lambda1_sieve",
    "mobius",
    "von_mangoldt",
    "CongruenceClass",
    "CorrelationRow",
    "prime_pair_count",
    "psi",
    "psi_table",
    "solve_congruence",
    "NumericInstabilityError",
    "OutOfRangeError",
    "ResourceLimitError",
    "ramanujan_sum",
    "ramanujan_sum_definition",
    "MeanValueEstimate",
    "carmichael_coefficient",
    "exponential_mean",
    "lambda1_partial_sum",
    "mean_value",
    "DensityResult",
    "PairTriple",
    "conjectured_density",
    "divisor_indicator",
    "is_admissible",
    "lemma_sum_bruteforce",
    "lemma_sum_truncated",
    "twin_prime_constant",
    "__version__",
]
