import pytest

from rfprimes import build_prime_table, lambda1_sieve


@pytest.fixture(scope="session")
def table_small():
    """Sieve to 1e4: cheap unit-test fixture."""
    return build_prime_table(10_000)


@pytest.fixture(scope="session")
def table_big():
    """Sieve to 1e7: covers every correlation table bound and the default
    prime limit of the Euler products."""
    return build_prime_table(10_000_000)


@pytest.fixture(scope="session")
def lam1_big(table_big):
    """lambda1 values for n <= 1e6 + 1, enough for every table row used in
    the tests ((b*n_max + l)/a peaks at 1,000,001)."""
    return lambda1_sieve(1_000_001, table_big)
