import pytest

from rmfmoments import build_factor_sieve


@pytest.fixture(scope="session")
def sieve_1e4():
    return build_factor_sieve(10**4)


@pytest.fixture(scope="session")
def sieve_1e5():
    return build_factor_sieve(10**5)


@pytest.fixture(scope="session")
def sieve_1e6():
    return build_factor_sieve(10**6)
