"""Cross-checks between the compiled kernels and the numpy fallbacks."""

import numpy as np
import pytest

from rmfmoments import kernels, kernels_py

pytestmark = pytest.mark.skipif(
    not kernels.HAVE_COMPILED, reason="compiled extension not available"
)

from rmfmoments import _core  # noqa: E402


def test_spf_sieve_agree():
    a = _core.spf_sieve(10**5)
    b = kernels_py.spf_sieve(10**5)
    assert np.array_equal(a, b)


def test_rademacher_values_agree():
    spf = kernels.spf_sieve(10**4)
    rng = np.random.default_rng(7)
    sign_at = np.zeros(10**4 + 1)
    primes = np.nonzero(spf[2:] == np.arange(2, 10**4 + 1))[0] + 2
    sign_at[primes] = rng.choice([-1.0, 1.0], size=len(primes))
    a = np.asarray(_core.rademacher_f_values(spf, sign_at, 10**4))
    b = kernels_py.rademacher_f_values(spf, sign_at, 10**4)
    assert np.array_equal(a, b)


def test_steinhaus_values_agree():
    spf = kernels.spf_sieve(10**4)
    rng = np.random.default_rng(8)
    val_at = np.zeros(10**4 + 1, dtype=np.complex128)
    primes = np.nonzero(spf[2:] == np.arange(2, 10**4 + 1))[0] + 2
    val_at[primes] = np.exp(2j * np.pi * rng.random(len(primes)))
    a = np.asarray(_core.steinhaus_f_values(spf, val_at, 10**4))
    b = kernels_py.steinhaus_f_values(spf, val_at, 10**4)
    assert np.allclose(a, b, rtol=0, atol=1e-12)


@pytest.mark.parametrize("N", [1, 2, 3, 50, 500])
def test_fourth_moment_agree(N):
    assert _core.fourth_moment_sum(N) == kernels_py.fourth_moment_sum(N)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_birkhoff_accept_agree(k):
    rng = np.random.default_rng(9)
    u = rng.random((5000, (k - 1) ** 2))
    assert _core.birkhoff_accept_count(u, k) == kernels_py.birkhoff_accept_count(u, k)
