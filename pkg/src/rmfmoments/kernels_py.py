"""Pure numpy implementations of the hot kernels.

Used when the compiled extension is unavailable.  Same contracts as the
Cython versions in _core.pyx; the algorithms differ (vectorized sieving
passes instead of per-n recurrences) but the outputs agree to float
round-off, and exactly for the integer kernels.
"""

from __future__ import annotations

import numpy as np


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest prime factor for 2..limit via vectorized striking.

    Strikes multiples of each prime p <= sqrt(limit) ascending, writing p only
    where no smaller prime has been recorded; survivors are prime.
    """
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
    untouched = spf == 0
    untouched[:2] = False
    spf[untouched] = np.nonzero(untouched)[0]
    return spf


def rademacher_f_values(spf: np.ndarray, sign_at: np.ndarray, N: int) -> np.ndarray:
    """f(n) for n=0..N: sign product over prime divisors, 0 off squarefree."""
    neg = np.zeros(N + 1, dtype=np.int64)
    sqfree = np.ones(N + 1, dtype=bool)
    sqfree[0] = False
    n = np.arange(2, N + 1)
    for p in n[spf[2 : N + 1] == n]:
        if sign_at[p] < 0:
            neg[p::p] += 1
        if p * p <= N:
            sqfree[p * p :: p * p] = False
    f = np.where(neg & 1, -1.0, 1.0)
    f[~sqfree] = 0.0
    return f


def steinhaus_f_values(spf: np.ndarray, val_at: np.ndarray, N: int) -> np.ndarray:
    """f(n) for n=0..N, completely multiplicative: accumulate angles additively."""
    angle_at = np.zeros(N + 1, dtype=np.float64)
    primes = np.arange(2, N + 1)
    primes = primes[spf[2 : N + 1] == primes]
    angle_at[primes] = np.angle(val_at[primes])
    theta = np.zeros(N + 1, dtype=np.float64)
    for p in primes:
        a = angle_at[p]
        pe = p
        while pe <= N:
            theta[pe::pe] += a
            pe *= p
    f = np.exp(1j * theta)
    f[0] = 0.0
    return f


def fourth_moment_sum(N: int) -> int:
    """sum over d1,d2<=N of floor(N*min(d1,d2)/lcm(d1,d2)), row-vectorized."""
    total = 0
    d = np.arange(1, N + 1, dtype=np.int64)
    for d1 in range(1, N + 1):
        hi = d[d1:]
        g = np.gcd(d1, hi)
        lcm = (d1 // g) * hi
        total += 2 * int((N * d1 // lcm).sum())
    return total + N * N


def birkhoff_accept_count(u: np.ndarray, k: int) -> int:
    """Count rows of u (shape M x (k-1)^2) inside the truncated-cube region."""
    d = k - 1
    m = u.reshape(-1, d, d)
    ok = (m.sum(axis=2) <= 1.0).all(axis=1)
    ok &= (m.sum(axis=1) <= 1.0).all(axis=1)
    ok &= m.sum(axis=(1, 2)) >= k - 2
    return int(ok.sum())
