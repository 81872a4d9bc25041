"""Smallest-prime-factor sieve and the integer arithmetic built on it.

The sieve stores one int64 entry per integer (spf[n] = smallest prime factor
of n, spf[n] = n iff n prime), built by the linear sieve so construction is
O(N) and factorization of any n <= N is O(log n).  Memory is 8 bytes per
integer; limit = 10**8 needs ~800 MB and is the supported ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_LIMIT_CEILING = 10**8


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization n = prod p**e, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@dataclass(frozen=True)
class FactorSieve:
    """Immutable smallest-prime-factor table for 2..limit.

    spf is read-only after construction and safe to share across threads.
    """

    limit: int
    spf: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.spf.setflags(write=False)

    def is_prime(self, n: int) -> bool:
        self._check(n)
        return n >= 2 and int(self.spf[n]) == n

    def _check(self, n: int) -> None:
        if n < 1 or n > self.limit:
            raise ValueError(f"n={n} outside sieve range [1, {self.limit}]")


def build_factor_sieve(limit: int) -> FactorSieve:
    """Build the spf table; the fill loop lives in the kernel layer."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if limit > _LIMIT_CEILING:
        raise ValueError(f"limit {limit} exceeds supported ceiling {_LIMIT_CEILING}")
    from . import kernels

    return FactorSieve(limit=limit, spf=kernels.spf_sieve(limit))


def factorize(sieve: FactorSieve, n: int) -> Factorization:
    """Factor n by repeated division by spf; n=1 gives the empty product."""
    if n < 1 or n > sieve.limit:
        raise ValueError(f"n={n} outside sieve range [1, {sieve.limit}]")
    factors = []
    m = n
    spf = sieve.spf
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return Factorization(n=n, factors=tuple(factors))


def is_squarefree(sieve: FactorSieve, n: int) -> bool:
    if n < 1 or n > sieve.limit:
        raise ValueError(f"n={n} outside sieve range [1, {sieve.limit}]")
    m = n
    spf = sieve.spf
    while m > 1:
        p = int(spf[m])
        m //= p
        if m % p == 0:
            return False
    return True


def squarefree_mask(sieve: FactorSieve, N: int) -> np.ndarray:
    """Boolean array q of length N+1 with q[n] = (n squarefree), q[0] = False."""
    if N > sieve.limit:
        raise ValueError(f"N={N} exceeds sieve limit {sieve.limit}")
    q = np.ones(N + 1, dtype=bool)
    q[0] = False
    for p in primes_in_range(sieve, 1, int(np.sqrt(N)) + 1 if N >= 1 else 1):
        if p * p > N:
            break
        q[p * p :: p * p] = False
    return q


def squarefree_count(sieve: FactorSieve, N: int) -> int:
    """Q(N) = #{n <= N : n squarefree}; 1 counts as squarefree."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return int(squarefree_mask(sieve, N).sum())


def primes_up_to(sieve: FactorSieve, hi: int) -> np.ndarray:
    """All primes p <= hi, ascending, as an int64 array."""
    if hi > sieve.limit:
        raise ValueError(f"hi={hi} exceeds sieve limit {sieve.limit}")
    if hi < 2:
        return np.array([], dtype=np.int64)
    n = np.arange(2, hi + 1)
    return n[sieve.spf[2 : hi + 1] == n]


def primes_in_range(sieve: FactorSieve, lo: float, hi: float) -> np.ndarray:
    """Primes p with lo < p <= hi (half-open on the left), ascending.

    lo >= hi yields an empty array, not an error.
    """
    if hi > sieve.limit:
        raise ValueError(f"hi={hi} exceeds sieve limit {sieve.limit}")
    if lo >= hi:
        return np.array([], dtype=np.int64)
    ps = primes_up_to(sieve, int(np.floor(hi)))
    return ps[ps > lo]
