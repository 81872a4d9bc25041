# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the hot inner loops.

Mirrors the signatures in kernels_py; both implementations must agree (the
test suite cross-checks them and benchmarks/bench_kernels.py compares their
throughput).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def spf_sieve(long long limit):
    """Linear sieve: smallest prime factor for 2..limit, spf[n]=n iff prime."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] spf_arr = np.zeros(limit + 1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] primes_arr = np.zeros(
        max(16, limit // 2 + 1), dtype=np.int64
    )
    cdef long long[:] spf = spf_arr
    cdef long long[:] primes = primes_arr
    cdef long long n, p, np_count = 0
    cdef Py_ssize_t i
    for n in range(2, limit + 1):
        if spf[n] == 0:
            spf[n] = n
            primes[np_count] = n
            np_count += 1
        for i in range(np_count):
            p = primes[i]
            if p > spf[n] or n * p > limit:
                break
            spf[n * p] = p
    return spf_arr


def rademacher_f_values(const long long[:] spf, const double[:] sign_at, long long N):
    """f(n) for n=0..N: product of signs over distinct primes, 0 off squarefree."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] f_arr = np.zeros(N + 1, dtype=np.float64)
    cdef double[:] f = f_arr
    cdef long long n, p, m
    if N >= 1:
        f[1] = 1.0
    for n in range(2, N + 1):
        p = spf[n]
        m = n / p
        if m % p == 0:
            f[n] = 0.0
        else:
            f[n] = f[m] * sign_at[p]
    return f_arr


def steinhaus_f_values(const long long[:] spf, const double complex[:] val_at, long long N):
    """f(n) for n=0..N under complete multiplicativity."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] f_arr = np.zeros(
        N + 1, dtype=np.complex128
    )
    cdef double complex[:] f = f_arr
    cdef long long n, p
    if N >= 1:
        f[1] = 1.0
    for n in range(2, N + 1):
        p = spf[n]
        f[n] = f[n / p] * val_at[p]
    return f_arr


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def fourth_moment_sum(long long N):
    """sum over d1,d2<=N of floor(N*min(d1,d2)/lcm(d1,d2)), using symmetry."""
    cdef long long d1, d2, g, lcm, total = 0
    with nogil:
        for d1 in range(1, N + 1):
            for d2 in range(d1 + 1, N + 1):
                g = _gcd(d1, d2)
                lcm = d1 / g * d2
                total += 2 * ((N * d1) / lcm)
    return int(total) + int(N) * int(N)


def birkhoff_accept_count(const double[:, :] u, long long k):
    """Count rows of u (shape M x (k-1)^2) inside the truncated-cube region:

    all row sums <= 1, all column sums <= 1, total sum >= k-2.
    """
    cdef long long M = u.shape[0], d = k - 1
    cdef long long m, i, j, accepted = 0
    cdef double s, total
    cdef int ok
    with nogil:
        for m in range(M):
            ok = 1
            total = 0.0
            for i in range(d):
                s = 0.0
                for j in range(d):
                    s += u[m, i * d + j]
                total += s
                if s > 1.0:
                    ok = 0
                    break
            if ok:
                for j in range(d):
                    s = 0.0
                    for i in range(d):
                        s += u[m, i * d + j]
                    if s > 1.0:
                        ok = 0
                        break
            if ok and total >= k - 2:
                accepted += 1
    return accepted
