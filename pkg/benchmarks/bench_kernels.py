"""Throughput comparison: compiled kernels vs the numpy fallbacks.

Usage: python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from rmfmoments import kernels, kernels_py

if not kernels.HAVE_COMPILED:
    raise SystemExit("compiled extension not built; nothing to compare")

from rmfmoments import _core


def bench(label, fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return label, best


def main():
    N = 10**7
    spf = kernels.spf_sieve(10**6)
    rng = np.random.default_rng(0)
    primes = np.nonzero(spf[2:] == np.arange(2, 10**6 + 1))[0] + 2
    sign_at = np.zeros(10**6 + 1)
    sign_at[primes] = rng.choice([-1.0, 1.0], size=len(primes))
    val_at = np.zeros(10**6 + 1, dtype=np.complex128)
    val_at[primes] = np.exp(2j * np.pi * rng.random(len(primes)))
    u = rng.random((10**6, 9))

    rows = [
        bench("spf_sieve(1e7)            compiled", lambda: _core.spf_sieve(N)),
        bench("spf_sieve(1e7)            fallback", lambda: kernels_py.spf_sieve(N)),
        bench(
            "rademacher_f_values(1e6)  compiled",
            lambda: _core.rademacher_f_values(spf, sign_at, 10**6),
        ),
        bench(
            "rademacher_f_values(1e6)  fallback",
            lambda: kernels_py.rademacher_f_values(spf, sign_at, 10**6),
        ),
        bench(
            "steinhaus_f_values(1e6)   compiled",
            lambda: _core.steinhaus_f_values(spf, val_at, 10**6),
        ),
        bench(
            "steinhaus_f_values(1e6)   fallback",
            lambda: kernels_py.steinhaus_f_values(spf, val_at, 10**6),
        ),
        bench(
            "fourth_moment_sum(8192)   compiled",
            lambda: _core.fourth_moment_sum(8192),
        ),
        bench(
            "fourth_moment_sum(8192)   fallback",
            lambda: kernels_py.fourth_moment_sum(8192),
        ),
        bench(
            "birkhoff_accept(1e6, k=4) compiled",
            lambda: _core.birkhoff_accept_count(u, 4),
        ),
        bench(
            "birkhoff_accept(1e6, k=4) fallback",
            lambda: kernels_py.birkhoff_accept_count(u, 4),
        ),
    ]
    print(f"{'kernel':<36} {'best of 3 (s)':>14}")
    for label, t in rows:
        print(f"{label:<36} {t:>14.4f}")
    for i in range(0, len(rows), 2):
        name = rows[i][0].rsplit(None, 1)[0]
        print(f"speedup {name:<28} {rows[i + 1][1] / rows[i][1]:6.1f}x")


if __name__ == "__main__":
    main()
