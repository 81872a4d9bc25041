"""Rademacher and Steinhaus random multiplicative functions.

A sample fixes f on primes; extension to all n <= limit is a single
sieve-order pass (kernel layer).  Streams are counter-based: replicate r of
seed s uses Philox keyed by (s, r), so any replicate can be regenerated
independently of evaluation order and replicates are mutually independent.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .sieve import FactorSieve, factorize, primes_in_range, primes_up_to

RADEMACHER = "rademacher"
STEINHAUS = "steinhaus"
MODELS = (RADEMACHER, STEINHAUS)


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    return model


@dataclass(frozen=True)
class MultiplicativeSample:
    """One realization of f: values on primes p <= limit plus provenance."""

    model: str
    limit: int
    sieve: FactorSieve = field(repr=False)
    prime_values: np.ndarray = field(repr=False)  # indexed by p; junk off primes
    seed: int
    replicate: int


def sample_multiplicative(
    model: str,
    sieve: FactorSieve,
    seed: int,
    replicate: int = 0,
    limit: int | None = None,
) -> MultiplicativeSample:
    """Draw independent values on every prime p <= limit.

    Deterministic in (model, limit, seed, replicate); the prime values are
    generated in ascending prime order from the (seed, replicate) stream.
    """
    _check_model(model)
    if limit is None:
        limit = sieve.limit
    if limit > sieve.limit:
        raise ValueError(f"limit {limit} exceeds sieve limit {sieve.limit}")
    primes = primes_up_to(sieve, limit)
    gen = np.random.Generator(
        np.random.Philox(key=np.array([seed, replicate], dtype=np.uint64))
    )
    u = gen.random(len(primes))
    if model == RADEMACHER:
        vals = np.zeros(limit + 1, dtype=np.float64)
        vals[primes] = np.where(u < 0.5, 1.0, -1.0)
    else:
        vals = np.zeros(limit + 1, dtype=np.complex128)
        vals[primes] = np.exp(2j * np.pi * u)
    return MultiplicativeSample(
        model=model,
        limit=limit,
        sieve=sieve,
        prime_values=vals,
        seed=seed,
        replicate=replicate,
    )


def evaluate_f(sample: MultiplicativeSample, n: int) -> complex | float:
    """f(n) from the factorization of n; 1 on the empty product."""
    if n > sample.limit:
        raise ValueError(f"n={n} exceeds sample limit {sample.limit}")
    fac = factorize(sample.sieve, n)
    if sample.model == RADEMACHER:
        if not fac.is_squarefree():
            return 0.0
        out = 1.0
        for p, _ in fac.factors:
            out *= float(sample.prime_values[p])
        return out
    out = 1.0 + 0.0j
    for p, e in fac.factors:
        out *= complex(sample.prime_values[p]) ** e
    return out


def f_values(sample: MultiplicativeSample, N: int) -> np.ndarray:
    """f(n) for n = 0..N in one multiplicative sieve pass."""
    if N > sample.limit:
        raise ValueError(f"N={N} exceeds sample limit {sample.limit}")
    spf = sample.sieve.spf
    if sample.model == RADEMACHER:
        return kernels.rademacher_f_values(spf, sample.prime_values, N)
    return kernels.steinhaus_f_values(spf, sample.prime_values, N)


def partial_sum(
    sample: MultiplicativeSample, N: int, prefix: bool = False
) -> complex | float | np.ndarray:
    """S_N = sum of f(n) for n <= N; with prefix=True, all S_t for t = 0..N."""
    f = f_values(sample, N)
    if prefix:
        return np.cumsum(f)
    return f.sum()


def decomposition_stat(sample: MultiplicativeSample, x: int) -> complex | float:
    """sum over primes sqrt(x) < p <= x of f(p) * S_{floor(x/p)}.

    The left boundary is strictly open: when x is a perfect square with prime
    root, that prime is excluded.
    """
    if x < 4:
        raise ValueError("x must be >= 4")
    if x > sample.limit:
        raise ValueError(f"x={x} exceeds sample limit {sample.limit}")
    root = math.isqrt(x)
    prefix = partial_sum(sample, root, prefix=True)
    ps = primes_in_range(sample.sieve, math.sqrt(x), x)
    if len(ps) == 0:
        return 0.0 if sample.model == RADEMACHER else 0.0 + 0.0j
    return (sample.prime_values[ps] * prefix[x // ps]).sum()


@dataclass(frozen=True)
class MomentEstimate:
    """Monte Carlo estimate of E|S_N|^{2q} over R independent replicates."""

    model: str
    N: int
    q: float
    replicates: int
    mean: float
    stderr: float
    seed: int


def _abs_power(S: np.ndarray, q: float) -> np.ndarray:
    """|S|^{2q} with the 0^0 = 1 convention and no log(0)."""
    a2 = np.abs(S) ** 2
    if q == 0:
        return np.ones_like(a2)
    out = np.zeros_like(a2)
    nz = a2 > 0
    out[nz] = np.exp(q * np.log(a2[nz]))
    return out


def _replicate_map(fn, replicates: int, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, range(replicates)))
    return [fn(r) for r in range(replicates)]


def mc_moment(
    model: str,
    N: int,
    q: float,
    replicates: int,
    seed: int,
    sieve: FactorSieve,
    threads: int = 1,
) -> MomentEstimate:
    """Estimate E|S_N|^{2q}; replicate r uses stream (seed, r).

    Replicates may run on several threads, but results are reduced in
    replicate order so the output never depends on the thread count.
    """
    _check_model(model)
    if replicates < 2:
        raise ValueError("replicates must be >= 2")
    if q < 0:
        raise ValueError("q must be >= 0")
    if N > sieve.limit:
        raise ValueError(f"N={N} exceeds sieve limit {sieve.limit}")

    def one(r: int) -> complex:
        s = sample_multiplicative(model, sieve, seed, r, limit=N)
        return partial_sum(s, N)

    sums = np.array(_replicate_map(one, replicates, threads))
    vals = _abs_power(sums, q)
    mean = float(vals.mean())
    stderr = float(vals.std(ddof=1) / math.sqrt(replicates))
    return MomentEstimate(
        model=model,
        N=N,
        q=q,
        replicates=replicates,
        mean=mean,
        stderr=stderr,
        seed=seed,
    )


def mc_decomposition_moment(
    model: str,
    x: int,
    replicates: int,
    seed: int,
    sieve: FactorSieve,
    threads: int = 1,
) -> MomentEstimate:
    """Estimate E|C_x| for the prime-decomposition statistic C_x."""
    _check_model(model)
    if replicates < 2:
        raise ValueError("replicates must be >= 2")

    def one(r: int) -> float:
        s = sample_multiplicative(model, sieve, seed, r, limit=x)
        return abs(decomposition_stat(s, x))

    vals = np.array(_replicate_map(one, replicates, threads))
    mean = float(vals.mean())
    stderr = float(vals.std(ddof=1) / math.sqrt(replicates))
    return MomentEstimate(
        model=model,
        N=x,
        q=0.5,
        replicates=replicates,
        mean=mean,
        stderr=stderr,
        seed=seed,
    )
