"""Sup-over-t prime-sum statistic behind the first-moment lower bound.

For a sampled f the statistic at shift t is

  Rademacher:  sum_p f(p) cos(t log p) / p^{1/2 + 1/log x}
  Steinhaus:   sum_p [ Re(f(p) p^{-it}) / p^{1/2 + 1/log x}
                       + Re(f(p)^2 p^{-2it}) / (2 p^{1 + 2/log x}) ]

maximized over a grid t in [1, 2 (loglog x)^2].  Prime sums are truncated at
p <= x; the neglected tail is measured empirically by the cutoff-doubling
test rather than claimed rigorously.  The default grid step is 1/log x,
below the scale on which the sums decorrelate in t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .samples import (
    RADEMACHER,
    MultiplicativeSample,
    _check_model,
    sample_multiplicative,
)
from .sieve import FactorSieve, primes_up_to

_T_BLOCK = 64


@dataclass(frozen=True)
class HalaszStatistic:
    model: str
    x: float
    t_grid: np.ndarray
    prime_cutoff: int
    sup_value: float
    argmax_t: float


@dataclass(frozen=True)
class SupDistribution:
    model: str
    x: float
    replicates: int
    sup_values: np.ndarray
    q10: float
    median: float
    q90: float
    benchmark: float  # loglog x - logloglog x
    seed: int


def shift_grid(x: float, grid_step: float | None = None) -> np.ndarray:
    """Grid 1, 1+h, ... covering [1, 2 (loglog x)^2]; default h = 1/log x."""
    if x < 16:
        raise ValueError("x must be >= 16")
    if grid_step is None:
        grid_step = 1.0 / math.log(x)
    if grid_step <= 0:
        raise ValueError("grid_step must be > 0")
    tmax = 2.0 * math.log(math.log(x)) ** 2
    npts = max(1, int(math.floor((tmax - 1.0) / grid_step)) + 1)
    return 1.0 + grid_step * np.arange(npts)


def _prime_data(sieve: FactorSieve, x: float, cutoff: int | None):
    cutoff = int(x) if cutoff is None else cutoff
    if cutoff > sieve.limit:
        raise ValueError(f"prime cutoff {cutoff} exceeds sieve limit {sieve.limit}")
    primes = primes_up_to(sieve, cutoff)
    logp = np.log(primes.astype(np.float64))
    return cutoff, primes, logp


def _stat_columns(
    model: str,
    prime_vals: np.ndarray,
    primes: np.ndarray,
    logp: np.ndarray,
    x: float,
    t: np.ndarray,
) -> np.ndarray:
    """Statistic at each grid point, for one or many samples at once.

    prime_vals has shape (n_primes,) or (n_primes, R); the result matches
    with shape (n_t,) or (n_t, R).
    """
    w1 = np.exp(-(0.5 + 1.0 / math.log(x)) * logp)
    out = None
    scale = w1[:, None] if prime_vals.ndim == 2 else w1
    if model == RADEMACHER:
        fv = prime_vals * scale
        for lo in range(0, len(t), _T_BLOCK):
            block = np.cos(np.outer(t[lo : lo + _T_BLOCK], logp)) @ fv
            out = block if out is None else np.concatenate([out, block])
        return out
    w2 = np.exp(-(1.0 + 2.0 / math.log(x)) * logp)
    scale2 = w2[:, None] if prime_vals.ndim == 2 else w2
    f1 = prime_vals * scale
    f2 = prime_vals * prime_vals * scale2
    for lo in range(0, len(t), _T_BLOCK):
        tl = np.outer(t[lo : lo + _T_BLOCK], logp)
        block = (
            np.cos(tl) @ f1.real
            + np.sin(tl) @ f1.imag
            + 0.5 * (np.cos(2 * tl) @ f2.real + np.sin(2 * tl) @ f2.imag)
        )
        out = block if out is None else np.concatenate([out, block])
    return out


def sup_statistic(
    sample: MultiplicativeSample,
    x: float,
    grid_step: float | None = None,
    prime_cutoff: int | None = None,
) -> HalaszStatistic:
    """Max of the prime-sum statistic over the shift grid, with its argmax."""
    if x < 16:
        raise ValueError("x must be >= 16")
    cutoff, primes, logp = _prime_data(sample.sieve, x, prime_cutoff)
    if cutoff > sample.limit:
        raise ValueError(f"prime cutoff {cutoff} exceeds sample limit {sample.limit}")
    t = shift_grid(x, grid_step)
    stats = _stat_columns(
        sample.model, sample.prime_values[primes], primes, logp, x, t
    )
    i = int(np.argmax(stats))
    return HalaszStatistic(
        model=sample.model,
        x=x,
        t_grid=t,
        prime_cutoff=cutoff,
        sup_value=float(stats[i]),
        argmax_t=float(t[i]),
    )


def sup_distribution(
    model: str,
    x: float,
    replicates: int,
    seed: int,
    sieve: FactorSieve,
    grid_step: float | None = None,
) -> SupDistribution:
    """Sup statistics over independent replicates, with summary quantiles.

    All replicates share the cos/sin grids, so the per-replicate values are
    identical to calling sup_statistic on each sample individually.
    """
    _check_model(model)
    if replicates < 10:
        raise ValueError("replicates must be >= 10")
    cutoff, primes, logp = _prime_data(sieve, x, None)
    t = shift_grid(x, grid_step)
    cols = np.empty(
        (len(primes), replicates),
        dtype=np.float64 if model == RADEMACHER else np.complex128,
    )
    for r in range(replicates):
        s = sample_multiplicative(model, sieve, seed, r, limit=cutoff)
        cols[:, r] = s.prime_values[primes]
    stats = _stat_columns(model, cols, primes, logp, x, t)
    sups = stats.max(axis=0)
    llx = math.log(math.log(x))
    return SupDistribution(
        model=model,
        x=x,
        replicates=replicates,
        sup_values=sups,
        q10=float(np.quantile(sups, 0.1)),
        median=float(np.quantile(sups, 0.5)),
        q90=float(np.quantile(sups, 0.9)),
        benchmark=llx - math.log(llx),
        seed=seed,
    )
