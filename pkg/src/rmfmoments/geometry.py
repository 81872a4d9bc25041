"""Monte Carlo estimates for the geometric factors of the moment asymptotics.

Three targets:

  * the doubly stochastic polytope volume, via rejection sampling in the
    truncated-cube description (k^{k-1age} times the volume of the set of
    (k-1)x(k-1) nonnegative matrices with row/column sums <= 1 and total
    sum >= k-2, scaled by k^{k-1});
  * the min-exponential integral
    int exp(min(x_1+..+x_n, y_1+..+y_n)) over [0, log X]^{2n}, whose
    large-X value is binom(2n, n) X^n;
  * the volume of the region of k x k matrices (a_{ij}) in [1, inf)^{k^2}
    with all row and column products <= X, in log coordinates.

All samplers batch through fixed-size blocks with a Philox stream keyed by
(seed, block index), so estimates are reproducible regardless of how the
blocks are executed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import UnsupportedMethodError

_BLOCK = 1 << 19


@dataclass(frozen=True)
class VolumeEstimate:
    target: str
    samples: int
    estimate: float
    stderr: float
    seed: int


def _block_gen(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.Philox(key=np.array([seed, block], dtype=np.uint64))
    )


def birkhoff_volume_mc(k: int, samples: int, seed: int = 0) -> VolumeEstimate:
    """Rejection estimate of the doubly stochastic polytope volume.

    Draws (k-1)^2 uniforms per sample; the acceptance fraction times k^{k-1}
    estimates the volume.  stderr is the binomial standard error under the
    same scaling.  The acceptance rate collapses beyond k = 6.
    """
    if not 2 <= k <= 6:
        raise ValueError("k must be in [2, 6]")
    if samples < 10**4:
        raise ValueError("samples must be >= 1e4")
    d = (k - 1) ** 2
    accepted = 0
    done = 0
    block = 0
    while done < samples:
        m = min(_BLOCK, samples - done)
        u = _block_gen(seed, block).random((m, d))
        accepted += kernels.birkhoff_accept_count(u, k)
        done += m
        block += 1
    phat = accepted / samples
    scale = float(k ** (k - 1))
    return VolumeEstimate(
        target=f"birkhoff_cube(k={k})",
        samples=samples,
        estimate=scale * phat,
        stderr=scale * math.sqrt(phat * (1 - phat) / samples),
        seed=seed,
    )


def min_exp_integral(
    n: int,
    logX: float,
    method: str = "monte_carlo",
    samples: int = 10**6,
    seed: int = 0,
) -> VolumeEstimate:
    """int exp(min(sum x, sum y)) over [0, logX]^{2n}.

    closed_form (n = 1 only): direct integration gives 2(X - log X - 1).
    monte_carlo: substitute v = logX - x, w = logX - y so the integrand
    becomes X^n exp(-max(sum v, sum w)), bounded by X^n, and sample the cube
    uniformly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if logX <= 0:
        raise ValueError("logX must be > 0")
    X = math.exp(logX)
    if method == "closed_form":
        if n != 1:
            raise UnsupportedMethodError("closed_form is only available for n=1")
        return VolumeEstimate(
            target=f"min_exp(n=1, logX={logX})",
            samples=0,
            estimate=2.0 * (X - logX - 1.0),
            stderr=0.0,
            seed=seed,
        )
    if method != "monte_carlo":
        raise UnsupportedMethodError(f"unknown method {method!r}")
    total = 0.0
    total_sq = 0.0
    done = 0
    block = 0
    while done < samples:
        m = min(_BLOCK, samples - done)
        vw = _block_gen(seed, block).random((m, 2 * n)) * logX
        g = np.exp(-np.maximum(vw[:, :n].sum(axis=1), vw[:, n:].sum(axis=1)))
        total += float(g.sum())
        total_sq += float((g * g).sum())
        done += m
        block += 1
    vol = logX ** (2 * n) * X**n
    mean = total / samples
    var = max(0.0, total_sq / samples - mean * mean)
    return VolumeEstimate(
        target=f"min_exp(n={n}, logX={logX})",
        samples=samples,
        estimate=vol * mean,
        stderr=vol * math.sqrt(var / samples),
        seed=seed,
    )


def _row_weight_integral(k: int, logX: float) -> float:
    """int_0^L e^s s^{k-1}/(k-1)! ds: the one-row integral without column cuts."""
    # e^s sum_{j=0..k-1} (-1)^j s^{k-1-j} (k-1)!/(k-1-j)!, evaluated at L and 0.
    L = logX
    X = math.exp(logX)
    acc_L = 0.0
    acc_0 = 0.0
    for j in range(k):
        c = (-1) ** j * math.factorial(k - 1) / math.factorial(k - 1 - j)
        acc_L += c * L ** (k - 1 - j)
        acc_0 += c * (1.0 if j == k - 1 else 0.0)
    return (X * acc_L - acc_0) / math.factorial(k - 1)


def vol_Ak_estimate(
    k: int, logX: float, samples: int, seed: int = 0
) -> VolumeEstimate:
    """Volume of {(a_ij) in [1, inf)^{k^2} : all row and column products <= X}.

    In log coordinates this is int exp(sum u) over the row/column constrained
    box.  Rows are drawn from the integrand's own row marginal (row sum s
    with density e^s s^{k-1} on [0, logX], direction uniform on the simplex),
    which makes the importance weight a constant -- the integral over the
    row-constrained region alone -- so the estimate is that constant times
    the fraction of draws whose column sums also stay below logX, with a
    binomial stderr.  Beyond k = 3 the column acceptance collapses.
    """
    if k not in (1, 2, 3):
        raise ValueError("k must be in {1, 2, 3}")
    if logX <= 0 or logX > 30:
        raise ValueError("logX must be in (0, 30]")
    X = math.exp(logX)
    if k == 1:
        return VolumeEstimate(
            target="ak_region(k=1)", samples=0, estimate=X - 1.0, stderr=0.0, seed=seed
        )
    if samples < 10**4:
        raise ValueError("samples must be >= 1e4")
    L = logX
    weight = _row_weight_integral(k, logX) ** k
    accepted = 0
    done = 0
    block = 0
    while done < samples:
        m = min(_BLOCK, samples - done)
        gen = _block_gen(seed, block)
        # Row sums: density prop. to e^s s^{k-1} on [0, L] by rejection from e^s.
        s = np.empty((m, k))
        filled = 0
        while filled < m * k:
            want = m * k - filled
            cand = np.log1p(gen.random(2 * want) * (X - 1.0))
            keep = cand[gen.random(2 * want) <= (cand / L) ** (k - 1)]
            take = keep[:want]
            s.reshape(-1)[filled : filled + take.size] = take
            filled += take.size
        # Row directions: uniform on the simplex.
        e = gen.standard_exponential((m, k, k))
        u = s[:, :, None] * e / e.sum(axis=2, keepdims=True)
        accepted += int((u.sum(axis=1) <= L).all(axis=1).sum())
        done += m
        block += 1
    phat = accepted / samples
    return VolumeEstimate(
        target=f"ak_region(k={k}, logX={logX})",
        samples=samples,
        estimate=weight * phat,
        stderr=weight * math.sqrt(phat * (1 - phat) / samples),
        seed=seed,
    )
