"""Exact integer moments.

Steinhaus even moments E|S_N|^{2k} are counts of 2k-tuples with equal
products; Rademacher k-th moments count squarefree k-tuples whose product is
a perfect square.  Three independent routes are kept for cross-validation:

  * bruteforce: literal O(N^{2k}) pairwise comparison of enumerated products;
  * product_map: accumulate r_k(N, m) = #{k-tuples with product m}, return
    sum of r_k^2;
  * fourth_moment_fast: k=2 only, the O(N^2) divisor-pair identity
    sum_{d1,d2<=N} floor(N*min(d1,d2)/lcm(d1,d2)), validated against
    bruteforce in the test suite before use.

All counts are exact Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ResourceLimitError
from .samples import RADEMACHER, STEINHAUS

_BRUTE_GUARD = 10**10  # pairwise comparisons
_TUPLE_GUARD = 10**9  # enumerated k-tuples


@dataclass(frozen=True)
class ExactMomentCount:
    model: str
    N: int
    k: int
    count: int


def _check_nk(N: int, k: int) -> None:
    if N < 1 or k < 1:
        raise ValueError("N and k must be >= 1")


def _tuple_products(values: np.ndarray, k: int) -> np.ndarray:
    """Products of all k-tuples drawn from `values`, as a flat int64 array."""
    prods = values.astype(np.int64)
    for _ in range(k - 1):
        prods = (prods[:, None] * values[None, :]).ravel()
    return prods


def steinhaus_moment_bruteforce(N: int, k: int) -> ExactMomentCount:
    """Count 2k-tuples (n_1..n_k, m_1..m_k) <= N with equal products.

    Every pair of enumerated k-tuple products is compared, so the work is
    N^{2k} comparisons (chunked through numpy).
    """
    _check_nk(N, k)
    if N ** (2 * k) > _BRUTE_GUARD:
        raise ResourceLimitError(
            f"bruteforce needs N^(2k) = {N ** (2 * k)} comparisons, "
            f"guard is {_BRUTE_GUARD}"
        )
    prods = _tuple_products(np.arange(1, N + 1), k)
    total = 0
    chunk = max(1, 10**7 // max(1, len(prods)))
    for lo in range(0, len(prods), chunk):
        total += int((prods[lo : lo + chunk, None] == prods[None, :]).sum())
    return ExactMomentCount(model=STEINHAUS, N=N, k=k, count=total)


def steinhaus_moment_product_map(N: int, k: int) -> ExactMomentCount:
    """Accumulate r_k(N, m) over a map keyed by the product m, return sum r^2.

    Memory holds one chunk of N^{k-1} products plus the map; the guard fails
    loudly instead of swapping.
    """
    _check_nk(N, k)
    if N**k > _TUPLE_GUARD:
        raise ResourceLimitError(
            f"product map needs N^k = {N**k} tuples, guard is {_TUPLE_GUARD}"
        )
    values = np.arange(1, N + 1, dtype=np.int64)
    inner = _tuple_products(values, k - 1) if k > 1 else np.ones(1, dtype=np.int64)
    counts: dict[int, int] = {}
    for v in values:
        u, c = np.unique(v * inner, return_counts=True)
        for m, cnt in zip(u.tolist(), c.tolist()):
            counts[m] = counts.get(m, 0) + cnt
    total = sum(c * c for c in counts.values())
    return ExactMomentCount(model=STEINHAUS, N=N, k=k, count=total)


def product_count_total(N: int, k: int) -> int:
    """Side-channel check: sum of r_k(N, m) over m, which must equal N^k."""
    _check_nk(N, k)
    if N**k > _TUPLE_GUARD:
        raise ResourceLimitError(f"N^k = {N**k} exceeds guard {_TUPLE_GUARD}")
    return len(_tuple_products(np.arange(1, N + 1), k))


def steinhaus_fourth_moment_fast(N: int) -> ExactMomentCount:
    """E|S_N|^4 via the divisor-pair identity; O(N^2) gcd loop, k=2 only."""
    _check_nk(N, 2)
    if N > 10**5:
        raise ResourceLimitError(f"fast fourth moment supports N <= 1e5, got {N}")
    return ExactMomentCount(
        model=STEINHAUS, N=N, k=2, count=int(kernels.fourth_moment_sum(N))
    )


def _squarefree_values(N: int) -> np.ndarray:
    mask = np.ones(N + 1, dtype=bool)
    mask[0] = False
    for p in range(2, math.isqrt(N) + 1):
        mask[p * p :: p * p] = False  # composite steps are harmless here
    return np.nonzero(mask)[0].astype(np.int64)


def rademacher_moment_bruteforce(N: int, k: int) -> ExactMomentCount:
    """Count k-tuples of squarefree n_i <= N whose product is a perfect square."""
    _check_nk(N, k)
    if N**k > _TUPLE_GUARD:
        raise ResourceLimitError(
            f"bruteforce needs N^k = {N**k} tuples, guard is {_TUPLE_GUARD}"
        )
    sq = _squarefree_values(N)
    prods = _tuple_products(sq, k)
    roots = np.sqrt(prods.astype(np.float64)).round().astype(np.int64)
    total = int((roots * roots == prods).sum())
    return ExactMomentCount(model=RADEMACHER, N=N, k=k, count=total)
