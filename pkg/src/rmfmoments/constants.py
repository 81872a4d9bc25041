"""High-precision arithmetic and geometric constants for the moment asymptotics.

The Euler products are evaluated as sums of logs of local factors (the
values are astronomically small for large k, so everything is carried in log
space).  For a certified tail we expand the log of the local factor as a
power series in 1/p with exact rational coefficients,

    log local(1/p) = sum_{a >= 2} l_a p^{-a}

(the 1/p coefficient cancels: for the 2k-th moment product the first series
coefficient is binom(k, k-1)^2 = k^2, exactly offsetting the k^2 log(1-1/p)
factor, and the leading surviving coefficient is l_2 = -k^2(k-1)^2/4).  The
product over p <= P is summed directly and the remainder over p > P is
sum_a l_a * (primezeta(a) - sum_{p<=P} p^{-a}), truncated with a geometric
tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

# Euler-Mascheroni constant, 20 digits (mpmath.euler agrees).
EULER_MASCHERONI = 0.57721566490153286061

_DEFAULT_PRIME_CUTOFF = 101
_SERIES_TERMS = 60

_SMALL_PRIMES = [
    p for p in range(2, 1000) if all(p % d for d in range(2, int(p**0.5) + 1))
]


@dataclass(frozen=True)
class EulerProductValue:
    """Truncated Euler product with a certified bound on the log-scale error."""

    k: int
    value: float
    log_value: float
    prime_cutoff: int
    tail_bound: float


def _series_log(coeffs: list[Fraction], nterms: int) -> list[Fraction]:
    """Power-series log of 1 + c_1 x + c_2 x^2 + ... (c_0 must be 1).

    Standard recurrence l_n = c_n - (1/n) sum_{j<n} j l_j c_{n-j}.
    """
    assert coeffs[0] == 1
    c = coeffs + [Fraction(0)] * (nterms + 1 - len(coeffs))
    l = [Fraction(0)] * (nterms + 1)
    for n in range(1, nterms + 1):
        acc = c[n]
        for j in range(1, n):
            acc -= Fraction(j, n) * l[j] * c[n - j]
        l[n] = acc
    return l


def _ck_local_coeffs(k: int, nterms: int) -> list[Fraction]:
    return [Fraction(math.comb(a + k - 1, k - 1) ** 2) for a in range(nterms + 1)]


def _h_half_local_coeffs(k: int, nterms: int) -> list[Fraction]:
    coeffs = [Fraction(0)] * (nterms + 1)
    coeffs[0] = Fraction(1)
    for j in range(1, k // 2 + 1):
        if j <= nterms:
            coeffs[j] = Fraction(math.comb(k, 2 * j))
    return coeffs


def _log_local_series(
    local_coeffs: list[Fraction], zeta_power: int, nterms: int
) -> list[Fraction]:
    """Series of log[(1-x)^zeta_power * local(x)]; degree-0 and -1 terms vanish."""
    l = _series_log(local_coeffs, nterms)
    for m in range(1, nterms + 1):
        l[m] -= Fraction(zeta_power, m)
    assert l[0] == 0 and l[1] == 0
    return l


def _log_local_at(p: int, local_coeffs: list[Fraction], zeta_power: int) -> mpmath.mpf:
    """log local factor at one prime, inner series summed to working precision."""
    x = mpmath.mpf(1) / p
    acc = mpmath.mpf(0)
    xa = mpmath.mpf(1)
    a = 0
    while True:
        term = mpmath.mpf(local_coeffs[a].numerator) / local_coeffs[a].denominator * xa
        acc += term
        a += 1
        xa *= x
        if a >= len(local_coeffs):
            break
        if a > 2 and abs(term) < mpmath.mpf(10) ** (-mpmath.mp.dps - 5) * abs(acc):
            break
    return zeta_power * mpmath.log(1 - x) + mpmath.log(acc)


def _euler_product_log(
    local_coeffs_fn, zeta_power: int, eps: float, prime_cutoff: int
) -> tuple[float, float]:
    """Returns (log value, certified tail bound on the log)."""
    with mpmath.workdps(30):
        nterms = _SERIES_TERMS
        # Enough inner-series terms that the evaluation at x = 1/2 is converged.
        coeffs = local_coeffs_fn(4 * nterms)
        primes = [p for p in _SMALL_PRIMES if p <= prime_cutoff]
        log_main = mpmath.fsum(
            _log_local_at(p, coeffs, zeta_power) for p in primes
        )
        lseries = _log_local_series(local_coeffs_fn(nterms), zeta_power, nterms)
        tail = mpmath.mpf(0)
        last = mpmath.mpf(0)
        for a in range(2, nterms + 1):
            la = mpmath.mpf(lseries[a].numerator) / lseries[a].denominator
            pz = mpmath.primezeta(a) - mpmath.fsum(
                mpmath.mpf(p) ** (-a) for p in primes
            )
            last = la * pz
            tail += last
        # Terms decay at least like (growth of l_a) / prime_cutoff per step;
        # bound the remainder by a ratio-2 geometric series on the last term.
        bound = float(2 * abs(last)) + 1e-18
        if bound > eps:
            raise ValueError(
                f"cannot certify eps={eps}: residual bound {bound} "
                f"(raise prime_cutoff)"
            )
        return float(log_main + tail), bound


def euler_ck(
    k: int, eps: float = 1e-10, prime_cutoff: int = _DEFAULT_PRIME_CUTOFF
) -> EulerProductValue:
    """Arithmetic factor of the Steinhaus 2k-th moment asymptotic.

    Local factor (1 - 1/p)^{k^2} (1 + sum_a binom(a+k-1, k-1)^2 / p^a);
    c_1 = 1 and c_2 = 6/pi^2 are closed forms used as test anchors.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if eps <= 0:
        raise ValueError("eps must be > 0")
    logv, bound = _euler_product_log(
        lambda n: _ck_local_coeffs(k, n), k * k, eps, prime_cutoff
    )
    return EulerProductValue(
        k=k,
        value=float(math.exp(logv)) if logv > -700 else 0.0,
        log_value=logv,
        prime_cutoff=prime_cutoff,
        tail_bound=bound,
    )


def rademacher_H_half(
    k: int, eps: float = 1e-10, prime_cutoff: int = _DEFAULT_PRIME_CUTOFF
) -> EulerProductValue:
    """Arithmetic factor of the Rademacher k-th moment asymptotic, k >= 2.

    Local factor (1 - 1/p)^{k(k-1)/2} (1 + sum_{1<=j<=k/2} binom(k, 2j)/p^j).
    k = 1 is rejected: the product degenerates and the small-k moments do not
    follow the k >= 3 shape anyway.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if eps <= 0:
        raise ValueError("eps must be > 0")
    logv, bound = _euler_product_log(
        lambda n: _h_half_local_coeffs(k, n), k * (k - 1) // 2, eps, prime_cutoff
    )
    return EulerProductValue(
        k=k,
        value=float(math.exp(logv)) if logv > -700 else 0.0,
        log_value=logv,
        prime_cutoff=prime_cutoff,
        tail_bound=bound,
    )


# Exact volumes of the doubly stochastic polytope for k <= 5, as rationals:
# 1, 2, 3*3^2/(2^2)!, 352*4^3/(3^2)!, 4718075*5^4/(4^2)!.
_BIRKHOFF_TABLE = {
    1: Fraction(1),
    2: Fraction(2),
    3: Fraction(3 * 3**2, math.factorial(4)),
    4: Fraction(352 * 4**3, math.factorial(9)),
    5: Fraction(4718075 * 5**4, math.factorial(16)),
}


@dataclass(frozen=True)
class BirkhoffReference:
    """Volume of the k x k doubly stochastic polytope: exact for k <= 5."""

    k: int
    volume: Fraction | None
    asymptotic_value: float | None
    source: str  # "table" | "asymptotic"

    @property
    def value(self) -> float:
        if self.source == "table":
            return float(self.volume)
        return self.asymptotic_value


def mckay_asymptotic_volume(k: int) -> float:
    """sqrt(2 pi) e^{1/3} k^{-(k-1)^2} e^{k^2} / (2 pi)^k, computed in logs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    logv = (
        0.5 * math.log(2 * math.pi)
        + 1.0 / 3.0
        - (k - 1) ** 2 * math.log(k)
        + k * k
        - k * math.log(2 * math.pi)
    )
    return math.exp(logv)


def birkhoff_reference(k: int) -> BirkhoffReference:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k in _BIRKHOFF_TABLE:
        return BirkhoffReference(
            k=k, volume=_BIRKHOFF_TABLE[k], asymptotic_value=None, source="table"
        )
    return BirkhoffReference(
        k=k, volume=None, asymptotic_value=mckay_asymptotic_volume(k), source="asymptotic"
    )


def ck_asymptotic(k: int) -> float:
    """-k^2 log(2 e^gamma log k): large-k behavior of log c_k."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return -(k * k) * math.log(2 * math.exp(EULER_MASCHERONI) * math.log(k))


def theorem_moment_prediction(N: float, k: int) -> float:
    """Predicted Steinhaus 2k-th moment:

    binom(2k-2, k-1) k^{-(k-1)} c_k gamma_k N^k (log N)^{(k-1)^2}.
    """
    if N < 3:
        raise ValueError("N must be >= 3")
    if k < 1:
        raise ValueError("k must be >= 1")
    ck = euler_ck(k)
    gk = birkhoff_reference(k).value
    logv = (
        math.log(math.comb(2 * k - 2, k - 1))
        - (k - 1) * math.log(k)
        + ck.log_value
        + math.log(gk)
        + k * math.log(N)
        + (k - 1) ** 2 * math.log(math.log(N))
    )
    return math.exp(logv)


def moment_shape_prediction(N: float, q: float) -> float:
    """Conjectured 2q-th moment shape with unit constant:

    N^q for 0 <= q <= 1, N^q (log N)^{(q-1)^2} for q >= 1.
    """
    if N < 3:
        raise ValueError("N must be >= 3")
    if q < 0:
        raise ValueError("q must be >= 0")
    if q <= 1:
        return float(N) ** q
    return float(N) ** q * math.log(N) ** ((q - 1) ** 2)
