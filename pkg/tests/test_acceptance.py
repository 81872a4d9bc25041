"""End-to-end acceptance checks, one numbered criterion per test.

Each test prints a single pass/fail line; run with `pytest -s` to see them.
"""

import dataclasses
import math

import mpmath
import numpy as np
import pytest

from rmfmoments import (
    RADEMACHER,
    STEINHAUS,
    birkhoff_reference,
    birkhoff_volume_mc,
    character_table,
    char_value,
    euler_ck,
    mc_decomposition_moment,
    mc_moment,
    min_exp_integral,
    primes_up_to,
    rademacher_moment_bruteforce,
    sample_multiplicative,
    squarefree_count,
    steinhaus_fourth_moment_fast,
    steinhaus_moment_bruteforce,
    steinhaus_moment_product_map,
    sup_distribution,
    sup_statistic,
    theta_moment,
    theta_value,
)
from rmfmoments.cli import main


def _report(num, desc, ok):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def test_criterion_01_orthogonality(sieve_1e4):
    exact_ok = all(
        steinhaus_moment_product_map(N, 1).count == N for N in range(1, 1001)
    )
    est = mc_moment(STEINHAUS, 1000, 1.0, 2000, 42, sieve_1e4)
    mc_ok = abs(est.mean - 1000) < 4 * est.stderr
    _report(1, "first moment count equals N; MC within 4 stderr", exact_ok and mc_ok)


def test_criterion_02_oracle_equivalence():
    ok = all(
        steinhaus_fourth_moment_fast(N).count
        == steinhaus_moment_bruteforce(N, 2).count
        for N in range(1, 201)
    )
    for N, k in [(10, 3), (20, 3), (50, 2)]:
        ok = ok and (
            steinhaus_moment_product_map(N, k).count
            == steinhaus_moment_bruteforce(N, k).count
        )
    _report(2, "fast = bruteforce (N<=200), product-map = bruteforce", ok)


def test_criterion_03_fourth_moment_slope():
    ns = [2**e for e in range(10, 15)]
    ys = [steinhaus_fourth_moment_fast(N).count / N**2 for N in ns]
    slope = np.polyfit(np.log(ns), ys, 1)[0]
    want = 12 / math.pi**2
    ok = abs(slope - want) < 0.15 * want
    _report(3, f"count/N^2 vs log N slope {slope:.5f} ~ 12/pi^2", ok)


def test_criterion_04_rademacher_moments(sieve_1e4):
    ok = all(
        rademacher_moment_bruteforce(N, 2).count == squarefree_count(sieve_1e4, N)
        for N in range(1, 501)
    )
    ok = ok and rademacher_moment_bruteforce(6, 3).count == 19
    _report(4, "rademacher 2nd moment = squarefree count; (6,3) = 19", ok)


def test_criterion_05_euler_products():
    c1 = euler_ck(1)
    c2 = euler_ck(2)
    c3a = euler_ck(3)
    c3b = euler_ck(3, prime_cutoff=2 * c3a.prime_cutoff)
    ok = (
        abs(c1.value - 1.0) < 1e-12
        and abs(c2.value - 6 / math.pi**2) < 1e-8
        and abs(c3a.value - c3b.value) <= c3a.tail_bound + c3b.tail_bound + 1e-15
    )
    _report(5, "c_1 = 1, c_2 = 6/pi^2, c_3 cutoff-stable", ok)


def test_criterion_06_birkhoff_volumes():
    ok = True
    for k, tol in [(3, 0.02), (4, 0.05)]:
        est = birkhoff_volume_mc(k, 10**7, seed=1)
        exact = birkhoff_reference(k).value
        ok = ok and abs(est.estimate - exact) < 3 * est.stderr
        ok = ok and 3 * est.stderr < tol * exact
    _report(6, "Birkhoff MC within 3 stderr of exact at k = 3, 4", ok)


def test_criterion_07_min_exp_integral():
    ok = True
    for logX in (5.0, 10.0):
        closed = min_exp_integral(1, logX, method="closed_form").estimate
        # Independent 1-D quadrature: min has density 2(L - m) dm on [0, L].
        L = mpmath.mpf(logX)
        quad = float(2 * mpmath.quad(lambda m: mpmath.e**m * (L - m), [0, L]))
        ok = ok and abs(closed - quad) < 1e-9 * quad
    logX = 15.0
    mc = min_exp_integral(2, logX, samples=10**6, seed=1)
    ratio = mc.estimate / (math.comb(4, 2) * math.exp(2 * logX))
    ok = ok and 0.8 < ratio < 1.05
    _report(7, f"closed form = quadrature; n=2 ratio {ratio:.4f} in [0.8, 1.05]", ok)


def test_criterion_08_decomposition_inequality(sieve_1e4):
    ok = True
    for x in (10**3, 10**4):
        for model in (RADEMACHER, STEINHAUS):
            s = mc_moment(model, x, 0.5, 2000, 7, sieve_1e4)
            c = mc_decomposition_moment(model, x, 2000, 7, sieve_1e4)
            ok = ok and s.mean >= c.mean - 3 * (s.stderr + c.stderr)
    _report(8, "E|S_x| >= E|C_x| - 3 combined stderr at x = 1e3, 1e4", ok)


def test_criterion_09_halasz(sieve_1e4, sieve_1e6):
    # Degenerate sample: all prime values +1; oracle is a scalar python sum.
    x = 2000.0
    s = sample_multiplicative(RADEMACHER, sieve_1e4, 0, limit=2000)
    vals = np.zeros_like(s.prime_values)
    vals[2:] = 1.0
    d = dataclasses.replace(s, prime_values=vals)
    stat = sup_statistic(d, x)
    sigma = 1.0 / math.log(x)
    ps = primes_up_to(sieve_1e4, 2000)
    direct = max(
        sum(math.cos(t * math.log(p)) / p ** (0.5 + sigma) for p in ps)
        for t in stat.t_grid
    )
    ok = abs(stat.sup_value - direct) < 1e-10

    h = 1.0 / math.log(x)
    r = sample_multiplicative(RADEMACHER, sieve_1e4, 9, limit=2000)
    ok = ok and (
        sup_statistic(r, x, grid_step=h / 2).sup_value
        >= sup_statistic(r, x, grid_step=h).sup_value - 1e-12
    )

    lo = sup_distribution(RADEMACHER, 10**4, 50, 11, sieve_1e4)
    hi = sup_distribution(RADEMACHER, 10**6, 50, 11, sieve_1e6)
    ok = ok and hi.median > lo.median
    _report(9, "sup statistic oracle, refinement, and growth in x", ok)


def test_criterion_10_theta():
    ok = True
    for p in (5, 13, 101):
        t = character_table(p)
        M = np.exp(2j * np.pi * np.outer(np.arange(p - 1), t.dlog[1:]) / (p - 1))
        G = M @ M.conj().T / (p - 1)
        ok = ok and np.max(np.abs(G - np.eye(p - 1))) < 1e-9
    eps = 1e-6
    for p in (5, 101, 10007):
        t = character_table(p)
        for j in (0, 2):
            a = theta_value(t, j, eps=eps).value
            b = theta_value(t, j, eps=eps * eps).value
            ok = ok and abs(a - b) <= 10 * eps
    r = theta_moment(1009, 1) / theta_moment(101, 1)
    want = math.sqrt(1009 / 101)
    ok = ok and want / 2 < r < want * 2
    _report(10, "orthogonality, truncation stability, k=1 scaling", ok)


def test_criterion_11_determinism(capsys):
    cases = [
        ["mc", "--model", "steinhaus", "--n", "500", "--q", "1", "--reps", "100",
         "--seed", "5"],
        ["birkhoff", "--k", "3", "--samples", "100000", "--seed", "5"],
        ["ak-volume", "--k", "2", "--logx", "8", "--samples", "100000", "--seed", "5"],
        ["lemma4", "--n", "2", "--logx", "5", "--samples", "100000", "--seed", "5"],
        ["halasz", "--model", "rademacher", "--n", "2000", "--reps", "20",
         "--seed", "5"],
    ]
    ok = True
    for base in cases:
        outs = []
        for extra in ([], [], ["--threads", "8"]):
            code = main(base + extra)
            outs.append(capsys.readouterr().out)
            ok = ok and code == 0
        ok = ok and outs[0] == outs[1] == outs[2]
    _report(11, "MC subcommands byte-identical across runs and thread counts", ok)
