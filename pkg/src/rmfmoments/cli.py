"""Command-line surface: one subcommand per computation family.

All numeric output goes to stdout (or --out) as CSV or JSON; progress and
diagnostics go to stderr.  Identical configurations produce byte-identical
output: floats are serialized with 17 significant digits and volatile
metadata (timings) is kept out of the artifact.

Exit codes: 0 success, 2 usage error, 3 resource-limit error, 1 internal
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, constants, exact, geometry, halasz, samples, theta
from .errors import ResourceLimitError
from .sieve import build_factor_sieve


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def emit(columns: list[str], rows: list[list], config: dict, args) -> None:
    out = sys.stdout if args.out is None else open(args.out, "w")
    try:
        if args.format == "csv":
            out.write(",".join(columns) + "\n")
            for row in rows:
                out.write(",".join(_fmt(v) for v in row) + "\n")
        else:
            doc = {
                "meta": {
                    "seed": config.get("seed"),
                    "config": config,
                    "version": __version__,
                },
                "rows": [
                    {c: (float(_fmt(v)) if isinstance(v, float) else v)
                     for c, v in zip(columns, row)}
                    for row in rows
                ],
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _config(args, keys: list[str]) -> dict:
    cfg = {k: getattr(args, k) for k in keys}
    cfg["seed"] = args.seed
    cfg["threads"] = args.threads
    return cfg


def cmd_mc(args) -> None:
    sieve = build_factor_sieve(args.n)
    est = samples.mc_moment(
        args.model, args.n, args.q, args.reps, args.seed, sieve, threads=args.threads
    )
    emit(
        ["model", "N", "q", "reps", "mean", "stderr", "seed"],
        [[est.model, est.N, est.q, est.replicates, est.mean, est.stderr, est.seed]],
        _config(args, ["model", "n", "q", "reps"]),
        args,
    )


def cmd_exact(args) -> None:
    method = args.method
    if method == "auto":
        if args.model == samples.STEINHAUS and args.k == 2:
            method = "fast"
        elif args.model == samples.STEINHAUS:
            method = "product-map"
        else:
            method = "bruteforce"
    if args.model == samples.RADEMACHER:
        if method != "bruteforce":
            raise ValueError("rademacher moments support only --method bruteforce")
        cnt = exact.rademacher_moment_bruteforce(args.n, args.k)
    elif method == "fast":
        if args.k != 2:
            raise ValueError("--method fast requires --k 2")
        cnt = exact.steinhaus_fourth_moment_fast(args.n)
    elif method == "product-map":
        cnt = exact.steinhaus_moment_product_map(args.n, args.k)
    else:
        cnt = exact.steinhaus_moment_bruteforce(args.n, args.k)
    emit(
        ["model", "N", "k", "method", "count"],
        [[cnt.model, cnt.N, cnt.k, method, cnt.count]],
        _config(args, ["model", "n", "k", "method"]),
        args,
    )


def cmd_constants(args) -> None:
    ck = constants.euler_ck(args.k, args.eps)
    hh = constants.rademacher_H_half(args.k, args.eps) if args.k >= 2 else None
    bk = constants.birkhoff_reference(args.k)
    asym = constants.ck_asymptotic(args.k) if args.k >= 2 else float("nan")
    emit(
        [
            "k",
            "c_k",
            "log_c_k",
            "tail_bound",
            "h_half",
            "birkhoff_volume",
            "birkhoff_source",
            "log_ck_asymptotic",
        ],
        [[
            args.k,
            ck.value,
            ck.log_value,
            ck.tail_bound,
            hh.value if hh else float("nan"),
            bk.value,
            bk.source,
            asym,
        ]],
        _config(args, ["k", "eps"]),
        args,
    )


def cmd_birkhoff(args) -> None:
    est = geometry.birkhoff_volume_mc(args.k, args.samples, args.seed)
    emit(
        ["k", "samples", "estimate", "stderr", "seed"],
        [[args.k, est.samples, est.estimate, est.stderr, est.seed]],
        _config(args, ["k", "samples"]),
        args,
    )


def cmd_ak_volume(args) -> None:
    est = geometry.vol_Ak_estimate(args.k, args.logx, args.samples, args.seed)
    emit(
        ["k", "logx", "samples", "estimate", "stderr", "seed"],
        [[args.k, args.logx, est.samples, est.estimate, est.stderr, est.seed]],
        _config(args, ["k", "logx", "samples"]),
        args,
    )


def cmd_lemma4(args) -> None:
    est = geometry.min_exp_integral(
        args.n, args.logx, args.method, args.samples, args.seed
    )
    emit(
        ["n", "logx", "method", "samples", "estimate", "stderr", "seed"],
        [[args.n, args.logx, args.method, est.samples, est.estimate, est.stderr,
          est.seed]],
        _config(args, ["n", "logx", "method", "samples"]),
        args,
    )


def cmd_halasz(args) -> None:
    sieve = build_factor_sieve(args.n)
    dist = halasz.sup_distribution(
        args.model, args.n, args.reps, args.seed, sieve, grid_step=args.grid_step
    )
    emit(
        ["model", "x", "reps", "q10", "median", "q90", "benchmark", "seed"],
        [[dist.model, args.n, dist.replicates, dist.q10, dist.median, dist.q90,
          dist.benchmark, dist.seed]],
        _config(args, ["model", "n", "reps", "grid_step"]),
        args,
    )


def cmd_theta(args) -> None:
    moment = theta.theta_moment(args.p, args.k, args.eps)
    ratio = theta.conjecture_ratio(args.p, args.k, args.eps)
    min_abs = theta.min_abs_theta_even(args.p, args.eps)
    emit(
        ["p", "k", "eps", "moment", "ratio", "min_abs_theta"],
        [[args.p, args.k, args.eps, moment, ratio, min_abs]],
        _config(args, ["p", "k", "eps"]),
        args,
    )


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", default=None)

    p = argparse.ArgumentParser(
        prog="rmfmoments",
        description="Moments of random multiplicative functions: exact counts, "
        "Monte Carlo estimates, limiting constants, and theta moments.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    mc = sub.add_parser("mc", parents=[common], help="Monte Carlo moment E|S_N|^2q")
    mc.add_argument("--model", choices=samples.MODELS, required=True)
    mc.add_argument("--n", type=int, required=True)
    mc.add_argument("--q", type=float, default=1.0)
    mc.add_argument("--reps", type=int, default=1000)
    mc.set_defaults(fn=cmd_mc)

    ex = sub.add_parser("exact", parents=[common], help="exact integer moment count")
    ex.add_argument("--model", choices=samples.MODELS, required=True)
    ex.add_argument("--n", type=int, required=True)
    ex.add_argument("--k", type=int, required=True)
    ex.add_argument(
        "--method",
        choices=["auto", "bruteforce", "product-map", "fast"],
        default="auto",
    )
    ex.set_defaults(fn=cmd_exact)

    co = sub.add_parser(
        "constants", parents=[common], help="Euler products and polytope volumes"
    )
    co.add_argument("--k", type=int, required=True)
    co.add_argument("--eps", type=float, default=1e-10)
    co.set_defaults(fn=cmd_constants)

    bi = sub.add_parser(
        "birkhoff", parents=[common], help="doubly stochastic polytope volume MC"
    )
    bi.add_argument("--k", type=int, required=True)
    bi.add_argument("--samples", type=int, default=10**6)
    bi.set_defaults(fn=cmd_birkhoff)

    ak = sub.add_parser(
        "ak-volume", parents=[common], help="row/column product region volume MC"
    )
    ak.add_argument("--k", type=int, required=True)
    ak.add_argument("--logx", type=float, required=True)
    ak.add_argument("--samples", type=int, default=10**6)
    ak.set_defaults(fn=cmd_ak_volume)

    l4 = sub.add_parser(
        "lemma4", parents=[common], help="min-exponential cube integral"
    )
    l4.add_argument("--n", type=int, required=True)
    l4.add_argument("--logx", type=float, required=True)
    l4.add_argument("--method", choices=["closed_form", "monte_carlo"],
                    default="monte_carlo")
    l4.add_argument("--samples", type=int, default=10**6)
    l4.set_defaults(fn=cmd_lemma4)

    ha = sub.add_parser(
        "halasz", parents=[common], help="sup prime-sum statistic distribution"
    )
    ha.add_argument("--model", choices=samples.MODELS, required=True)
    ha.add_argument("--n", type=int, required=True, help="scale parameter x")
    ha.add_argument("--reps", type=int, default=50)
    ha.add_argument("--grid-step", type=float, default=None)
    ha.set_defaults(fn=cmd_halasz)

    th = sub.add_parser(
        "theta", parents=[common], help="theta moments over even characters"
    )
    th.add_argument("--p", type=int, required=True)
    th.add_argument("--k", type=int, default=1)
    th.add_argument("--eps", type=float, default=1e-12)
    th.set_defaults(fn=cmd_theta)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        args.fn(args)
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # pragma: no cover
        print(f"internal error: {e}", file=sys.stderr)
        return 1
    print(f"done in {time.monotonic() - t0:.2f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
