"""Command-line surface: zeros, spacings, bounds, verification, and sweeps."""

from __future__ import annotations

import argparse
import json
import sys

from . import bessel, bethe, bounds, report
from .errors import CheckFailure
from .laguerre import LaguerreParams
from .solver import zeros


def _params(args) -> LaguerreParams:
    return LaguerreParams(n=args.n, alpha=args.alpha)


def _print_flag(params: LaguerreParams) -> None:
    if params.near_degenerate_weight:
        print("note: alpha + 1 < 1e-6; bounds are tiny but well-defined")


def cmd_zeros(args) -> int:
    params = _params(args)
    zs = zeros(params)
    if args.json:
        payload = {
            "n": params.n,
            "alpha": params.alpha,
            "method": zs.method,
            "near_degenerate_weight": params.near_degenerate_weight,
            "zeros": [float(z) for z in zs.zeros],
            "residuals": [float(r) for r in zs.residuals],
        }
        print(json.dumps(payload, indent=2))
        return 0
    _print_flag(params)
    print(f"zeros of L_{params.n}^({params.alpha}), ascending:")
    print(f"{'index':>5}  {'zero':>24}  {'residual (ulp-eq)':>18}")
    for i, (z, r) in enumerate(zip(zs.zeros, zs.residuals), start=1):
        print(f"{i:>5}  {z:>24.17g}  {r:>18.3g}")
    return 0


def cmd_spacings(args) -> int:
    params = _params(args)
    _print_flag(params)
    rows = report.spacing_rows(zeros(params))
    print(f"{'i':>4}  {'spacing':>24}  {'uniform_bound':>24}  {'ratio':>12}")
    for r in rows:
        print(f"{r.i:>4}  {r.spacing:>24.17g}  {r.uniform_bound:>24.17g}  {r.ratio:>12.6g}")
    return 0


def cmd_bounds(args) -> int:
    params = _params(args)
    _print_flag(params)
    C = args.C if args.C == "auto" else float(args.C)
    bs = bounds.bound_set(params, C=C)
    edge = bounds.edge_params(params)
    print(f"U = {edge.U:.17g}   V = {edge.V:.17g}")
    print(f"window (V^2, U^2) = ({edge.V2:.17g}, {edge.U2:.17g})")
    print(f"sharpened window = [{bs.krasikov_min_lower:.17g}, {bs.krasikov_max_upper:.17g}]")
    print(f"delta max = {bs.delta_max:.17g} at x* = {bs.x_star:.17g}")
    print(f"uniform spacing lower bound = {bs.uniform_lower:.17g}")
    if bs.range_lower is not None:
        print(f"large-alpha bound (C = {bs.range_constant:.6g}): {bs.range_lower:.17g}")
        print(f"  sharper proof constant: {bs.proof_range_lower:.17g}")
    else:
        print("large-alpha bound: not applicable (needs alpha >= n/C)")
    return 0


def cmd_verify(args) -> int:
    params = _params(args)
    _print_flag(params)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = set(checks) - {"bethe", "bounds", "krasikov"}
    if bad:
        print(f"unknown checks: {sorted(bad)}", file=sys.stderr)
        return 2
    zs = zeros(params)
    failed = False
    for check in checks:
        if check == "bethe":
            reports = bethe.verify_identity(zs)
            worst = bethe.max_rel_residual(reports)
            ok = worst <= report.BETHE_RESIDUAL_TOL
            print(f"bethe: max residual {worst:.3g} "
                  f"({'PASS' if ok else 'FAIL'} at {report.BETHE_RESIDUAL_TOL:g})")
            failed |= not ok
        elif check == "bounds":
            rows = report.spacing_rows(zs)
            if not rows:
                print("bounds: no spacings for n = 1 (skipped)")
                continue
            worst = min(r.ratio for r in rows)
            ok = worst >= 1.0
            print(f"bounds: min spacing/bound ratio {worst:.6g} ({'PASS' if ok else 'FAIL'})")
            failed |= not ok
        elif check == "krasikov":
            edge = bounds.edge_params(params)
            lo, hi = bounds.krasikov_window(params)
            ok = bool(edge.V2 < zs.zeros[0] and zs.zeros[-1] < edge.U2
                      and lo <= zs.zeros[0] and zs.zeros[-1] <= hi)
            print(f"krasikov: window [{lo:.6g}, {hi:.6g}] ({'PASS' if ok else 'FAIL'})")
            failed |= not ok
    return 1 if failed else 0


def cmd_sweep(args) -> int:
    config = report.parse_sweep_config(args.config)
    summary = report.run_sweep(config)
    print(f"wrote {len(summary['pairs'])} pair CSVs and summary.json "
          f"to {config.output_dir}")
    if summary["failures"]:
        for failure in summary["failures"]:
            print(f"FAIL n={failure['n']} alpha={failure['alpha']} "
                  f"[{failure['check']}]: {failure['detail']}", file=sys.stderr)
        return 1
    return 0


def cmd_figure1(args) -> int:
    written = report.figure1(args.out)
    print(f"wrote {len(written)} files to {args.out}")
    return 0


def cmd_bessel_probe(args) -> int:
    n_grid = [int(p) for p in args.ngrid.split(",") if p.strip()]
    table = bessel.bessel_zero_table(args.alpha, min(args.k + 1, bessel.MAX_RANK))
    print(f"zeros of J_{args.alpha}: " + ", ".join(f"{z:.12g}" for z in table.zeros))
    facts = bessel.gap_facts(table)
    print(f"gap band [pi, 2pi] holds: {facts.all_gaps_in_band}; "
          f"pair sums >= 1+alpha: {facts.all_sums_ok}")
    probe = bessel.limit_probe(args.alpha, args.k, n_grid)
    print(f"squared-zero difference: {probe.target:.12g}; "
          f"scaled-spacing limit: {probe.asymptotic_limit:.12g}")
    print(f"{'n':>6} {'scaled spacing':>18} {'deviation':>12}")
    for n, s, d in zip(probe.n_grid, probe.scaled_spacings, probe.deviations):
        print(f"{n:>6} {s:>18.12g} {d:>12.3g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laguerre-spacings",
        description="Zeros, spacing bounds and identity checks for L_n^(alpha)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair(p):
        p.add_argument("--n", type=int, required=True, help="polynomial degree")
        p.add_argument("--alpha", type=float, required=True, help="exponent > -1")

    p = sub.add_parser("zeros", help="compute all zeros with residual diagnostics")
    add_pair(p)
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("spacings", help="consecutive-zero gaps vs the uniform bound")
    add_pair(p)
    p.set_defaults(func=cmd_spacings)

    p = sub.add_parser("bounds", help="edge quantities and every closed-form bound")
    add_pair(p)
    p.add_argument("--C", default="auto",
                   help="constant for the large-alpha bound, or 'auto' for n/alpha")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run checks for one (n, alpha)")
    add_pair(p)
    p.add_argument("--checks", default="bethe,bounds,krasikov",
                   help="comma-separated subset of bethe,bounds,krasikov")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a grid described by a config file")
    p.add_argument("--config", required=True, help="flat key/value config file")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure1", help="emit the default 4x4 grid CSVs + plot script")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("bessel-probe",
                       help="Bessel zeros, gap facts, and the scaled-spacing limit")
    p.add_argument("--alpha", type=float, required=True, help="exponent in (-1, 1]")
    p.add_argument("--k", type=int, required=True, help="spacing rank at the clustered end")
    p.add_argument("--ngrid", required=True, help="comma-separated degrees, ascending")
    p.set_defaults(func=cmd_bessel_probe)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
