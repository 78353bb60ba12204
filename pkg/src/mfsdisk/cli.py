"""Command-line front end.

Subcommands::

    mfsdisk solve  CONFIG [--eval-grid NRxNT]
    mfsdisk sweep  CONFIG --n-min A --n-max B [--n-step S]
    mfsdisk verify SUITE

Common flags: ``--out-dir`` (artifact directory, default ``.``),
``--quad-points`` (boundary quadrature override), ``--tail-tol`` (series
truncation tolerance).  ``sweep`` writes the results CSV, a companion
gnuplot script, and a rendered PNG of F(N); ``solve`` writes a text summary
and optionally a polar field dump (CSV + PNG).  Exit status is 0 only if
every row/check succeeded; malformed configs exit with status 2.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from .config import ConfigError, load_problem
from .error_bound import error_bound
from .problem import make_problem
from .report import (SweepResult, SweepRow, fit_slope, render_field_figure,
                     render_sweep_figure, write_field_csv,
                     write_gnuplot_script, write_solution_summary,
                     write_sweep_csv)
from .solver import SingularSystemError, eval_gN, solve_charges
from .spectral import exact_solution, fourier_series
from .verify import SUITE_NAMES, run_suite

__all__ = ["main", "run_sweep"]


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out-dir", type=Path, default=Path("."),
                   help="directory for output artifacts (default: .)")
    p.add_argument("--quad-points", type=int, default=None,
                   help="boundary quadrature points (default: max(256, 16N))")
    p.add_argument("--tail-tol", type=float, default=1e-14,
                   help="relative series truncation tolerance (default: 1e-14)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mfsdisk",
        description="Fundamental-solutions solver for the Neumann problem of "
                    "the modified Helmholtz equation on a disk.")
    sub = ap.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one problem instance")
    p_solve.add_argument("config", type=Path)
    p_solve.add_argument("--eval-grid", default=None, metavar="NRxNT",
                         help="polar grid for a field dump, e.g. 40x80")
    _common_flags(p_solve)

    p_sweep = sub.add_parser("sweep", help="error bound F(N) over a range of N")
    p_sweep.add_argument("config", type=Path)
    p_sweep.add_argument("--n-min", type=int, required=True)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--n-step", type=int, default=1)
    _common_flags(p_sweep)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    _common_flags(p_verify)
    return ap


def _cmd_solve(args) -> int:
    spec = load_problem(args.config)
    try:
        sol = solve_charges(spec)
    except SingularSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rep = error_bound(sol, args.quad_points)
    f = np.real(sol.system.eigenvalues)

    lines = [
        f"config           {args.config}",
        f"R                {spec.R:.17g}",
        f"alpha            {spec.alpha:.17g}",
        f"rho              {spec.rho:.17g}",
        f"N                {spec.N}",
        f"boundary         {spec.boundary.name}",
        f"threshold_ok     {spec.thm1_satisfied}",
        f"eigenvalue_min   {f.min():.17g}",
        f"eigenvalue_max   {f.max():.17g}",
        f"residual         {sol.residual:.17g}",
        f"norm0_sq         {rep.norm0_sq:.17g}",
        f"norm1_sq         {rep.norm1_sq:.17g}",
        f"F                {rep.F:.17g}",
        "Q " + " ".join(f"{q:.17g}" for q in sol.Q),
    ]
    args.out_dir.mkdir(parents=True, exist_ok=True)
    write_solution_summary(args.out_dir / "summary.txt", lines)
    for line in lines:
        print(line)

    if args.eval_grid is not None:
        try:
            nr, nt = (int(v) for v in args.eval_grid.lower().split("x"))
        except ValueError:
            print(f"error: --eval-grid expects NRxNT, got {args.eval_grid!r}",
                  file=sys.stderr)
            return 2
        r = np.linspace(0.0, spec.R, nr)
        th = 2.0 * np.pi * np.arange(nt) / nt
        TH, RR = np.meshgrid(th, r)
        gN = np.asarray(eval_gN(sol, RR * np.exp(1j * TH)))
        series = fourier_series(spec, n_max=64, quad_points=512)
        g_ref = np.asarray(exact_solution(spec, series, RR, TH,
                                          tail_tol=args.tail_tol))
        write_field_csv(args.out_dir / "field.csv", RR, TH, gN, g_ref)
        render_field_figure(args.out_dir / "field.png", r, th,
                            gN.T, f"g_N, N={spec.N}")
        print(f"wrote {args.out_dir / 'field.csv'}")
        print(f"wrote {args.out_dir / 'field.png'}")
    print(f"wrote {args.out_dir / 'summary.txt'}")
    return 0


def run_sweep(spec, n_values, quad_points=None) -> SweepResult:
    """Solve and bound the error for each N; failures become status rows."""
    rows: list[SweepRow] = []
    for N in n_values:
        t0 = time.perf_counter()
        try:
            spec_n = make_problem(spec.R, spec.alpha, spec.rho, N, spec.boundary)
            sol = solve_charges(spec_n)
            rep = error_bound(sol, quad_points)
            f = np.real(sol.system.eigenvalues)
            rows.append(SweepRow(
                N=N, F=rep.F, norm0_sq=rep.norm0_sq, norm1_sq=rep.norm1_sq,
                min_eig=float(f.min()), residual=sol.residual,
                wall_s=time.perf_counter() - t0))
        except Exception as exc:  # per-row failure: record and continue
            rows.append(SweepRow(
                N=N, F=None, norm0_sq=None, norm1_sq=None, min_eig=None,
                residual=None, wall_s=time.perf_counter() - t0,
                status=type(exc).__name__))
    return SweepResult(rows=rows, fitted_slope=fit_slope(rows))


def _cmd_sweep(args) -> int:
    if not (2 <= args.n_min < args.n_max):
        print(f"error: empty sweep range, need 2 <= n-min < n-max "
              f"(got {args.n_min}..{args.n_max})", file=sys.stderr)
        return 2
    if args.n_step < 1:
        print(f"error: n-step must be >= 1, got {args.n_step}", file=sys.stderr)
        return 2
    spec = load_problem(args.config)
    result = run_sweep(spec, range(args.n_min, args.n_max + 1, args.n_step),
                       args.quad_points)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = args.out_dir / "sweep.csv"
    write_sweep_csv(csv_path, result.rows)
    title = f"{args.config.stem}: boundary-defect energy bound"
    write_gnuplot_script(args.out_dir / "sweep.gp", csv_path.name, title,
                         result.fitted_slope)
    render_sweep_figure(args.out_dir / "sweep.png", result.rows, title)

    n_fail = sum(not r.ok for r in result.rows)
    print(f"rows {len(result.rows)}  failures {n_fail}  "
          f"fitted_slope {result.fitted_slope:.6g}")
    for name in ("sweep.csv", "sweep.gp", "sweep.png"):
        print(f"wrote {args.out_dir / name}")
    return 0 if n_fail == 0 else 1


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
    n_fail = sum(not r.passed for r in results)
    print(f"{len(results) - n_fail}/{len(results)} checks passed")
    return 0 if n_fail == 0 else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_verify(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
