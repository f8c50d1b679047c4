"""Batch command-line front end.

Subcommands: ``solve`` (one problem, writes coefficient/solution tables
and a JSON report), ``diagnose`` (solvability diagnostics, no solve
needed), ``reproduce`` (regenerate the benchmark tables with reference
columns).  Numeric output is serialized with 17 significant digits; CSV
files are deterministic (timings live only in the JSON report).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .analysis import (conjecture_check, fov_extent, numerical_radius_bound,
                       numerical_radius_estimate, predicted_accurate_entries,
                       resolvent_decay_profile)
from .coeff import assemble, bandwidth_for_tolerance
from .errors import LegodeError
from .legendre import EPS, eval_series, expand_function
from .problems import BUILTINS, expression_problem, nmr_problem, polynomial_problem, toy_problem
from .solver import OdeProblem, auto_size, rescale_to_reference, solve_ode
from . import reference_data

__all__ = ["main"]


class SystemExit2(Exception):
    """Configuration error (exit code 2)."""


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (complex, np.complexfloating)):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    if x is None:
        return ""
    return f"{float(x):.17g}"


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _json_default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not serializable: {type(obj)}")


def _build_problem(args) -> OdeProblem:
    if args.builtin and args.f:
        raise SystemExit2("use either --builtin or --f, not both")
    if args.builtin:
        if args.builtin == "toy":
            beta = 10.0 if args.beta is None else args.beta
            return toy_problem(args.omega, beta)
        if args.builtin == "poly":
            return polynomial_problem(args.tend if args.tend is not None else 25.0)
        if args.builtin == "nmr":
            beta = 3450.0 if args.beta is None else args.beta
            return nmr_problem(args.nu, args.alpha, beta, args.gamma,
                               args.tend if args.tend is not None else 1e-2,
                               split=args.split)
        raise SystemExit2(f"unknown builtin {args.builtin!r}")
    if args.f is not None:
        interval = (0.0, args.tend) if args.tend is not None else (-1.0, 1.0)
        if args.split:
            interval = (0.0, interval[1] / args.split)
        return expression_problem(args.f, interval)
    raise SystemExit2("specify a problem with --builtin or --f")


def _cmd_solve(args) -> None:
    problem = _build_problem(args)
    if args.tol is not None:
        problem = OdeProblem(problem.f, problem.interval, problem.exact_solution,
                             args.tol, problem.name)
    M = None if args.auto_size else args.M
    if M is None and not args.auto_size:
        raise SystemExit2("give --M or --auto-size")
    report = solve_ode(problem, M, underline=not args.no_underline,
                       diagnostics=True)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    from .legendre import LegendreSeries

    coeffs = report.coeffs.coeffs
    a, b = problem.interval
    ts = np.linspace(a, b, 2001)
    tref = 2.0 * (ts - a) / (b - a) - 1.0
    vals = eval_series(LegendreSeries(report.coeffs_full), tref)
    payload = _report_payload(report, problem, args)
    if args.format == "json":
        payload["coefficients"] = [[i, c.real, c.imag] for i, c in enumerate(coeffs)]
        payload["solution"] = [[t, v.real, v.imag] for t, v in zip(ts, vals)]
        with open(out / "solve.json", "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, default=_json_default)
    else:
        _write_csv(out / "coefficients.csv", ["index", "re", "im"],
                   [[i, c.real, c.imag] for i, c in enumerate(coeffs)])
        _write_csv(out / "solution.csv", ["t", "re", "im"],
                   [[t, v.real, v.imag] for t, v in zip(ts, vals)])
        with open(out / "report.json", "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, default=_json_default)
    print(f"M={report.M} N={report.N} chopped_len={report.chopped_len} "
          f"nu={_fmt(report.nu_estimate)} err_f={_fmt(report.err_f)}")


def _report_payload(report, problem, args) -> dict:
    return {
        "problem": problem.name or (args.f or ""),
        "M": report.M,
        "N": report.N,
        "chopped_len": report.chopped_len,
        "underlined": report.underlined,
        "sum_abs_coeffs": report.sum_abs_coeffs,
        "nu_bound": report.nu_bound,
        "nu": report.nu_estimate,
        "residual": report.residual,
        "initial_value": report.initial_value,
        "initial_condition_ok": report.initial_condition_ok,
        "err_f": report.err_f,
        "err_c": report.err_c,
        "timings_s": report.timings,
    }


def _cmd_diagnose(args) -> None:
    problem = _build_problem(args)
    ref = rescale_to_reference(problem)
    series = expand_function(ref.f, EPS)
    N = series.degree
    M = args.M if args.M is not None else max(4 * (N + 2), 64)
    cm = assemble(series, M)
    csum, ok = conjecture_check(series)
    diag = {
        "problem": problem.name or (args.f or ""),
        "M": M,
        "N": N,
        "bandwidth_for_default_tol": bandwidth_for_tolerance(series),
        "sum_abs_coeffs": csum,
        "coeff_sum_within_budget": ok,
        "nu_bound": numerical_radius_bound(cm),
        "nu": fov_extent(cm),
    }
    if not args.fast:
        diag["nu_sweep"] = numerical_radius_estimate(cm)
        profile = resolvent_decay_profile(cm)
        diag["K"] = profile.K
        diag["decay_mu"] = profile.mu
        diag["predicted_accurate_entries"] = predicted_accurate_entries(M, N, profile.K)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "diagnostics.json", "w", encoding="utf-8") as fh:
        json.dump(diag, fh, indent=1, default=_json_default)
    print(json.dumps(diag, indent=1, default=_json_default))


def _last_coeff(report) -> float:
    c = report.coeffs_full
    nz = np.nonzero(np.abs(c) > 0)[0]
    return float(abs(c[nz[-1]])) if nz.size else 0.0


def _cmd_reproduce(args) -> None:
    table = args.table
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if table in ("4", "5"):
        t_end = 25.0 if table == "4" else 50.0
        data = reference_data.TABLE4 if table == "4" else reference_data.TABLE5
        rows = []
        for M, (ref_err, ref_clast) in data.items():
            rep = solve_ode(polynomial_problem(t_end), M)
            rows.append([M, rep.err_f, _last_coeff(rep), ref_err, ref_clast])
        header = ["M", "err_f", "c_last", "ref_err_f", "ref_c_last"]
        name = f"table{table}"
    elif table == "2":
        rows = []
        for t_end, ref in reference_data.TABLE2.items():
            rep = solve_ode(polynomial_problem(t_end), 1000, diagnostics=True)
            rows.append([t_end, 1000, rep.sum_abs_coeffs, rep.nu_estimate,
                         rep.err_c, rep.err_f,
                         ref["sum_abs_01"], ref["nu"], ref["err_c"], ref["err_f"]])
        header = ["t_end", "M", "sum_abs_01", "nu", "err_c", "err_f",
                  "ref_sum_abs_01", "ref_nu", "ref_err_c", "ref_err_f"]
        name = "table2"
    elif table == "toy":
        rows = []
        for (omega, beta, M), ref in reference_data.TOY.items():
            rep = solve_ode(toy_problem(omega, beta), M, diagnostics=True)
            rows.append([omega, beta, M, rep.N, rep.sum_abs_coeffs,
                         rep.nu_estimate, rep.err_c, rep.err_f,
                         ref["nu"], ref["err_c"], ref["err_f"]])
        header = ["omega", "beta", "M", "N", "sum_abs_coeffs", "nu",
                  "err_c", "err_f", "ref_nu", "ref_err_c", "ref_err_f"]
        name = "toy"
    elif table == "nmr":
        rows = []
        for (nu, split, M), ref in reference_data.NMR.items():
            rep = solve_ode(nmr_problem(nu=nu, split=split), M)
            rows.append([nu, split or 1, M, rep.N, rep.err_c, rep.err_f,
                         ref.get("err_c"), ref["err_f"]])
        header = ["nu", "split", "M", "N", "err_c", "err_f",
                  "ref_err_c", "ref_err_f"]
        name = "nmr"
    else:
        raise SystemExit2(f"unknown table {table!r}")
    if args.format == "json":
        path = out / f"{name}.json"
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"header": header, "rows": rows}, fh, indent=1,
                      default=_json_default)
    else:
        path = out / f"{name}.csv"
        _write_csv(path, header, rows)
    print(f"wrote {path}")


def _add_problem_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--builtin", choices=sorted(BUILTINS), help="named benchmark problem")
    p.add_argument("--f", help="coefficient-function expression in t, e.g. '-1j*sin(t+1)'")
    p.add_argument("--omega", type=float, default=5.0, help="toy oscillation rate")
    p.add_argument("--beta", type=float, default=None,
                   help="toy amplitude divisor (default 10) / nmr first "
                        "harmonic amplitude (default 3450)")
    p.add_argument("--nu", type=float, default=5000.0, help="nmr spinning rate")
    p.add_argument("--alpha", type=float, default=0.05, help="nmr constant term")
    p.add_argument("--gamma", type=float, default=3450.0, help="nmr second harmonic amplitude")
    p.add_argument("--tend", type=float, default=None,
                   help="right endpoint of the original interval [0, tend]")
    p.add_argument("--split", type=int, default=None,
                   help="restrict to the first of this many equal subintervals")
    p.add_argument("--M", type=int, default=None, help="truncation size")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="legode",
        description="Spectral solver for du/dt = f(t) u(t), u(start) = 1")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve one problem and write results")
    _add_problem_flags(ps)
    ps.add_argument("--auto-size", action="store_true", help="choose M automatically")
    ps.add_argument("--tol", type=float, default=None, help="target solution tolerance")
    ps.add_argument("--no-underline", action="store_true",
                    help="keep the trailing matrix rows (tail shows spurious growth)")
    ps.set_defaults(func=_cmd_solve)

    pd = sub.add_parser("diagnose", help="solvability diagnostics without solving")
    _add_problem_flags(pd)
    pd.add_argument("--fast", action="store_true",
                    help="skip the sweep estimate and the resolvent profile")
    pd.set_defaults(func=_cmd_diagnose)

    pr = sub.add_parser("reproduce", help="regenerate a benchmark table")
    pr.add_argument("table", choices=["2", "4", "5", "toy", "nmr"])
    pr.add_argument("--out", default=".", help="output directory")
    pr.add_argument("--format", choices=["csv", "json"], default="csv")
    pr.set_defaults(func=_cmd_reproduce)

    args = parser.parse_args(argv)
    try:
        args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LegodeError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
