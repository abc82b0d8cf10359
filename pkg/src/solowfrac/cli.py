"""Command-line front end: trajectories, oracle comparisons, sweeps, equilibria.

    solowfrac solve      --mu 0.5 --alpha 0.5 --t-end 2 --output k.csv
    solowfrac compare    --alpha 0.5 --order 8
    solowfrac sweep      --vary alpha --from 0.3 --to 0.9 --count 7
    solowfrac equilibria --p 2 --q 1 --mu 0.5 --format json
    solowfrac special gamma 5
    solowfrac special ml --alpha 0.5 --z -1

Output goes to stdout unless ``--output`` is given; a relative output path is
resolved against ``$SOLOWFRAC_OUTPUT_DIR`` when that variable is set.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from .model import equilibria
from .oracle import solve_oracle
from .solver import MAX_ORDER, SolowParams, solve_series, validity_window
from .special import EvalPolicy, gamma, mittag_leffler

OUTPUT_DIR_ENV = "SOLOWFRAC_OUTPUT_DIR"
SWEEPABLE = ("p", "q", "mu", "alpha")
FLAG = {"p": "--p", "q": "--q", "mu": "--mu", "alpha": "--alpha", "k0": "--k0"}


class UsageError(ValueError):
    pass


def fmt(x) -> str:
    """Shortest round-trip text for a number; blank for None."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return repr(float(x))


def _json_value(x):
    if x is None or isinstance(x, str):
        return x
    x = float(x)
    return x if math.isfinite(x) else repr(x)


# -- validation -----------------------------------------------------------

def _params_from(args, **override) -> SolowParams:
    values = {name: getattr(args, name) for name in FLAG}
    values.update(override)
    for name, value in values.items():
        if name == "alpha":
            if not 0.0 < value <= 1.0:
                raise UsageError(f"{FLAG[name]} must lie in (0, 1], got {value!r}")
        elif not (value > 0 and math.isfinite(value)):
            raise UsageError(f"{FLAG[name]} must be a finite number > 0, got {value!r}")
    return SolowParams(**values)


def _check_grid(args):
    if not (args.t_end > 0 and math.isfinite(args.t_end)):
        raise UsageError(f"--t-end must be a finite number > 0, got {args.t_end!r}")
    if args.steps < 2:
        raise UsageError(f"--steps must be >= 2, got {args.steps!r}")
    if not 1 <= args.order <= MAX_ORDER:
        raise UsageError(f"--order must lie in [1, {MAX_ORDER}], got {args.order!r}")
    if not args.tol > 0:
        raise UsageError(f"--tol must be > 0, got {args.tol!r}")


def _grid(args) -> np.ndarray:
    return np.linspace(0.0, args.t_end, args.steps)


# -- output ---------------------------------------------------------------

def _resolve_output(path):
    if path is None or path == "-":
        return None
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    return path


def render_table(columns, rows, fmt_name, meta=None) -> str:
    meta = meta or {}
    if fmt_name == "json":
        doc = {"columns": list(columns),
               "records": [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows]}
        doc.update({k: _json_value(v) for k, v in meta.items()})
        return json.dumps(doc, indent=1, allow_nan=False) + "\n"
    lines = [",".join(columns)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    lines.extend(f"# {k}={fmt(v)}" for k, v in meta.items())
    return "\n".join(lines) + "\n"


def write_output(text: str, path) -> None:
    target = _resolve_output(path)
    if target is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(target))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".solowfrac-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- subcommands ----------------------------------------------------------

def cmd_solve(args) -> int:
    _check_grid(args)
    params = _params_from(args)
    sol = solve_series(params, args.order)
    t = _grid(args)
    k = sol(t)
    window = validity_window(sol, args.tol) if _window_defined(sol) else None
    meta = {"validity_t_max": window.t_max if window else "undefined"}
    if args.dump_series:
        print(sol.combined.render(), file=sys.stderr)
    write_output(render_table(("t", "k_series"), zip(t, k), args.format, meta), args.output)
    return 0


def _window_defined(sol):
    nonzero = np.count_nonzero(np.abs(sol.coefficients()) > 1e-14 * sol.params.k0)
    return nonzero >= 3 or nonzero == 1


def cmd_compare(args) -> int:
    _check_grid(args)
    params = _params_from(args)
    sol = solve_series(params, args.order)
    t = _grid(args)
    k_series = sol(t)
    dt = args.t_end / (args.steps - 1)
    h_max = args.h if args.h is not None else (1e-3 if params.alpha == 1.0 else 5e-4)
    if not h_max > 0:
        raise UsageError(f"--h must be > 0, got {args.h!r}")
    per_cell = max(1, math.ceil(dt / h_max - 1e-9))
    traj = solve_oracle(params, args.t_end, dt / per_cell)
    if len(traj.k) == (args.steps - 1) * per_cell + 1:
        k_oracle = traj.k[::per_cell]
    else:
        k_oracle = traj.at(t)
    rows = []
    for ti, ks, ko in zip(t, k_series, k_oracle):
        abs_err = abs(ks - ko)
        rel_err = abs_err / abs(ko) if abs(ko) >= 1e-14 else None
        rows.append((ti, ks, ko, abs_err, rel_err))
    meta = {"oracle": traj.method, "oracle_h": traj.h}
    write_output(render_table(("t", "k_series", "k_oracle", "abs_err", "rel_err"),
                              rows, args.format, meta), args.output)
    return 0


def sweep_values(lo, hi, count):
    if count == 1:
        return [float(lo)]
    return np.linspace(lo, hi, count).tolist()


def cmd_sweep(args) -> int:
    _check_grid(args)
    if args.vary not in SWEEPABLE:
        raise UsageError(f"--vary must be one of {', '.join(SWEEPABLE)}, got {args.vary!r}")
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count!r}")
    lo = args.sweep_from if args.sweep_from is not None else getattr(args, args.vary)
    hi = args.sweep_to if args.sweep_to is not None else lo
    if lo > hi:
        raise UsageError(f"--from must not exceed --to ({lo!r} > {hi!r})")
    _params_from(args)
    t = _grid(args)
    rows = []
    for value in sweep_values(lo, hi, args.count):
        try:
            params = _params_from(args, **{args.vary: value})
        except UsageError as exc:
            raise UsageError(f"--from/--to: swept value out of range: {exc}") from None
        k = solve_series(params, args.order)(t)
        rows.extend((args.vary, value, ti, ki) for ti, ki in zip(t, k))
    write_output(render_table(("sweep_param", "sweep_value", "t", "k"), rows, args.format),
                 args.output)
    return 0


def cmd_equilibria(args) -> int:
    params = _params_from(args)
    report = equilibria(params)
    rows = [(pt.k_star, pt.classification) for pt in report.points]
    meta = {}
    if args.format == "json":
        meta["inflexion_marker"] = report.inflexion_marker
    write_output(render_table(("k_star", "classification"), rows, args.format, meta), args.output)
    return 0


def cmd_special(args) -> int:
    if args.function == "gamma":
        value = gamma(args.x)
    else:
        if args.alpha is None or args.z is None:
            raise UsageError("special ml requires --alpha and --z")
        value = mittag_leffler(args.alpha, args.z, EvalPolicy(args.tol, args.max_terms))
    print(f"{value:.15g}")
    return 0


# -- parser ---------------------------------------------------------------

def _model_flags(parser):
    g = parser.add_argument_group("model parameters")
    g.add_argument("--p", type=float, default=1.0)
    g.add_argument("--q", type=float, default=1.0)
    g.add_argument("--mu", type=float, default=0.5)
    g.add_argument("--alpha", type=float, default=1.0)
    g.add_argument("--k0", type=float, default=0.5)


def _run_flags(parser, grid=True):
    if grid:
        parser.add_argument("--order", type=int, default=10, help="series order N")
        parser.add_argument("--t-end", dest="t_end", type=float, default=1.0)
        parser.add_argument("--steps", type=int, default=101)
        parser.add_argument("--tol", type=float, default=1e-6,
                            help="validity-window tolerance")
    parser.add_argument("--output", default=None, help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solowfrac", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="sample the series solution on a uniform grid")
    _model_flags(p)
    _run_flags(p)
    p.add_argument("--dump-series", action="store_true",
                   help="print the combined series to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="series against the numerical oracle")
    _model_flags(p)
    _run_flags(p)
    p.add_argument("--h", type=float, default=None, help="largest oracle step")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="family of series curves over one parameter")
    _model_flags(p)
    _run_flags(p)
    p.add_argument("--vary", required=True, choices=SWEEPABLE)
    p.add_argument("--from", dest="sweep_from", type=float, default=None)
    p.add_argument("--to", dest="sweep_to", type=float, default=None)
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("equilibria", help="equilibria and their stability")
    _model_flags(p)
    _run_flags(p, grid=False)
    p.set_defaults(func=cmd_equilibria)

    p = sub.add_parser("special", help="evaluate Gamma or Mittag-Leffler")
    fsub = p.add_subparsers(dest="function", required=True)
    g = fsub.add_parser("gamma")
    g.add_argument("x", type=float)
    g.set_defaults(func=cmd_special)
    m = fsub.add_parser("ml")
    m.add_argument("--alpha", type=float, default=None)
    m.add_argument("--z", type=float, default=None)
    m.add_argument("--tol", type=float, default=1e-16)
    m.add_argument("--max-terms", dest="max_terms", type=int, default=200)
    m.set_defaults(func=cmd_special)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"solowfrac: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"solowfrac: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
