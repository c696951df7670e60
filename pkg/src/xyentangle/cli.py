"""Command-line interface.

    xyentangle point      --j 1 --t 1
    xyentangle threshold  --j 1 --k 0.5
    xyentangle sweep      --axis bz 0 3 31 --j 1 --k 1 --quantity threshold
    xyentangle figure     --name fig3b --theta 90 -o fig3b.csv
    xyentangle selftest

Exit status: 0 success, 1 numerical failure (or a failed selftest), 2 usage
error. Parameters can also come from ``--config FILE`` (``key = value`` per
line, ``#`` comments); explicit flags win over the file.
"""
import argparse
import sys
import time

from . import acceptance, kernels
from .entangle import Path, concurrence, concurrence_analytic_bz, concurrence_numeric, \
    concurrence_t0_closed
from .errors import InvalidInputError, NumericalFailure, XYEntangleError
from .explore import FIGURES, SweepGrid, figure_preset, run_sweep, threshold_temperature
from .spinmodel import ModelParams
from .tables import fmt, write_rows
from .thermal import gibbs_state, ground_state

PARAM_FLAGS = ("j", "k", "gamma", "gamma_prime", "bx", "by", "bz", "bmag", "theta", "phi",
               "t")
EXTRA_KEYS = ("t_max", "tol")


class UsageError(Exception):
    pass


def read_config(path):
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in PARAM_FLAGS + EXTRA_KEYS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        try:
            out[key] = float(val)
        except ValueError:
            raise UsageError(f"{path}:{n}: {key} must be a number") from None
    return out


def _merge_config(args):
    if getattr(args, "config", None):
        for key, val in read_config(args.config).items():
            if getattr(args, key, None) is None:
                setattr(args, key, val)


def params_from_args(args, need_t=False):
    _merge_config(args)
    cart = any(getattr(args, f) is not None for f in ("bx", "by", "bz"))
    polar = any(getattr(args, f) is not None for f in ("bmag", "theta", "phi"))
    if cart and polar:
        raise UsageError("give the field either as --bx/--by/--bz or as --bmag/--theta, not both")
    if need_t and args.t is None:
        raise UsageError("--t is required")

    def val(name):
        v = getattr(args, name)
        return 0.0 if v is None else v

    common = dict(J=val("j"), K=val("k"), gamma=val("gamma"),
                  gamma_prime=val("gamma_prime"), T=val("t"))
    try:
        if polar:
            return ModelParams.polar(val("bmag"), val("theta"), val("phi"), **common)
        return ModelParams(Bx=val("bx"), By=val("by"), Bz=val("bz"), **common)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None


def _add_param_flags(p, with_t=True):
    g = p.add_argument_group("model parameters")
    g.add_argument("--j", type=float, help="exchange coupling J")
    g.add_argument("--k", type=float, help="cross coupling K")
    g.add_argument("--gamma", type=float, help="anisotropy gamma in [-1, 1]")
    g.add_argument("--gamma-prime", dest="gamma_prime", type=float,
                   help="cross anisotropy gamma' in [-1, 1]")
    g.add_argument("--bx", type=float)
    g.add_argument("--by", type=float)
    g.add_argument("--bz", type=float, help="field along z (B_perp)")
    g.add_argument("--bmag", type=float, help="field magnitude |B| (polar form)")
    g.add_argument("--theta", type=float, help="field angle from z in degrees (polar form)")
    g.add_argument("--phi", type=float, help="in-plane field angle in degrees (polar form)")
    if with_t:
        g.add_argument("--t", type=float, help="temperature (k_B = 1)")
    p.add_argument("--config", help="key = value parameter file")


def _add_output_flags(p):
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: CPU count, capped by XYENTANGLE_WORKERS)")


def build_parser():
    parser = argparse.ArgumentParser(prog="xyentangle",
                                     description="Thermal entanglement of two-qubit XY models")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="concurrence at one parameter point")
    _add_param_flags(p)
    p.add_argument("--path", choices=[x.value for x in Path],
                   help="force an evaluation route instead of the automatic choice")

    p = sub.add_parser("threshold", help="threshold temperature T*")
    _add_param_flags(p, with_t=False)
    p.add_argument("--t-max", dest="t_max", type=float)
    p.add_argument("--tol", type=float)
    p.set_defaults(t=None)

    p = sub.add_parser("sweep", help="evaluate a parameter grid and write a table")
    _add_param_flags(p)
    p.add_argument("--axis", nargs=4, action="append", required=True,
                   metavar=("NAME", "START", "STOP", "COUNT"),
                   help="swept axis; repeat for a product grid (last varies fastest)")
    p.add_argument("--quantity", choices=("concurrence", "threshold"), default="concurrence")
    p.add_argument("--t-max", dest="t_max", type=float)
    p.add_argument("--tol", type=float)
    _add_output_flags(p)

    p = sub.add_parser("figure", help="write the table for a figure preset")
    p.add_argument("--name", required=True, choices=FIGURES)
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--k", type=float, nargs="+")
    p.add_argument("--theta", type=float, nargs="+")
    p.add_argument("--b-par", dest="b_par", type=float, nargs="+")
    p.add_argument("--points", type=int)
    _add_output_flags(p)

    sub.add_parser("selftest", help="run the acceptance suite")
    return parser


def _axis(spec):
    name, start, stop, count = spec
    try:
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise UsageError(f"malformed axis {' '.join(spec)}: need NAME START STOP COUNT") from None
    if count < 1:
        raise UsageError(f"axis {name}: COUNT must be >= 1")
    if count == 1:
        return name, (start,)
    step = (stop - start) / (count - 1)
    return name, tuple(start + i * step if i < count - 1 else stop for i in range(count))


def _emit_table(rows, grid, args):
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                write_rows(rows, grid, fh, args.format)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
    else:
        write_rows(rows, grid, sys.stdout, args.format)
    bad = sum(not r.ok for r in rows)
    if bad:
        print(f"warning: {bad} of {len(rows)} points failed", file=sys.stderr)


def cmd_point(args):
    p = params_from_args(args, need_t=True)
    if args.path is None:
        r = concurrence(p)
    elif args.path == Path.ANALYTIC_BZ.value:
        r = concurrence_analytic_bz(p)
    elif args.path == Path.CLOSED_FORM_T0.value:
        r = concurrence_t0_closed(p)
    else:
        r = concurrence_numeric(gibbs_state(p) if p.T > 0 else ground_state(p))
    roots = ",".join(fmt(w) for w in r.roots) if r.roots else "-"
    print(f"concurrence={fmt(r.value)} path={r.path.value} roots={roots}")
    return 0


def cmd_threshold(args):
    p = params_from_args(args)
    t_max = args.t_max if args.t_max is not None else 50.0
    tol = args.tol if args.tol is not None else 1e-9
    try:
        r = threshold_temperature(p, t_max=t_max, tol=tol)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    t = "none" if r.t_star is None else fmt(r.t_star)
    print(f"t_star={t} bracket={fmt(r.bracket[0])},{fmt(r.bracket[1])} "
          f"evaluations={r.evaluations} path={r.path or '-'}"
          + (" saturated=1" if r.saturated else ""))
    return 0


def cmd_sweep(args):
    base = params_from_args(args)
    axes = tuple(_axis(a) for a in args.axis)
    kw = {}
    if args.t_max is not None:
        kw["t_max"] = args.t_max
    if args.tol is not None:
        kw["tol"] = args.tol
    try:
        grid = SweepGrid(axes, base, args.quantity, **kw)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    _emit_table(run_sweep(grid, workers=args.workers), grid, args)
    return 0


def cmd_figure(args):
    try:
        grid = figure_preset(args.name, j=args.j, k=args.k, theta=args.theta,
                             b_par=args.b_par, points=args.points)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    _emit_table(run_sweep(grid, workers=args.workers), grid, args)
    return 0


def cmd_selftest(args):
    print(f"backend: {kernels.BACKEND}")
    t0 = time.perf_counter()
    outcomes = acceptance.run_all(print)
    total = time.perf_counter() - t0
    ok = all(o.passed for o in outcomes)
    line = acceptance.Outcome(10, "selftest", ok and total < 30.0,
                              f"{sum(o.passed for o in outcomes)}/{len(outcomes)} criteria "
                              f"passed, total runtime {total:.1f} s (limit 30 s)", total)
    print(line.line())
    return 0 if line.passed else 1


COMMANDS = {"point": cmd_point, "threshold": cmd_threshold, "sweep": cmd_sweep,
            "figure": cmd_figure, "selftest": cmd_selftest}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"xyentangle: error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"xyentangle: numerical failure: {exc}", file=sys.stderr)
        return 1
    except XYEntangleError as exc:
        print(f"xyentangle: error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1


if __name__ == "__main__":
    sys.exit(main())
