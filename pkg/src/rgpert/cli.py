"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 usage error.
"""

import argparse
import json
import math
import sys

from .algebra import Rat, GaussianRational
from .errors import RgpertError
from .potential import parse_potential
from .perturbation import expand
from .rg import derive_rg, to_polar, limit_cycle, renormalization_constants
from .verify import run_identity_suite
from . import mathieu as mathieu_mod
from . import numeric
from .registry import EXAMPLES, get_example


def _add_potential_args(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--example", choices=sorted(EXAMPLES),
                   help="built-in oscillator name")
    g.add_argument("--potential", help="potential in the expression DSL")
    p.add_argument("--params", default="",
                   help="comma-separated symbolic parameter names")
    p.add_argument("--bind", action="append", default=[],
                   metavar="NAME=VALUE",
                   help="bind a parameter to a rational value")
    p.add_argument("--order", type=int, default=3, metavar="K",
                   help="truncation order in eps (default 3)")
    p.add_argument("--format", default="text",
                   choices=["text", "json", "csv", "table"],
                   help="output format")


def _resolve_potential(args, parser):
    if args.example:
        spec = get_example(args.example)
        V = spec.potential()
    elif args.potential:
        params = tuple(s for s in args.params.split(",") if s)
        V = parse_potential(args.potential, params)
    else:
        parser.error("one of --example or --potential is required")
    bindings = {}
    for item in args.bind:
        name, _, value = item.partition("=")
        if not _ or not name:
            parser.error(f"--bind expects NAME=VALUE, got {item!r}")
        bindings[name] = GaussianRational(Rat(value))
    if bindings:
        V = V.bind(bindings)
    return V


def _print_series(pairs, fmt):
    if fmt == "json":
        print(json.dumps({k: v.to_json() for k, v in pairs}, indent=2))
    else:
        for k, v in pairs:
            print(f"{k} = {v}")


def cmd_expand(args, parser):
    V = _resolve_potential(args, parser)
    Y = expand(V, args.order)
    harmonics = Y.harmonics()
    if args.format == "json":
        data = {"order": Y.cap,
                "harmonics": harmonics,
                "table": {str(n): {str(k): Y.table.entry(n, k).to_json()
                                   for k in range(Y.cap + 1)
                                   if not Y.table.entry(n, k).is_zero()}
                          for n in harmonics}}
        print(json.dumps(data, indent=2))
        return 0
    # table layout: rows = eps order, columns = harmonic
    for k in range(Y.cap + 1):
        cells = []
        for n in harmonics:
            f = Y.table.entry(n, k)
            if not f.is_zero():
                cells.append(f"f[{n},{k}] = {f}")
        if cells:
            print(f"eps^{k}:")
            for cell in cells:
                print("  " + cell)
    return 0


def cmd_rg(args, parser):
    V = _resolve_potential(args, parser)
    sysc = derive_rg(expand(V, args.order))
    _print_series([("dAr/dt", sysc.rhs_A),
                   ("dBr/dt", sysc.rhs_B)], args.format)
    return 0


def cmd_polar(args, parser):
    V = _resolve_potential(args, parser)
    pol = to_polar(derive_rg(expand(V, args.order)))
    _print_series([("d log R/dt", pol.dlogR_dt),
                   ("d theta/dt", pol.dtheta_dt)], args.format)
    if pol.theta_free() and args.format != "json":
        print("# phase-free radial equation")
    return 0


def cmd_limit_cycle(args, parser):
    V = _resolve_potential(args, parser)
    pol = to_polar(derive_rg(expand(V, args.order)))
    R_c, dtheta_c = limit_cycle(pol)
    _print_series([("R_c", R_c),
                   ("2*R_c", R_c * GaussianRational(2)),
                   ("(d theta/dt)_c", dtheta_c)], args.format)
    return 0


def cmd_verify(args, parser):
    V = _resolve_potential(args, parser)
    Y = expand(V, args.order)
    reports = run_identity_suite(Y, derive_rg(Y))
    if args.format == "json":
        print(json.dumps([{"name": r.name, "cap": r.cap,
                           "passed": r.passed} for r in reports], indent=2))
    else:
        for r in reports:
            print(r)
    return 0 if all(r.passed for r in reports) else 1


def cmd_mathieu(args, parser):
    if args.crosscheck:
        opts = {}
        for part in args.crosscheck.split(","):
            key, _, value = part.partition("=")
            opts[key.strip()] = value
        try:
            eps_list = [float(x) for x in opts["eps"].split(":")]
            N = int(opts.get("N", 12))
        except (KeyError, ValueError):
            parser.error("--crosscheck expects eps=v1:v2:...,N=n")
        _, _, branches = mathieu_mod.analyze(args.order)
        if args.branch:
            branches = [b for b in branches if b.label == args.branch]
        rows = mathieu_mod.boundary_crosscheck(branches, eps_list, N)
        print("eps,branch,a_series,a_determinant,deviation")
        for r in rows:
            print(f"{r.eps!r},{r.branch},{r.a_series!r},"
                  f"{r.a_determinant!r},{r.deviation!r}")
        return 0
    _, omega2, branches = mathieu_mod.analyze(args.order)
    if args.branch:
        branches = [b for b in branches if b.label == args.branch]
    if args.format == "json":
        print(json.dumps(
            {"omega2": omega2.to_json(),
             "branches": [{"label": b.label,
                           "a": [str(c) for c in b.a_coeffs]}
                          for b in branches]}, indent=2))
    else:
        print(f"omega^2 = {omega2}")
        for b in branches:
            print(f"a{b.label} = {b.a_series_str()}")
    return 0


def _common_sim_args(p):
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--tmax", type=float, default=25 * 2 * math.pi)
    p.add_argument("--dt", type=float, default=numeric.DEFAULT_STEP)
    p.add_argument("--rg-order", type=int, default=1)
    p.add_argument("--expansion-order", type=int, default=1)
    p.add_argument("--R0", type=float)
    p.add_argument("--theta0", type=float)
    p.add_argument("--y0", type=float)
    p.add_argument("--dy0", type=float)
    p.add_argument("--out", help="CSV output path (default stdout)")


def _emit_rows(args, header, rows):
    if args.out:
        numeric.write_csv(args.out, rows, header)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        print(header)
        for row in rows:
            print(",".join(repr(float(x)) for x in row))


def cmd_simulate(args, parser):
    V = _resolve_potential(args, parser)
    if args.y0 is not None and args.dy0 is not None:
        traj = numeric.integrate_ode(V, args.y0, args.dy0, args.eps,
                                     args.tmax, args.dt)
    elif args.R0 is not None and args.theta0 is not None:
        pol = to_polar(derive_rg(expand(V, args.order)))
        traj = numeric.integrate_rg(pol, args.eps, args.rg_order,
                                    args.tmax, args.dt,
                                    R0=args.R0, theta0=args.theta0)
    else:
        parser.error("simulate needs --y0/--dy0 (direct) or "
                     "--R0/--theta0 (amplitude flow)")
    import numpy as np
    rows = np.column_stack([traj.t, traj.values])
    _emit_rows(args, "t," + ",".join(traj.columns), rows)
    if traj.truncated:
        print("# trajectory diverged and was truncated", file=sys.stderr)
    return 0


def cmd_compare(args, parser):
    V = _resolve_potential(args, parser)
    if args.R0 is None or args.theta0 is None:
        parser.error("compare needs --R0 and --theta0")
    Y = expand(V, args.order)
    sysc = derive_rg(Y)
    pol = to_polar(sysc)
    amp = numeric.integrate_rg(pol, args.eps, args.rg_order, args.tmax,
                               args.dt, R0=args.R0, theta0=args.theta0)
    y_rg = numeric.evaluate_expansion(pol, amp, args.eps,
                                      args.expansion_order)
    if args.y0 is not None and args.dy0 is not None:
        y0, dy0 = args.y0, args.dy0
    else:
        Ar0 = args.R0 * complex(math.cos(args.theta0),
                                math.sin(args.theta0))
        y0, dy0 = numeric.expansion_initial_conditions(
            sysc, args.eps, args.rg_order, args.expansion_order,
            Ar0=Ar0, Br0=Ar0.conjugate())
    ode = numeric.integrate_ode(V, y0, dy0, args.eps, args.tmax, args.dt)
    metrics, rows = numeric.compare(ode, y_rg)
    _emit_rows(args, "t,y_numeric,y_rg,diff", rows)
    print(f"# max_abs_diff = {metrics['max_abs_diff']!r}", file=sys.stderr)
    print(f"# rms_diff = {metrics['rms_diff']!r}", file=sys.stderr)
    return 0


def cmd_examples(args, parser):
    for name in sorted(EXAMPLES):
        spec = EXAMPLES[name]
        print(f"{name}: {spec.dsl}"
              + (f"  (params: {','.join(spec.params)})" if spec.params else "")
              + f"  -- {spec.note}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rgpert",
        description="Exact renormalization-group perturbation theory "
                    "for weakly nonlinear oscillators y'' + y = eps*V.")
    sub = parser.add_subparsers(dest="command", required=True)

    handlers = {}

    def add(name, fn, sim=False, pot=True):
        p = sub.add_parser(name)
        if pot:
            _add_potential_args(p)
        if sim:
            _common_sim_args(p)
        handlers[name] = fn
        return p

    add("expand", cmd_expand)
    add("rg", cmd_rg)
    add("polar", cmd_polar)
    add("limit-cycle", cmd_limit_cycle)
    add("verify", cmd_verify)
    pm = sub.add_parser("mathieu")
    pm.add_argument("--order", type=int, default=5)
    pm.add_argument("--branch", choices=["+", "-"])
    pm.add_argument("--crosscheck", metavar="eps=v1:v2,N=n")
    pm.add_argument("--format", default="text", choices=["text", "json"])
    handlers["mathieu"] = cmd_mathieu
    add("simulate", cmd_simulate, sim=True)
    add("compare", cmd_compare, sim=True)
    pe = sub.add_parser("examples")
    handlers["examples"] = cmd_examples
    return parser, handlers


def main(argv=None):
    parser, handlers = build_parser()
    args = parser.parse_args(argv)
    try:
        return handlers[args.command](args, parser)
    except RgpertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
