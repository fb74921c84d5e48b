"""Command-line interface.

Exit status: 0 on success, 1 on a domain or unsupported-parameter error (one
line ``error: <code>: <message>`` on stderr), 2 on a usage error.

Error codes: domain-error, unsupported-parameter, degenerate-configuration,
resource-limit, search-failure, io-error.
"""
import argparse
import sys

from . import acceptance
from .closed_forms import (
    BallSpec,
    EllipseSpec,
    EllipsoidSpec,
    ball_capacity,
    ellipse_log_capacity,
    ellipse_newtonian_capacity,
    ellipsoid_cap1,
    ellipsoid_cap2,
    interval_capacity,
    regular_kpoint_capacity,
)
from .errors import RieszError
from .finite_capacity import DEFAULT_MAX_POINTS, Configuration, finite_capacity
from .region_map import emit_grid
from .serialize import dumps
from .shape_search import SearchProblem, capacity_ratio, optimize_ratio
from .triangle import TriangleShape, triangle_capacity


def _build_parser():
    parser = argparse.ArgumentParser(prog="rieszcap", description="Riesz capacities of finite sets, p < 0.")
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    cap = sub.add_parser("capacity", help="capacity and equilibrium measures of a point file")
    cap.add_argument("--points", required=True, help="point file: one point per line, '#' comments")
    cap.add_argument("--p", type=float, required=True)
    cap.add_argument("--no-reduce", action="store_true", help="scan all supports even when p < -2")
    cap.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)

    tri = sub.add_parser("triangle", help="closed-form capacity of a three-point set")
    for side in ("a", "b", "c"):
        tri.add_argument(f"--{side}", type=float, required=True)
    tri.add_argument("--p", type=float, required=True)

    rat = sub.add_parser("ratio", help="cap_q / cap_p of a point file")
    rat.add_argument("--points", required=True)
    rat.add_argument("--p", type=float, required=True)
    rat.add_argument("--q", type=float, required=True)

    opt = sub.add_parser("optimize", help="search k-point configurations maximizing cap_q / cap_p")
    opt.add_argument("--n", type=int, required=True)
    opt.add_argument("--k", type=int, required=True)
    opt.add_argument("--p", type=float, required=True)
    opt.add_argument("--q", type=float, required=True)
    opt.add_argument("--seed", type=int, required=True)
    opt.add_argument("--restarts", type=int, default=20)
    opt.add_argument("--iters", type=int, default=800)
    opt.add_argument("--points-out", help="also write the best configuration as a point file")

    reg = sub.add_parser("region-map", help="CSV of candidate maximizers over a (p, q) grid")
    reg.add_argument("--pmin", type=float, required=True)
    reg.add_argument("--pmax", type=float, required=True)
    reg.add_argument("--qmin", type=float, required=True)
    reg.add_argument("--qmax", type=float, required=True)
    reg.add_argument("--steps", type=int, required=True)
    reg.add_argument("--n", type=int, required=True)

    cf = sub.add_parser("closed-form", help="evaluate a closed-form capacity")
    cf.add_argument("shape", choices=["kpoint", "interval", "ball", "ellipse", "ellipsoid"])
    cf.add_argument("--p", type=float)
    cf.add_argument("--k", type=int)
    cf.add_argument("--d", type=float, default=1.0, help="diameter (kpoint)")
    cf.add_argument("--length", type=float, default=1.0)
    cf.add_argument("--n", type=int)
    cf.add_argument("--radius", type=float, default=1.0)
    cf.add_argument("--b", type=float)

    ver = sub.add_parser("verify", help="run acceptance suites")
    ver.add_argument("--suite", action="append", choices=sorted(acceptance.SUITES),
                     help="suite to run (repeatable); default all")
    return parser


def _closed_form(args, parser):
    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            parser.error(f"closed-form {args.shape} needs --{' --'.join(missing)}")

    if args.shape == "kpoint":
        need("k", "p")
        return {"capacity": regular_kpoint_capacity(args.k, args.d, args.p)}
    if args.shape == "interval":
        need("p")
        return {"capacity": interval_capacity(args.length, args.p)}
    if args.shape == "ball":
        need("n", "p")
        return {"capacity": ball_capacity(BallSpec(args.n, args.radius), args.p)}
    need("b")
    if args.shape == "ellipse":
        spec = EllipseSpec(args.b)
        return {"log_capacity": ellipse_log_capacity(spec), "newtonian_capacity": ellipse_newtonian_capacity(spec)}
    spec = EllipsoidSpec(args.b)
    return {"cap1": ellipsoid_cap1(spec), "cap2": ellipsoid_cap2(spec)}


def _dispatch(args, parser, out):
    cmd = args.command
    if cmd == "capacity":
        res = finite_capacity(Configuration.read(args.points), args.p,
                              reduce=not args.no_reduce, max_points=args.max_points)
        out.write(dumps(res.to_dict()) + "\n")
    elif cmd == "triangle":
        shape = TriangleShape(args.a, args.b, args.c)
        cap, eq = triangle_capacity(shape, args.p)
        support = ["endpoint_c_1", "endpoint_c_2", "apex"]
        out.write(dumps({
            "capacity": cap,
            "energy": eq.lagrange,
            "p": args.p,
            "weights": list(eq.weights),
            "support": [s for s, w in zip(support, eq.weights) if w > 0],
        }) + "\n")
    elif cmd == "ratio":
        cfg = Configuration.read(args.points)
        out.write(dumps({"p": args.p, "q": args.q, "ratio": capacity_ratio(cfg, args.p, args.q)}) + "\n")
    elif cmd == "optimize":
        problem = SearchProblem(args.n, args.k, args.p, args.q, restarts=args.restarts,
                                iterations=args.iters, seed=args.seed)
        res = optimize_ratio(problem)
        if args.points_out:
            res.configuration.write(args.points_out, header=f"cap_q/cap_p = {res.ratio!r}")
        payload = {"n": args.n, "k": args.k, "p": args.p, "q": args.q, "seed": args.seed}
        payload.update(res.to_dict())
        out.write(dumps(payload) + "\n")
    elif cmd == "region-map":
        emit_grid((args.pmin, args.pmax), (args.qmin, args.qmax), args.steps, args.n, out=out)
    elif cmd == "closed-form":
        out.write(dumps(_closed_form(args, parser)) + "\n")
    elif cmd == "verify":
        checks = acceptance.run(args.suite)
        for check in checks:
            out.write(check.line() + "\n")
        failed = sum(not c.passed for c in checks)
        out.write(f"{len(checks) - failed}/{len(checks)} suites passed\n")
        return 0 if failed == 0 else 1
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.output:
            with open(args.output, "w", newline="") as out:
                return _dispatch(args, parser, out)
        return _dispatch(args, parser, sys.stdout)
    except RieszError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io-error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
