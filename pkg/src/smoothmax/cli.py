"""Command-line surface: summaries, max-convolution, MCSP, service
curves, amoeba data, and the experiment harness.

Exit codes: 0 on success, 1 on usage errors, 2 on numerical
certification failures.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from . import applications, experiments, maxconv, tropical
from .vectors import realvec, summarize


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def read_vector(path: str) -> List[float]:
    """One number per line or comma-separated; '#' starts a comment."""
    values: List[float] = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            for tok in line.replace(",", " ").split():
                values.append(float(tok))
    if not values:
        raise _UsageError(f"no numbers found in {path}")
    return values


def write_vector(path: str, values: Sequence[float]) -> None:
    with open(path, "w") as fh:
        for x in values:
            fh.write(f"{x!r}\n")


def _build_parser() -> _Parser:
    p = _Parser(prog="smoothmax")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("summarize", help="exact summary of a vector file")
    sp.add_argument("vector")

    mp = sub.add_parser("maxconv", help="max-plus convolution of two vectors")
    mp.add_argument("a")
    mp.add_argument("b")
    mp.add_argument("--algorithm", choices=["L", "D"], default="L")
    mp.add_argument("--t", type=float, default=None)
    mp.add_argument("--alpha", type=float, default=None)
    mp.add_argument("--exact", action="store_true",
                    help="use the exact big-integer backend")
    mp.add_argument("--certify", action="store_true",
                    help="fail (exit 2) unless the output is certified")
    mp.add_argument("--min", action="store_true",
                    help="compute the min-plus convolution instead")
    mp.add_argument("--json", action="store_true")

    cp = sub.add_parser("mcsp", help="maximum consecutive subsums")
    cp.add_argument("vector")
    cp.add_argument("--t", type=float, default=None)
    cp.add_argument("--no-full-sum", action="store_true")
    cp.add_argument("--json", action="store_true")

    sc = sub.add_parser("servicecurve", help="service-curve bounds")
    sc.add_argument("--r", required=True, help="input rate CSV (T,value)")
    sc.add_argument("--beta", required=True, help="minimum service curve CSV")
    sc.add_argument("--gamma", required=True, help="maximum service curve CSV")
    sc.add_argument("--out", required=True, help="output CSV path")
    sc.add_argument("--t-eff", type=float, default=None)
    sc.add_argument("--alpha", type=float, default=1.01)

    am = sub.add_parser("amoeba", help="amoeba boundary and tentacle data")
    am.add_argument("vector")
    am.add_argument("--umin", type=float, default=-1.0)
    am.add_argument("--umax", type=float, default=5.0)
    am.add_argument("--samples", type=int, default=200)
    am.add_argument("--out", default=None, help="boundary CSV (default stdout)")
    am.add_argument("--lines-out", default=None, help="tentacle-line CSV")

    ex = sub.add_parser("experiment", help="run a heatmap experiment")
    ex.add_argument("kind", choices=["integer", "uniform", "cluster"])
    ex.add_argument("--M", type=int, default=50)
    ex.add_argument("--nmax", type=int, default=50)
    ex.add_argument("--reps", type=int, default=10)
    ex.add_argument("--seed", type=int, default=0)
    ex.add_argument("--delta-rule", choices=list(experiments.DELTA_RULES),
                    default="one")
    ex.add_argument("--out", default=None, help="CSV path (default stdout)")
    return p


def _cmd_summarize(args) -> int:
    s = summarize(realvec(read_vector(args.vector)))
    payload = {
        "max": s.max,
        "min": s.min,
        "distinct_count": s.distinct_count,
        "distinct_desc": list(s.distinct_desc),
        "multiplicities": {repr(k): v for k, v in sorted(
            s.multiplicities.items(), reverse=True)},
        "gaps": list(s.gaps),
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_maxconv(args) -> int:
    a = read_vector(args.a)
    b = read_vector(args.b)
    backend = maxconv.Backend.EXACT_INT if args.exact else None
    if args.min:
        res = maxconv.minconv(a, b, algorithm=args.algorithm,
                              t_star=args.t, alpha_star=args.alpha,
                              backend=backend)
    elif args.algorithm == "L":
        res = maxconv.maxconv_L(a, b, t_star=args.t, backend=backend)
    else:
        res = maxconv.maxconv_D(a, b, t_star=args.t, alpha_star=args.alpha,
                                backend=backend)
    if args.certify and not res.certified:
        print("error: result is not certified", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({
            "method": args.algorithm,
            "value": res.coefficients,
            "t": res.plan.t_star,
            "alpha": res.plan.alpha_star,
            "certified": res.certified,
            "error_bound": res.plan.fft_error_bound,
        }))
    else:
        print(" ".join(str(c) for c in res.coefficients))
    return 0


def _cmd_mcsp(args) -> int:
    v = read_vector(args.vector)
    out = applications.mcsp(v, include_full_sum=not args.no_full_sum, t=args.t)
    if args.json:
        print(json.dumps({"max_consecutive_subsums": out}))
    else:
        print(" ".join(str(c) for c in out))
    return 0


def _cmd_servicecurve(args) -> int:
    r = applications.CurveGrid.from_csv(args.r)
    beta = applications.CurveGrid.from_csv(args.beta)
    gamma = applications.CurveGrid.from_csv(args.gamma)
    lower, upper = applications.service_bounds(
        r, beta, gamma, t_eff=args.t_eff, alpha=args.alpha
    )
    with open(args.out, "w") as fh:
        fh.write("T,lower,upper\n")
        for t, lo, hi in zip(lower.times, lower.values, upper.values):
            fh.write(f"{t!r},{lo!r},{hi!r}\n")
    return 0


def _cmd_amoeba(args) -> int:
    v = realvec(read_vector(args.vector))
    points = tropical.amoeba_upper_boundary(v, args.umin, args.umax, args.samples)
    rows = ["u,s"] + [f"{u!r},{s!r}" for u, s in points]
    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.lines_out:
        lines = tropical.tentacle_lines(v)
        with open(args.lines_out, "w") as fh:
            fh.write("kind,slope,intercept,label\n")
            for ln in lines:
                fh.write(f"{ln.kind},{ln.slope!r},{ln.intercept!r},{ln.label}\n")
    return 0


def _cmd_experiment(args) -> int:
    cfg = experiments.ExperimentConfig(
        kind=args.kind, M=args.M, n_max=args.nmax, reps=args.reps,
        delta_rule=args.delta_rule, seed=args.seed,
    )
    table = experiments.run_experiment(cfg)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)
    return 0


_COMMANDS = {
    "summarize": _cmd_summarize,
    "maxconv": _cmd_maxconv,
    "mcsp": _cmd_mcsp,
    "servicecurve": _cmd_servicecurve,
    "amoeba": _cmd_amoeba,
    "experiment": _cmd_experiment,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (maxconv.CertificationError, ArithmeticError) as exc:
        print(f"numerical certification failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
