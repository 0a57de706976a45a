"""Command-line front end.

Exit codes: 0 success, 1 algorithmic failure (Fail, Exhausted, failed
property), 2 usage error, 3 resource limit (oracle search too large).
Node ids in all output are 1-based.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from hypersample import bounds, config_model, io, oracle, rejection, suites, switch_chain
from hypersample.core import RngSeed
from hypersample.errors import EmptySpace, InvalidInstance, NonGraphical, SamplingFailure, TooLarge


class _UsageError(Exception):
    pass


def _load(path):
    try:
        return io.read_instance(path)
    except (OSError, ValueError, KeyError, InvalidInstance) as exc:
        raise _UsageError(f"cannot read instance from {path}: {exc}") from exc


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w")


def cmd_sample(args) -> int:
    inst = _load(args.input)
    if args.sampler == "switch":
        if args.steps is None and args.eps_budget is None:
            raise _UsageError("--sampler switch needs --steps or --eps-budget")
        steps = args.steps
        if steps is None:
            steps = switch_chain.step_budget(inst, args.eps_budget, cap=args.max_steps)
    elif args.steps is not None or args.eps_budget is not None:
        raise _UsageError("--steps/--eps-budget only apply to --sampler switch")

    if args.sampler == "config":
        def one(i):
            rng = RngSeed(args.seed, i).generator()
            return config_model.config_sample_hypergraph(inst, rng, args.cap)[0]
    else:
        try:
            if args.sampler == "switch":
                handle = rejection.switch_handle(inst, steps)
            else:
                handle = oracle.exact_uniform_handle(inst, args.limit)
        except (NonGraphical, EmptySpace) as exc:
            print(f"error: kind={type(exc).__name__} reason={exc}", file=sys.stderr)
            return 1

        def one(i):
            rng = RngSeed(args.seed, i).generator()
            return rejection.hypergraph_sampling(inst, handle, rng, args.cap)[0]

    try:
        if args.jobs > 1:
            with ThreadPoolExecutor(args.jobs) as ex:
                results = list(ex.map(one, range(args.count)))
        else:
            results = [one(i) for i in range(args.count)]
    except SamplingFailure as exc:
        print(f"error: kind={type(exc).__name__} attempts={exc.attempts} reason={exc}",
              file=sys.stderr)
        return 1
    except TooLarge as exc:
        print(f"error: kind=TooLarge reason={exc}", file=sys.stderr)
        return 3

    out = _open_out(args.out)
    try:
        if args.format == "json":
            for h in results:
                out.write(io.hypergraph_to_json(h) + "\n")
        else:
            out.write("\n\n".join(io.format_edges(h) for h in results) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_bounds(args) -> int:
    inst = _load(args.input)
    try:
        report = bounds.bounds_report(inst, c0=args.c0, eps=args.eps)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(report.to_json(indent=2))
    return 0


def cmd_verify(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        if name == "thm12":
            res = suites.regular_bound_sweep(max_n=args.max_n or 8, max_d=args.max_d)
        elif name == "lemma31":
            res = suites.collision_constant_sweep(max_n=args.max_n or 6, max_M=3 * args.max_m)
        elif name == "prop42":
            res = suites.balance_sweep(max_n=args.max_n or 5, max_M=3 * args.max_m)
        elif name == "switch":
            res = suites.switch_suite(max_n=args.max_n or 6, max_M=3 * args.max_m)
        elif name == "uniformity":
            res = suites.uniformity_suite(seed=args.seed, draws=args.draws)
        else:
            res = suites.tail_suite(seed=args.seed, runs=args.runs)
        lines = res.lines()
        if args.quiet:
            lines = [ln for ln in lines[:-1] if ln.startswith("FAIL")] + lines[-1:]
        print("\n".join(lines))
        ok &= res.passed
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    inst = _load(args.input)
    try:
        res = oracle.enumerate_bipartite(inst, args.limit, materialize=args.list)
    except TooLarge as exc:
        print(f"error: kind=TooLarge reason={exc}", file=sys.stderr)
        return 3
    print(f"{res.summary()} p_decimal={float(res.p_simple):.12g}")
    if args.list:
        for b in res.state_list:
            print(b.encode())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hypersample",
        description="Sample simple uniform hypergraphs with given degrees by "
                    "rejection sampling over bipartite graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", help="draw hypergraphs")
    s.add_argument("--input", required=True, help="degree-sequence file (JSON or text)")
    s.add_argument("--sampler", choices=["config", "switch", "oracle"], default="config")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--steps", type=int, help="switch steps per bipartite draw")
    s.add_argument("--eps-budget", type=float,
                   help="derive switch steps from the mixing bound at this TV distance")
    s.add_argument("--max-steps", type=int, default=10**6,
                   help="cap on steps derived from --eps-budget (default 1e6)")
    s.add_argument("--cap", type=int, help="give up after this many draws/trials")
    s.add_argument("--format", choices=["edges", "json"], default="edges")
    s.add_argument("--out", default="-")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT,
                   help="oracle search limit (--sampler oracle)")
    s.set_defaults(func=cmd_sample)

    b = sub.add_parser("bounds", help="print the bounds report as JSON")
    b.add_argument("--input", required=True)
    b.add_argument("--c0", type=float)
    b.add_argument("--eps", type=float)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run oracle-backed property suites")
    v.add_argument("--suite", choices=["all", *suites.SUITES], default="all")
    v.add_argument("--max-n", type=int, help="largest node count (suite default if omitted)")
    v.add_argument("--max-m", type=int, default=4, help="largest edge count (k=3)")
    v.add_argument("--max-d", type=int, default=4, help="largest regular degree (thm12)")
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--draws", type=int, default=100_000, help="draws per instance (uniformity)")
    v.add_argument("--runs", type=int, default=10_000, help="runs (tail)")
    v.add_argument("-q", "--quiet", action="store_true",
                   help="print only failures and per-suite summaries")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="exact counts from the enumeration oracle")
    e.add_argument("--input", required=True)
    e.add_argument("--list", action="store_true", help="also list every bipartite graph")
    e.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 1) < 0 or getattr(args, "jobs", 1) < 1:
        parser.error("--count must be >= 0 and --jobs >= 1")
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
