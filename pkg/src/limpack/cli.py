"""``limpack`` command line: gen | bounds | solve | experiment.

Exit codes: 0 ok, 1 usage or parse error, 2 budget exhausted (unknown
values reported), 3 consistency violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as gio
from .algorithms import AlgoParams, TRIM_POLICIES, greedy_two_packing, randomized_with_restarts
from .bounds import bounds_report
from .generators import GenSpec, RetryLimitError
from .graph import GraphError
from .harness import ExperimentConfig, load_corpus, rows_to_csv, run_experiment, summarize
from .packing import DEFAULT_BUDGET, PackingError, PackingSet, exact_lk, is_maximal, verify_packing

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_input(path: str, fmt: str | None):
    if path == "-":
        return gio.parse(sys.stdin.read(), fmt or "edgelist")
    return gio.read_graph(path, fmt)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_gen(args) -> int:
    family = args.family.replace("-", "_")
    spec = GenSpec(family, n=args.n, p=args.p, degree=args.deg, copies=args.copies, base=args.base.replace("-", "_"), seed=args.seed)
    g = spec.build()
    text = gio.serialize(g, args.format)
    stats = f"n={g.n} m={g.m} max_deg={g.max_deg} min_deg={g.min_deg}"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(stats)
    else:
        sys.stdout.write(text)
        print(stats, file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    g = _read_input(args.input, args.format)
    report = bounds_report(g, args.k, with_exact_domination=args.exact_domination, budget=args.budget)
    _emit(report.to_json())
    if not report.consistent:
        return EXIT_INCONSISTENT
    if any(b.status == "unknown" for b in report.upper.values()):
        return EXIT_UNKNOWN
    return EXIT_OK


def _packing_json(g, x: PackingSet, k: int) -> dict:
    return {
        "size": x.size,
        "witness": list(x.members),
        "valid": not verify_packing(g, x.members, k),
        "maximal": is_maximal(g, x.members, k),
    }


def cmd_solve(args) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.algo == "greedy" and args.k != 1:
        raise UsageError("greedy constructs 1-limited packings only; use --k 1")
    g = _read_input(args.input, args.format)
    out: dict = {"algo": args.algo, "k": args.k, "n": g.n, "max_deg": g.max_deg}
    code = EXIT_OK
    if args.algo == "exact":
        res = exact_lk(g, args.k, budget=args.budget)
        out.update(_packing_json(g, res.witness, args.k))
        out.update(res.to_json())
        if not res.complete:
            code = EXIT_UNKNOWN
    elif args.algo == "greedy":
        out.update(_packing_json(g, greedy_two_packing(g), 1))
    elif args.k > g.max_deg:
        # every closed neighbourhood has <= k vertices: V(G) is optimal
        x = PackingSet(args.k, tuple(range(g.n)), g.n)
        out.update(_packing_json(g, x, args.k))
        out.update({"trivial": True, "bound_target": g.n, "bound_met": True, "restarts_used": 0, "trace": []})
    else:
        params = AlgoParams(seed=args.seed, max_restarts=args.restarts, trim_policy=args.trim_policy, workers=args.workers)
        run = randomized_with_restarts(g, args.k, params)
        out.update(_packing_json(g, run.packing, args.k))
        out.update(run.to_json())
        out["seed"] = args.seed
    _emit(out)
    return code


def _parse_k_range(text: str | None) -> tuple[int, int | None]:
    if not text:
        return 1, None
    if ":" in text:
        lo, hi = text.split(":", 1)
        k_lo = int(lo) if lo else 1
        k_hi = int(hi) if hi else None
    else:
        k_lo = k_hi = int(text)
    if k_lo < 1 or (k_hi is not None and k_hi < k_lo):
        raise UsageError(f"bad --k-range {text!r}")
    return k_lo, k_hi


def cmd_experiment(args) -> int:
    try:
        k_lo, k_hi = _parse_k_range(args.k_range)
    except ValueError:
        raise UsageError(f"bad --k-range {args.k_range!r}") from None
    entries = load_corpus(args.corpus, args.format)
    cfg = ExperimentConfig(seed=args.seed, k_min=k_lo, k_max=k_hi, exact_cap=args.exact_cap, budget=args.budget, max_restarts=args.restarts)
    outcomes = run_experiment(entries, cfg, jobs=args.jobs)
    text = rows_to_csv(outcomes)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return summarize(outcomes)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="limpack", description="k-limited packings: bounds, constructions, exact solvers")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt_kw = dict(choices=gio.FORMATS, default=None, help="input format (default: by file suffix, edgelist otherwise)")

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--family", required=True,
                   choices=["path", "cycle", "complete", "star", "petersen", "gnp", "random-regular", "disjoint-copies"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--deg", type=int, default=0)
    p.add_argument("--copies", type=int, default=1)
    p.add_argument("--base", default="petersen", help="family copied by disjoint-copies")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=gio.FORMATS, default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="evaluate all bounds for (G, k) as JSON")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact-domination", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", **fmt_kw)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="construct or compute a k-limited packing")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["exact", "randomized", "greedy"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1000)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--trim-policy", choices=TRIM_POLICIES, default="max_degree")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", **fmt_kw)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("experiment", help="bounds-vs-exact CSV over a corpus")
    p.add_argument("corpus", help="directory, .g6 file, JSON manifest, or 'standard'")
    p.add_argument("--k-range", help="'lo:hi', 'lo:' or a single k (default 1..max_deg+1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--exact-cap", type=int, default=20)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--restarts", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", **fmt_kw)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, PackingError, RetryLimitError, OSError, ValueError) as exc:
        print(f"limpack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
