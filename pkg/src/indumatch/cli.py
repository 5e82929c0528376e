"""Command-line front end.

Usage:
    indumatch oracle --in graph.txt
    indumatch tree --in tree.txt
    indumatch kwim --k 2 --in graph.txt
    indumatch minimal-girth --in graph.txt
    indumatch generate --family Q --k 6 --r 2
    indumatch search-girth11 --max-n 14
    indumatch bench --sizes 16384,32768,65536

Decisions go to stdout as one JSON document and exit 0 whatever the verdict;
exit 2 means bad input and 3 an exhausted search budget.
"""

from __future__ import annotations

import argparse
import csv
import gc
import json
import os
import random
import sys
import time
from typing import Sequence

from .families import FamilyError, FamilySpec
from .girth import is_minimal_wim_girth9, search_unicyclic
from .graph import Graph, GraphError, format_graph, parse_graph
from .kwim import classify_k, is_k_wim
from .oracle import DEFAULT_BUDGET, BudgetExceeded, oracle_is_wim
from .trees import is_wim_tree, random_reduced_tree

EXIT_OK = 0
EXIT_BENCH_BOUND = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

BENCH_SIZES = [2**e for e in range(14, 21)]
RATIO_LIMIT = 3.0


def bench_tree(sizes: Sequence[int], seed: int = 42, repeats: int = 7) -> list[tuple[int, float]]:
    """Time the tree recognizer on random reduced trees, best of ``repeats``.

    Only the decision is timed (no witness construction).  Repeats cycle over
    all sizes so a transient slowdown does not land on one size only; garbage
    collection is off while timing, as in :mod:`timeit`.  Returns ``(n, ms)``.
    """
    rng = random.Random(seed)
    inputs = [random_reduced_tree(n, rng) for n in sizes]
    best = [float("inf")] * len(inputs)
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            for i, t in enumerate(inputs):
                start = time.perf_counter()
                is_wim_tree(t, witness=False)
                best[i] = min(best[i], time.perf_counter() - start)
    finally:
        if enabled:
            gc.enable()
    return [(n, b * 1000.0) for n, b in zip(sizes, best)]


def doubling_violations(rows: Sequence[tuple[int, float]], min_n: int = 2**14,
                        limit: float = RATIO_LIMIT) -> list[tuple[int, float]]:
    """Sizes ``n >= min_n`` where ``time(2n) / time(n)`` reaches ``limit``."""
    times = dict(rows)
    bad = []
    for n, ms in rows:
        if n >= min_n and 2 * n in times and ms > 0:
            ratio = times[2 * n] / ms
            if ratio >= limit:
                bad.append((n, ratio))
    return bad


def _read_graph(path: str | None) -> Graph:
    if path is None:
        raise GraphError("this command needs --in PATH (or - for stdin)")
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    cert = oracle_is_wim(g, budget=args.budget, early_exit=args.early_exit)
    _emit(cert.to_dict(g))
    _say(f"oracle: {'well-indumatched, k=%d' % cert.k if cert.well_indumatched else 'not well-indumatched'}")
    return EXIT_OK


def _cmd_tree(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    cert = is_wim_tree(g)
    _emit(cert.to_dict(g))
    _say(f"tree: {'well-indumatched, k=%d' % cert.k if cert.well_indumatched else 'not well-indumatched'}")
    return EXIT_OK


def _cmd_kwim(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    if args.k is not None:
        decision = is_k_wim(g, args.k)
        _emit(decision.to_dict(g))
        _say(f"kwim: {'' if decision.verdict else 'not '}{args.k}-well-indumatched")
        return EXIT_OK
    if args.k_max is None:
        raise GraphError("kwim needs --k or --k-max")
    k = classify_k(g, args.k_max)
    _emit({"k_max": args.k_max, "k": k,
           "verdict": k is not None})
    _say(f"kwim: k={k}" if k is not None else f"kwim: not well-indumatched up to {args.k_max}")
    return EXIT_OK


def _cmd_minimal_girth(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    report = is_minimal_wim_girth9(g)
    _emit(report.to_dict())
    verdict = "is" if report.accepted else "is not"
    _say(f"minimal-girth: graph {verdict} a minimal well-indumatched graph of girth >= 9 "
         "(this does not decide well-indumatchedness in general)")
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    spec = FamilySpec.parse(args.family, n=args.n, r=args.r, k=args.k, t=args.t, g=args.g)
    g = spec.build()
    if args.format == "json":
        _emit({"family": spec.family, "params": list(spec.params), "n": g.n,
               "edges": [list(e) for e in g.edges]})
    else:
        sys.stdout.write(format_graph(g))
    _say(f"generate: {spec.family}{spec.params} n={g.n} m={g.m}")
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    length = args.girth
    result = search_unicyclic(length, args.max_n, budget=args.budget, jobs=args.jobs)
    _emit(result.to_dict())
    _say(f"search: {result.examined} graphs examined, {len(result.found)} well-indumatched")
    if length == 11:
        extra = [g for g in result.found if g.n != 11]
        if extra:
            _say("!" * 72)
            _say(f"!!! {len(extra)} well-indumatched graph(s) of girth 11 other than C11 found;")
            _say("!!! this contradicts the conjecture that C11 is the only one")
            _say("!" * 72)
    if not result.complete:
        _say(f"search: budget exhausted on {len(result.unresolved)} graph(s); result is partial")
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.sizes is None:
        sizes = BENCH_SIZES
    else:
        sizes = sorted(int(s) for s in args.sizes.split(",") if s.strip())
    rows = bench_tree(sizes, seed=args.seed)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "ms"])
    for n, ms in rows:
        out.writerow([n, f"{ms:.3f}"])
    bad = doubling_violations(rows)
    for n, ratio in bad:
        _say(f"bench: time({2 * n})/time({n}) = {ratio:.2f} >= {RATIO_LIMIT}")
    return EXIT_BENCH_BOUND if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indumatch",
                                     description="Well-indumatched graph recognition.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="PATH",
                        help="edge-list file, or - for stdin")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="oracle search-node budget (default 10^7)")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive decision")
    p.add_argument("--early-exit", action="store_true",
                   help="stop at the first pair of sizes that disagree")
    p.set_defaults(run=_cmd_oracle)

    p = sub.add_parser("tree", parents=[common], help="linear-time tree recognizer")
    p.set_defaults(run=_cmd_tree)

    p = sub.add_parser("kwim", parents=[common], help="fixed-k recognizer")
    p.add_argument("--k", type=int)
    p.add_argument("--k-max", type=int)
    p.set_defaults(run=_cmd_kwim)

    p = sub.add_parser("minimal-girth", parents=[common],
                       help="minimal well-indumatched graphs of girth >= 9")
    p.set_defaults(run=_cmd_minimal_girth)

    p = sub.add_parser("generate", parents=[common], help="emit a family member")
    p.add_argument("--family", required=True)
    for name in ("n", "r", "k", "t", "g"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(run=_cmd_generate)

    p = sub.add_parser("search-girth11", parents=[common],
                       help="bounded search of unicyclic graphs with shallow trees")
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--girth", type=int, default=11, help="cycle length to search (default 11)")
    p.set_defaults(run=_cmd_search)

    p = sub.add_parser("bench", parents=[common], help="time the tree recognizer")
    p.add_argument("--sizes", help="comma separated tree orders")
    p.set_defaults(run=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (GraphError, FamilyError, OSError, ValueError) as exc:
        _say(f"error: {exc}")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        _say(f"error: {exc}")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
