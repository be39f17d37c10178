"""Command line interface.

Machine-readable JSON goes to stdout, human summaries to stderr, so output
composes into pipelines.  Exit codes: 0 success / bound holds, 2 parse or
argument error, 3 violated (or counterexample candidates / construction
failure), 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import report as report_mod
from .construct import (
    ConstructorConfig,
    FailureCertificate,
    POLICIES,
    construct_connected_matching,
)
from .generators import (
    c5_blowup,
    enumerate_alpha2,
    random_alpha2,
    two_cliques,
    two_cliques_plus,
)
from .graphs import (
    Graph,
    Graph6Error,
    GraphError,
    clique_number,
    encode_graph6,
    independence_at_most_2,
    parse_edge_list,
    parse_graph6,
    triangle_count,
)
from .matchings import (
    build_link_graph,
    greedy_connected_matching,
    max_connected_matching,
    max_generalized_matching,
    witness_to_json,
)
from .search import CANDIDATE, SearchConfig, SearchError, run_search
from .verifiers import HOLDS, LEMMA_IDS, VIOLATED, run_checker

EX_OK = 0
EX_USAGE = 2
EX_VIOLATED = 3
EX_INCONCLUSIVE = 4


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_graph(path: str) -> Graph:
    """Load a graph from a file or stdin, auto-detecting the format.

    Edge lists start with a digit ('n m' header); anything else is treated
    as graph6 (first nonempty line).
    """
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    stripped = text.lstrip()
    if not stripped:
        raise Graph6Error("empty graph input", 0)
    if stripped[0].isdigit():
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0])


def _budget(value: int) -> Optional[int]:
    # flag convention: 0 means unlimited
    return None if value == 0 else value


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_props(args) -> int:
    g = _read_graph(args.graph)
    out = {
        "n": g.n,
        "edges": g.edge_count(),
        "alpha_le_2": independence_at_most_2(g),
        "omega": clique_number(g),
        "triangles": triangle_count(g),
    }
    _emit(out)
    _info(f"n={out['n']} edges={out['edges']} alpha<=2: {out['alpha_le_2']} "
          f"omega={out['omega']} triangles={out['triangles']}")
    return EX_OK


def _cmd_cm(args) -> int:
    g = _read_graph(args.graph)
    if args.greedy:
        res = greedy_connected_matching(g, seed=args.seed, restarts=args.restarts)
    elif args.generalized:
        res = max_generalized_matching(g, budget=_budget(args.budget), target=args.target)
    else:
        res = max_connected_matching(g, budget=_budget(args.budget), target=args.target)
    _emit(witness_to_json(res.matching, res.exact))
    kind = "lower bound" if not res.exact else "exact"
    _info(f"value {res.value} ({kind}, {res.expansions} expansions)")
    return EX_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    cm = max_connected_matching(g, budget=_budget(args.budget), target=args.t)
    rep = run_checker(
        args.lemma,
        g,
        args.t,
        cm,
        seed=args.seed,
        trials=args.trials,
        pair_cap=args.pair_cap,
        triple_cap=args.triple_cap,
        budget=_budget(args.budget),
        restarts=args.restarts,
        minimality_gate=args.minimality_gate,
    )
    _emit(rep.to_json())
    _info(f"{rep.lemma}: {rep.verdict} (work {rep.work})")
    if rep.verdict == HOLDS:
        return EX_OK
    if rep.verdict == VIOLATED:
        return EX_VIOLATED
    return EX_INCONCLUSIVE


def _cmd_construct(args) -> int:
    g = _read_graph(args.graph)
    cfg = ConstructorConfig(
        policy=args.policy,
        base_t=args.base_t,
        exact_budget=_budget(args.budget),
        greedy_restarts=args.restarts,
        seed=args.seed,
    )
    result = construct_connected_matching(g, args.t, cfg)
    if isinstance(result, FailureCertificate):
        _emit(result.to_json())
        _info(f"construction failed at level {result.t}: {result.reason}")
        return EX_VIOLATED
    matching, trace = result
    # the witness is a valid matching of size >= t, not a claimed maximum
    _emit(witness_to_json(matching, False))
    if args.trace:
        with open(args.trace, "w", encoding="ascii") as fh:
            fh.write(trace.to_jsonl())
        _info(f"trace written to {args.trace}")
    else:
        sys.stdout.write(trace.to_jsonl())
    _info(f"built a connected matching of size {matching.size} "
          f"in {len(trace.levels)} levels")
    return EX_OK


def _parse_sizes(text: str) -> tuple[int, int, int, int, int]:
    try:
        parts = tuple(int(tok) for tok in text.replace("-", ",").split(","))
    except ValueError:
        raise GraphError(f"sizes {text!r} must be five integers") from None
    if len(parts) != 5:
        raise GraphError(f"sizes {text!r} must have exactly five entries")
    return parts


def _cmd_gen(args) -> int:
    family = args.family
    if family in ("twoclique", "twoclique+"):
        if args.t is None:
            raise GraphError(f"--family {family} requires --t")
        make = two_cliques if family == "twoclique" else two_cliques_plus
        graphs = [make(args.t)]
    elif family == "rand":
        if args.n is None:
            raise GraphError("--family rand requires --n")
        graphs = (
            random_alpha2(args.n, args.seed + i, args.density)
            for i in range(args.count)
        )
    elif family == "c5blowup":
        if args.sizes is None:
            raise GraphError("--family c5blowup requires --sizes")
        graphs = [c5_blowup(_parse_sizes(args.sizes))]
    else:  # enum
        if args.n is None:
            raise GraphError("--family enum requires --n")
        graphs = enumerate_alpha2(args.n)

    count = 0
    sink = open(args.out, "w", encoding="ascii") if args.out else sys.stdout
    try:
        for g in graphs:
            sink.write(encode_graph6(g) + "\n")
            count += 1
    finally:
        if args.out:
            sink.close()
    _info(f"wrote {count} graph{'s' if count != 1 else ''}")
    return EX_OK


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        t=args.t,
        seed=args.seed,
        greedy_restarts=args.restarts,
        exact_budget=_budget(args.budget),
        trials=args.trials,
        jobs=args.jobs,
        limit=args.limit,
    )
    summary = run_search(args.source, args.out, cfg)
    _emit(summary)
    _info(f"committed {summary['committed']} records "
          f"({summary['new']} new) to {args.out}")
    return EX_VIOLATED if summary["counts"].get(CANDIDATE) else EX_OK


def _cmd_report(args) -> int:
    summary = report_mod.summarize_run(args.run, args.out_dir, args.csv)
    _emit(summary)
    _info(f"summarized {summary['records']} records into {args.out_dir}")
    return EX_OK


# ---------------------------------------------------------------------------
# Self test
# ---------------------------------------------------------------------------


def _selftest() -> int:
    failures = []

    def check(name: str, ok: bool) -> None:
        _info(f"{'ok' if ok else 'FAIL'}  {name}")
        if not ok:
            failures.append(name)

    for t in (2, 3, 4):
        res = max_connected_matching(two_cliques(t))
        check(f"two-cliques t={t}: cm = {t - 1}", res.exact and res.value == t - 1)
        plus = max_connected_matching(two_cliques_plus(t))
        check(f"two-cliques+ t={t}: cm = {t}", plus.exact and plus.value == t)

    k4 = Graph.complete(4)
    check("K4: cm = 2", max_connected_matching(k4).value == 2)
    lg = build_link_graph(k4)
    check("K4 link graph is a perfect matching on 6 nodes",
          len(lg.nodes) == 6 and all(r.bit_count() == 1 for r in lg.rows))

    c5 = Graph.cycle(5)
    check("C5: cm = 2", max_connected_matching(c5).value == 2)
    # two disjoint edges plus the leftover vertex are pairwise linked
    check("C5: generalized value = 3", max_generalized_matching(c5).value == 3)

    for g in (k4, c5, two_cliques(3)):
        check(f"graph6 round-trip n={g.n}", parse_graph6(encode_graph6(g)) == g)

    _emit({"passed": not failures, "failures": failures})
    return EX_OK if not failures else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_graph_arg(sub) -> None:
    sub.add_argument("graph", help="graph file (graph6 or edge list), or - for stdin")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmatch",
        description="Connected matchings in graphs with independence number 2",
    )
    parser.add_argument("--selftest", action="store_true",
                        help="run the embedded fixture checks and exit")
    subs = parser.add_subparsers(dest="cmd")

    p = subs.add_parser("props", help="basic structural properties")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_props)

    p = subs.add_parser("cm", help="maximum connected matching")
    _add_graph_arg(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact search (default)")
    mode.add_argument("--greedy", action="store_true", help="seeded greedy lower bound")
    mode.add_argument("--generalized", action="store_true",
                      help="allow single vertices as elements")
    p.add_argument("--budget", type=int, default=10**7,
                   help="node-expansion budget for exact search (0 = unlimited)")
    p.add_argument("--target", type=int, default=None,
                   help="stop as soon as a matching of this size is found")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=64)
    p.set_defaults(func=_cmd_cm)

    p = subs.add_parser("verify", help="check one structural bound")
    _add_graph_arg(p)
    p.add_argument("--lemma", required=True, choices=LEMMA_IDS)
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--pair-cap", type=int, default=32,
                   help="largest n solved exactly in pair searches")
    p.add_argument("--triple-cap", type=int, default=20,
                   help="largest n solved exactly in triple/partition searches")
    p.add_argument("--minimality-gate", action="store_true",
                   help="downgrade violations when minimality is unestablished")
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("construct", help="build a size-t connected matching")
    _add_graph_arg(p)
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--policy", choices=POLICIES, default="maxdeg")
    p.add_argument("--base-t", type=int, default=4, dest="base_t")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--trace", default=None, help="write the level trace to this file")
    p.set_defaults(func=_cmd_construct)

    p = subs.add_parser("gen", help="emit graph6 lines for a family")
    p.add_argument("--family", required=True,
                   choices=("twoclique", "twoclique+", "rand", "c5blowup", "enum"))
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--sizes", default=None, help="five clique sizes, e.g. 2,3,4,5,6")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("search", help="run the counterexample search")
    p.add_argument("--source", required=True,
                   help="generator spec (e.g. rand:n=11,seed=7,count=100) or graph6 file")
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--out", required=True, help="JSONL output path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--limit", type=int, default=None,
                   help="stop after committing this many records")
    p.set_defaults(func=_cmd_search)

    p = subs.add_parser("report", help="summarize a search run (CSV + figures)")
    p.add_argument("--run", required=True, help="JSONL file a search produced")
    p.add_argument("--out-dir", required=True, dest="out_dir")
    p.add_argument("--csv", default="summary.csv", help="summary CSV filename")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.selftest:
        return _selftest()
    if not getattr(args, "cmd", None):
        parser.print_usage(sys.stderr)
        return EX_USAGE
    try:
        return args.func(args)
    except (GraphError, SearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
