"""`edgedepth` command line: bound, depth, betti, colon, verify, explore, example."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bounds import bound_report
from .explore import RunConfig, parse_powers, run_sweep, summarize, write_jsonl
from .graphs import EdgeListParseError, Graph, GraphError, builtin, edge_ideal, format_edge_list, parse_edge_list
from .homology import Field
from .monomials import ideal_colon_monomial, ideal_power, parse_monomial
from .oracle import (DEFAULT_LATTICE_CAP, DEFAULT_SOCLE_BUDGET, LATTICE, STRATEGIES, OracleBudgetError,
                     betti_table, depth, socle_depth_zero)
from .verify import LEMMAS, run_lemma

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def load_graph(args) -> Graph:
    if args.example:
        G = builtin(args.example)
    elif args.graph:
        path = Path(args.graph)
        G = parse_edge_list(path.read_text(), allow_loops=args.allow_loops, name=path.stem)
    else:
        raise GraphError("give --graph PATH or --example ID")
    if G.loops and not args.allow_loops:
        raise GraphError("graph has loops; pass --allow-loops")
    return G


def _graph_opts(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", metavar="PATH", help="edge-list file, one `u v` pair per line")
    src.add_argument("--example", metavar="ID", help="square-sharp, cube-sharp, block-chain:k, path:n, ...")
    p.add_argument("--allow-loops", action="store_true")


def _oracle_opts(p: argparse.ArgumentParser):
    p.add_argument("--field", default="gf2", help="q or gf2 (default gf2)")
    p.add_argument("--strategy", default=LATTICE, choices=STRATEGIES)
    p.add_argument("--budget-ms", type=float, default=None, help="wall-time budget per oracle call")
    p.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)


def cmd_bound(args) -> int:
    G = load_graph(args)
    r = bound_report(G, args.t, with_oracle=args.oracle, field=Field.parse(args.field), strategy=args.strategy,
                     budget_ms=args.budget_ms, lattice_cap=args.lattice_cap)
    print(r.to_text())
    print(json.dumps(r.to_record()))
    return 0


def cmd_depth(args) -> int:
    G = load_graph(args)
    J = ideal_power(edge_ideal(G), args.t)
    res = depth(J, G.n, args.strategy, Field.parse(args.field), lattice_cap=args.lattice_cap,
                budget_ms=args.budget_ms)
    print(f"depth {res.depth}")
    print(f"pd {res.pd}")
    print(f"strategy {res.strategy}  field {res.field}  multidegrees {res.multidegrees_examined}  "
          f"time {res.wall_time:.3f}s")
    if args.socle:
        z = socle_depth_zero(J, G.n, budget=args.socle_budget)
        print("socle witness " + ("none" if z is None else z.to_str(G.vertex_names)))
    return 0


def cmd_betti(args) -> int:
    G = load_graph(args)
    J = ideal_power(edge_ideal(G), args.t)
    table = betti_table(J, args.strategy, Field.parse(args.field), lattice_cap=args.lattice_cap,
                        budget_ms=args.budget_ms)
    print(table.to_text(G.vertex_names))
    return 0


def cmd_colon(args) -> int:
    G = load_graph(args)
    m = parse_monomial(args.monomial, G.vertex_names)
    print(ideal_colon_monomial(ideal_power(edge_ideal(G), args.t), m).to_str(G.vertex_names))
    return 0


def cmd_verify(args) -> int:
    powers = parse_powers(args.powers) if args.powers else ((args.t,) if args.t else None)
    s = run_lemma(args.lemma, max_n=args.max_n, powers=powers, seed=args.seed, samples=args.samples,
                  example=args.example)
    print(s.to_text())
    return 0 if s.ok else EXIT_FAIL


def cmd_explore(args) -> int:
    config = RunConfig(max_n=args.max_n, min_n=args.min_n, powers=parse_powers(args.powers), field=args.field,
                       strategy=args.strategy, lattice_cap=args.lattice_cap, socle_budget=args.socle_budget,
                       jobs=args.jobs, seed=args.seed, out=args.out, budget_ms=args.budget_ms,
                       family=args.family)
    start = time.perf_counter()
    records = run_sweep(config)
    if config.out:
        with open(config.out, "w") as fh:
            write_jsonl(records, fh)
    else:
        write_jsonl(records, sys.stdout)
    s = summarize(records)
    print(f"{s.to_text()} in {time.perf_counter() - start:.1f}s", file=sys.stderr)
    for r in s.violations:
        print(f"BUG {r['canonical_key']} t={r['t']} oracle={r['oracle_depth']} proven={r['proven']}",
              file=sys.stderr)
    for r in s.candidates:
        print(f"CANDIDATE-COUNTEREXAMPLE {r['canonical_key']} t={r['t']} oracle={r['oracle_depth']} "
              f"conjectural={r['unified']}", file=sys.stderr)
    return EXIT_FAIL if s.violations else 0


def cmd_example(args) -> int:
    G = builtin(args.id)
    sys.stdout.write(format_edge_list(G))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edgedepth", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="closed-form bounds for depth R/I^t")
    _graph_opts(p)
    _oracle_opts(p)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="also compute the exact depth")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("depth", help="exact depth of R/I^t")
    _graph_opts(p)
    _oracle_opts(p)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--socle", action="store_true", help="also search for a socle witness")
    p.add_argument("--socle-budget", type=int, default=DEFAULT_SOCLE_BUDGET)
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("betti", help="multigraded Betti table of R/I^t")
    _graph_opts(p)
    _oracle_opts(p)
    p.add_argument("--t", type=int, default=1)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("colon", help="generators of (I^t : m)")
    _graph_opts(p)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("monomial", help='e.g. "x1*x2" or "x3^2"')
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("lemma", choices=LEMMAS)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--powers", default=None, help="A..B, overrides --t")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--example", metavar="ID", default=None, help="restrict the exhaust suite to one graph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="sweep small graphs, emit JSONL")
    _oracle_opts(p)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--powers", default="1..2")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", default=None)
    p.add_argument("--socle-budget", type=int, default=DEFAULT_SOCLE_BUDGET)
    p.add_argument("--family", default="connected",
                   help='"connected" or comma-separated example ids, e.g. "block-chain:1,block-chain:2"')
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("example", help="print a built-in graph as an edge list")
    p.add_argument("id")
    p.set_defaults(func=cmd_example)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleBudgetError as exc:
        print(f"budget exceeded [{exc.cap}, limit {exc.limit}]: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
