"""Command-line front door: solve, simulate, gen, verify, serve.

Exit codes: 0 success/true verdict, 1 false verdict or failed check,
2 error (parse, capacity, bad input).
"""
from __future__ import annotations

import argparse
import json
import sys

from .engine import GameConfig
from .graph import is_connected
from .io import GraphFileError, dump_graph, load_graph
from .policies import InteractiveRobber, OptimalRobber, RandomRobber
from .solver import StateBudgetError, adversarial_placement, is_exit_copwin, solve
from .strategy import NotSeriesParallelError, simulate
from .structure import generate_sp, is_series_parallel
from .verify import run_verify


def _parse_exits(raw: str) -> frozenset[int]:
    raw = raw.strip()
    if not raw:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in raw.split(","))
    except ValueError as exc:
        raise GraphFileError(f"bad exit list {raw!r}") from exc


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    exits = _parse_exits(args.exits)
    cfg = GameConfig(g, exits, args.cops)
    table = solve(cfg)
    copwin = is_exit_copwin(cfg, table)
    print(f"verdict: {'copwin' if copwin else 'not copwin'}")
    print(f"states: {table.state_count}")
    if copwin:
        free, r = adversarial_placement(cfg, table)
        cops = tuple(sorted(tuple(sorted(exits)) + free))
        opening = table.best_move.get((cops, r, True))
        print(f"worst placement: free cops {list(free)}, robber {r}")
        if opening is not None:
            print(f"optimal opening: cops {list(cops)} -> {list(opening)}")
        else:
            print("optimal opening: immediate capture at placement")
    return 0 if copwin else 1


def cmd_simulate(args) -> int:
    g = load_graph(args.graph)
    if not is_connected(g):
        raise NotSeriesParallelError("graph is not connected")
    if not is_series_parallel(g):
        raise NotSeriesParallelError("graph is not series-parallel")
    g.check_vertex(args.exit)
    cfg = GameConfig(g, frozenset((args.exit,)), 2)
    if args.robber == "optimal":
        policy = OptimalRobber(cfg)
    elif args.robber == "random":
        policy = RandomRobber(args.seed)
    else:
        policy = InteractiveRobber()
    result = simulate(
        g,
        args.exit,
        policy,
        max_rounds=args.max_rounds,
        check_claims=args.check_claims,
    )
    print(json.dumps(result.to_json(), indent=2))
    ok = result.cops_won and (not args.check_claims or not result.claim_violations)
    return 0 if ok else 1


def cmd_gen(args) -> int:
    g = generate_sp(args.seed, args.vertices, args.blocks)
    print(dump_graph(g))
    return 0


def cmd_verify(args) -> int:
    report = run_verify(args.count, args.max_vertices, args.seed)
    for line in report.summary_lines():
        print(line)
    if args.report_dir:
        from .report import write_report

        for path in write_report(report, args.report_dir):
            print(f"wrote {path}")
    return 0 if report.ok else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    app = create_app(snapshot_dir=args.snapshot_dir)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"error: cannot serve on port {args.port}: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spcops")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="exhaustively solve the exit game")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--cops", type=int, required=True)
    sp.add_argument("--exits", default="", help="comma-separated exit vertices")
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("simulate", help="run the two-cop strategy against a robber")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--exit", type=int, required=True)
    sp.add_argument("--robber", choices=["optimal", "random", "interactive"], default="optimal")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-rounds", type=int, default=None)
    sp.add_argument("--check-claims", action="store_true")
    sp.set_defaults(fn=cmd_simulate)

    sp = sub.add_parser("gen", help="generate a random series-parallel graph")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--vertices", type=int, required=True)
    sp.add_argument("--blocks", type=int, default=1)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("verify", help="batch-check strategy and solver")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--max-vertices", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--report-dir", default=None)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("serve", help="run the HTTP session API")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.add_argument("--snapshot-dir", default=None)
    sp.set_defaults(fn=cmd_serve)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFileError, NotSeriesParallelError, StateBudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
