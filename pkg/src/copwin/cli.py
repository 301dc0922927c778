"""Command-line front end: ``copwin <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 graph not cop-win (with
``--require-copwin``) or oracle disagreement, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .catalog import list_named, named_graph
from .errors import GraphParseError, ResourceCapError
from .game import capture_time_by_game
from .graph import parse_graph, serialize_graph
from .infinity import INFINITY
from .rank import capture_time_by_rank, corner_rank, rank_cardinality_vector, top_heaviness
from .search import HARD_CAP, census, check_minimal
from .suites import SCHEMA, SUITES, compact, verify_suite
from .vectors import parse_vector

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3


def _value(x):
    return "infinity" if x is INFINITY else x


def _emit(args, human_lines, payload):
    if args.output == "structured":
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _read_graph(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as f:
            text = f.read()
    return parse_graph(text, format=args.format)


def cmd_rank(args):
    g = _read_graph(args)
    r = corner_rank(g)
    ranks = {str(g.labels[v]): _value(r.ranks[v]) for v in range(g.n)}
    lines = [f"vertex {lab} rank {rk}" for lab, rk in ranks.items()]
    if not r.is_cop_win:
        lines.append("rank=infinity cop_win=false")
        _emit(args, lines, {"cop_win": False, "rank": "infinity", "ranks": ranks})
        return EXIT_DOMAIN if args.require_copwin else EXIT_OK
    top = top_heaviness(g, r)
    top_text = "clique" if top.r is None else str(top.r)
    vec = rank_cardinality_vector(r)
    ct = capture_time_by_rank(g, r)
    lines.append(f"rank={r.alpha} top={top_text} vector={vec} capture_time={ct}")
    _emit(args, lines, {
        "cop_win": True, "rank": r.alpha, "top": top_text, "vector": str(vec),
        "capture_time": ct, "ranks": ranks,
    })
    return EXIT_OK


def cmd_capture(args):
    g = _read_graph(args)
    values = {}
    if args.oracle in ("rank", "both"):
        values["rank"] = capture_time_by_rank(g)
    if args.oracle in ("game", "both"):
        values["game"] = capture_time_by_game(g)
    shown = {k: _value(v) for k, v in values.items()}
    agree = len(set(values.values())) == 1
    cop_win = next(iter(values.values())) is not INFINITY
    if args.oracle == "both":
        lines = [f"rank={shown['rank']} game={shown['game']} {'agree' if agree else 'DISAGREE'}"]
    else:
        lines = [f"capture_time={shown[args.oracle]}"]
    _emit(args, lines, {"cop_win": cop_win, "capture_time": shown, "agree": agree})
    if not agree:
        return EXIT_DOMAIN
    if args.require_copwin and not cop_win:
        return EXIT_DOMAIN
    return EXIT_OK


def _cap(args):
    if args.cap > HARD_CAP:
        raise argparse.ArgumentTypeError(f"--cap above {HARD_CAP} is not supported")
    if args.cap == HARD_CAP:
        print(f"warning: --cap={HARD_CAP} can take several minutes", file=sys.stderr)
    return args.cap


def cmd_realize(args):
    v = parse_vector(args.vector)
    c = census(v, args.r, cap=_cap(args), include_cliques=args.include_cliques)
    lines = [f"vector={v} r={args.r} count={c.count}"]
    if args.emit:
        for g in c.realizers:
            lines.append(compact(g))
    _emit(args, lines, {
        "vector": str(v), "r": args.r, "count": c.count, "method": c.method,
        "realizers": [compact(g) for g in c.realizers] if args.emit else None,
    })
    return EXIT_OK


def cmd_minimal(args):
    v = parse_vector(args.vector)
    m = check_minimal(v, int(args.r), sum_cap=_cap(args))
    if m.minimal:
        line = f"{v} is {args.r}-minimal"
    elif m.minimal is None:
        line = f"{v} undetermined: untested above cap {m.sum_cap_used}: " + " ".join(map(str, m.residual))
    else:
        line = f"{v} is not {args.r}-minimal witness={m.witness[0]} graph={compact(m.witness[1])}"
    _emit(args, [line], {
        "vector": str(v), "r": int(args.r),
        "minimal": m.minimal,
        "witness": None if not m.witness else {"vector": str(m.witness[0]), "graph": compact(m.witness[1])},
        "tested": [str(y) for y in m.tested],
        "residual": [str(y) for y in m.residual],
        "sum_cap": m.sum_cap_used,
    })
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        print(f"error: unknown suite {args.suite!r}; known: {', '.join(SUITES)}, all", file=sys.stderr)
        return EXIT_USAGE
    reports = [verify_suite(n, cap=_cap(args), corpus=args.corpus) for n in names]
    if args.output == "structured":
        data = reports[0].to_dict() if len(reports) == 1 else {"schema": SCHEMA, "suites": [r.to_dict() for r in reports]}
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for r in reports:
            for line in r.lines():
                print(line)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_USAGE


def cmd_catalog(args):
    if args.action == "list":
        names = list_named()
        _emit(args, names, {"names": names})
        return EXIT_OK
    if not args.name:
        print("error: catalog show needs a name", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = named_graph(args.name, args.n)
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    r = corner_rank(g)
    lines = serialize_graph(g).rstrip("\n").split("\n")
    lines += [f"rank {g.labels[v]} {_value(r.ranks[v])}" for v in range(g.n)]
    _emit(args, lines, {
        "name": args.name, "n": g.n,
        "labels": [str(x) for x in g.labels],
        "edges": [[str(g.labels[u]), str(g.labels[v])] for u, v in g.edges()],
        "ranks": {str(g.labels[v]): _value(r.ranks[v]) for v in range(g.n)},
    })
    return EXIT_OK


def _global_options(parser, suppress):
    d = (lambda x: argparse.SUPPRESS) if suppress else (lambda x: x)
    parser.add_argument("--output", choices=("human", "structured"), default=d("human"))
    parser.add_argument("--cap", type=int, default=d(9), help="enumeration cap on graph order (max 10)")
    parser.add_argument("--threads", type=int, default=d(1), help="accepted; work runs on one thread")


def build_parser():
    p = argparse.ArgumentParser(prog="copwin", description="Corner rank and capture time of cop-win graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text):
        s = sub.add_parser(name, parents=[common], help=help_text)
        s.add_argument("file", help="graph file, or - for standard input")
        s.add_argument("--format", choices=("adjlist", "pairs"), default="adjlist")
        s.add_argument("--require-copwin", action="store_true", help="exit 2 when the graph is not cop-win")
        return s

    s = graph_cmd("rank", "corner ranking, vector and capture time of a graph")
    s.set_defaults(func=cmd_rank)
    s = graph_cmd("capture", "capture time by corner rank, by game solving, or both")
    s.add_argument("--oracle", choices=("rank", "game", "both"), default="both")
    s.set_defaults(func=cmd_capture)

    s = sub.add_parser("realize", parents=[common], help="count the graphs realizing a vector")
    s.add_argument("vector", help='vector such as "(2,2,2,1)"')
    s.add_argument("--r", choices=("0", "1", "any"), default="any")
    s.add_argument("--emit", action="store_true", help="print every realizer")
    s.add_argument("--include-cliques", action="store_true")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("minimal", parents=[common], help="decide r-minimality of a vector")
    s.add_argument("vector")
    s.add_argument("--r", choices=("0", "1"), required=True)
    s.set_defaults(func=cmd_minimal)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help=f"one of {', '.join(SUITES)}, or all")
    s.add_argument("--corpus", default=None, help="fixture directory (default: $COPWIN_CORPUS or bundled)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("catalog", parents=[common], help="list or show named graphs")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.add_argument("--n", type=int, default=None, help="order for the P, K and C families")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (GraphParseError, ValueError, OSError, argparse.ArgumentTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
