"""Command-line interface.

Exit codes: 0 success, 1 analysis precondition failure or failed check,
2 parse error, 3 guard or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _kernels
from .bench import format_bench, run_bench
from .blocks import (
    two_edge_biconnected_blocks,
    two_edge_blocks,
    two_strong_biconnected_blocks,
    two_strong_blocks,
)
from .checks import oracle_check
from .connectivity import (
    is_biconnected,
    is_strongly_biconnected,
    is_strongly_connected,
)
from .dot import export_dot
from .edgelist import emit_edge_list, parse_edge_list
from .errors import (
    EdgeListParseError,
    GenerationBudgetError,
    GuardError,
    NotStronglyBiconnectedError,
    NotStronglyConnectedError,
)
from .generate import gen_random_sb
from .graph import underlying
from .report import analyze, render_report
from .resilience import (
    b_articulation_points,
    b_bridges,
    components_2esb,
    components_2vsb,
)
from .sbc import strongly_biconnected_components

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


def _read_graph(path):
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, "rb") as handle:
        return parse_edge_list(handle)


def _emit(data, fmt, text_renderer):
    if fmt == "json":
        print(json.dumps(data, indent=2, separators=(",", ": ")))
    else:
        print(text_renderer(data), end="")


def _family_text(family):
    if isinstance(family, dict):
        return f"skipped: {family['skipped']}\n"
    if not family:
        return "(empty)\n"
    return "".join(" ".join(str(v) for v in block) + "\n" for block in family)


def cmd_check(args):
    g = _read_graph(args.file)
    data = {
        "n": g.n,
        "m": g.m,
        "strongly_connected": is_strongly_connected(g),
        "underlying_biconnected": is_biconnected(underlying(g)),
        "strongly_biconnected": is_strongly_biconnected(g),
    }
    _emit(
        data,
        args.format,
        lambda d: "".join(f"{k}: {v}\n" for k, v in d.items()),
    )
    return EXIT_OK


def cmd_analyze(args):
    g = _read_graph(args.file)
    report = analyze(g, parallel=args.parallel == "on")
    if args.format == "json":
        print(render_report(report), end="")
    else:
        d = report.as_dict()
        print(f"n: {d['n']}\nm: {d['m']}")
        print(f"strongly_biconnected: {d['strongly_biconnected']}")
        for key in ("b_bridges", "b_articulation_points", "sbc",
                    "blocks_2eb", "blocks_2sb", "blocks_2e", "blocks_2s"):
            value = d[key]
            print(f"[{key}]")
            if key == "b_articulation_points" and isinstance(value, list):
                print(" ".join(str(v) for v in value) if value else "(empty)")
            else:
                print(_family_text(value), end="")
    return EXIT_OK


def cmd_blocks(args):
    g = _read_graph(args.file)
    parallel = args.parallel == "on"
    kind = args.kind
    if kind == "2eb":
        family = two_edge_biconnected_blocks(g, parallel=parallel)
    elif kind == "2sb":
        family = two_strong_biconnected_blocks(g, parallel=parallel)
    elif kind == "2e":
        family = two_edge_blocks(g, parallel=parallel)
    elif kind == "2s":
        family = two_strong_blocks(g, parallel=parallel)
    elif kind == "sbc":
        family = strongly_biconnected_components(g).components
    elif kind == "2esb":
        family = components_2esb(g, guard=args.guard)
    elif kind == "2vsb":
        family = components_2vsb(g, guard=args.guard)
    elif kind == "bbridges":
        family = b_bridges(g, parallel=parallel)
    elif kind == "bap":
        vertices = b_articulation_points(g, parallel=parallel)
        _emit(
            {"kind": kind, "vertices": list(vertices)},
            args.format,
            lambda d: (" ".join(str(v) for v in d["vertices"]) or "(empty)")
            + "\n",
        )
        return EXIT_OK
    else:  # pragma: no cover - argparse enforces choices
        raise AssertionError(kind)
    data = {"kind": kind, "blocks": [list(b) for b in family]}
    _emit(data, args.format, lambda d: _family_text(d["blocks"]))
    return EXIT_OK


def cmd_oracle(args):
    if args.count:
        mismatches = 0
        first = None
        for i in range(args.count):
            n = args.nmin + i % (args.nmax - args.nmin + 1)
            g = gen_random_sb(n, args.p, args.seed + i)
            result = oracle_check(g, guard=args.guard)
            if not result.passed:
                mismatches += 1
                first = first or result
        if mismatches:
            print(f"FAIL: {mismatches}/{args.count} graphs mismatched")
            print(first.describe())
            return EXIT_PRECONDITION
        print(f"ok: {args.count} random graphs, fast paths agree with oracles")
        return EXIT_OK
    g = _read_graph(args.file)
    result = oracle_check(g, guard=args.guard)
    print(result.describe())
    return EXIT_OK if result.passed else EXIT_PRECONDITION


def cmd_gen(args):
    g = gen_random_sb(args.n, args.p, args.seed, max_tries=args.max_tries)
    text = emit_edge_list(
        g, comment=f"gen n={args.n} p={args.p} seed={args.seed}"
    )
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = None if args.backends == "all" else [args.backends]
    result = run_bench(
        sizes=sizes, seed=args.seed, backends=backends, repeat=args.repeat
    )
    if args.format == "json":
        print(json.dumps(result, indent=2, separators=(",", ": ")))
    else:
        print(format_bench(result), end="")
    return EXIT_OK


def cmd_export_dot(args):
    g = _read_graph(args.file)
    highlight = None
    if args.highlight == "2eb":
        highlight = two_edge_biconnected_blocks(g)
    elif args.highlight == "2sb":
        highlight = two_strong_biconnected_blocks(g)
    elif args.highlight == "sbc":
        highlight = strongly_biconnected_components(g).components
    print(export_dot(g, highlight=highlight), end="")
    return EXIT_OK


def _add_common(parser, guard_default=12):
    parser.add_argument("file", nargs="?", default="-",
                        help="edge-list file, or - for stdin")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--guard", type=int, default=guard_default,
                        help="size guard for enumeration-based operations")
    parser.add_argument("--parallel", choices=("on", "off"), default="off",
                        help="run per-deletion analyses in a thread pool")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sbgraph",
        description="Connectivity analysis for strongly biconnected "
        "directed graphs",
    )
    parser.add_argument(
        "--kernels", choices=("c", "pure"),
        help="force a kernel backend (default: compiled when available)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="connectivity predicates for one graph")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", help="full decomposition report")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("blocks", help="one decomposition family")
    p.add_argument(
        "--kind",
        required=True,
        choices=("2eb", "2sb", "2e", "2s", "sbc", "2esb", "2vsb",
                 "bbridges", "bap"),
    )
    _add_common(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("oracle", help="cross-check fast paths vs oracles")
    _add_common(p)
    p.add_argument("--count", type=int, default=0,
                   help="check this many generated graphs instead of a file")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--p", type=float, default=0.6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a strongly biconnected graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-tries", type=int, default=20000)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the block pipeline per backend")
    p.add_argument("--sizes", default="50,100,200")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--backends", default="all",
                   choices=("all", "c", "pure"))
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-dot", help="emit the graph in DOT format")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--highlight", choices=("none", "2eb", "2sb", "sbc"),
                   default="none")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.kernels:
        _kernels.set_backend(args.kernels)
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotStronglyBiconnectedError, NotStronglyConnectedError) as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GuardError, GenerationBudgetError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (FileNotFoundError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
