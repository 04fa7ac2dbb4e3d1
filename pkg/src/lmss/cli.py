"""Command-line front end: analyze one graph, verify rules over corpora,
generate corpora as edge-list files.

Exit codes: 0 on success (verify: zero violations), 1 on violations,
2 on usage/parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graphs import (
    CapacityError,
    ParseError,
    UsageError,
    parse_edge_list,
    serialize,
    serialize_many,
)
from .fixtures import fixture, fixture_names
from .corpus import CorpusSpec, iter_corpus
from .report import analyze_graph, render_text
from .theorems import RULES, verify


def _corpus_spec(args) -> CorpusSpec:
    return CorpusSpec(
        source=args.source,
        max_n=args.max_n,
        count=args.count,
        n=args.n,
        edge_probability=args.p,
        seed=args.seed,
        fixtures=tuple(args.fixture or ()),
        max_x=args.max_x,
        max_h=args.max_h,
        max_total=args.max_total,
        filter=args.filter,
    )


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--source", choices=["exhaustive", "random", "coronas", "fixtures"],
                   default="exhaustive")
    p.add_argument("--max-n", type=int, default=None,
                   help="largest vertex count for exhaustive corpora")
    p.add_argument("--count", type=int, default=None, help="random: number of graphs")
    p.add_argument("--n", type=int, default=None, help="random: vertices per graph")
    p.add_argument("--p", type=float, default=None, help="random: edge probability")
    p.add_argument("--seed", type=int, default=None, help="random: RNG seed (required)")
    p.add_argument("--fixture", action="append", metavar="NAME",
                   help="fixtures source: may repeat")
    p.add_argument("--max-x", type=int, default=3, help="coronas: largest base size")
    p.add_argument("--max-h", type=int, default=3, help="coronas: largest attached size")
    p.add_argument("--max-total", type=int, default=12, help="coronas: largest total size")
    p.add_argument("--filter", choices=["none", "vwc", "bipartite", "forest", "connected"],
                   default="none")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmss",
        description="Local maximum stable sets, very well-covered graphs, "
        "and greedoid decisions on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="classify a single graph")
    src = pa.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", metavar="NAME",
                     help="one of: " + " ".join(fixture_names()))
    src.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
    pa.add_argument("--format", choices=["json", "text"], default="text")
    pa.add_argument("--mode", choices=["auto", "oracle", "fast"], default="auto",
                    help="greedoid decision route (auto picks fast on very "
                    "well-covered graphs)")

    pv = sub.add_parser("verify", help="check rules over a corpus")
    pv.add_argument("--theorem", action="append", metavar="RULE", required=True,
                    help="rule id or 'all'; known: " + " ".join(sorted(RULES)))
    _add_corpus_args(pv)
    pv.add_argument("--format", choices=["json", "text"], default="text")
    pv.add_argument("--jobs", type=int, default=1, help="worker threads")

    pg = sub.add_parser("generate", help="write a corpus as edge-list text")
    _add_corpus_args(pg)
    pg.add_argument("--output", required=True,
                    help="output file, or directory (one file per graph) with --split")
    pg.add_argument("--split", action="store_true",
                    help="write one file per graph into the output directory")

    return parser


def _cmd_analyze(args) -> int:
    if args.fixture:
        g, name = fixture(args.fixture), args.fixture
    elif args.input == "-":
        g, name = parse_edge_list(sys.stdin.read()), "<stdin>"
    else:
        text = Path(args.input).read_text()
        g, name = parse_edge_list(text), args.input
    report = analyze_graph(g, name=name)
    if args.mode == "fast" and report.psi_greedoid_fast is None:
        raise UsageError("fast mode needs a very well-covered graph")
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(render_text(report))
    return 0


def _cmd_verify(args) -> int:
    names = sorted(RULES) if "all" in args.theorem else args.theorem
    if "all" in args.theorem and args.source != "coronas":
        names = [n for n in names if not RULES[n].needs_corona]
    summary = verify(_corpus_spec(args), names, jobs=args.jobs)
    if args.format == "json":
        sys.stdout.write(json.dumps(summary.to_dict(), sort_keys=True, indent=2) + "\n")
    else:
        for rep in summary.reports:
            status = "ok" if not rep.violations else f"{len(rep.violations)} violation(s)"
            sys.stdout.write(f"{rep.rule:18s} checked {rep.checked:6d} graphs: {status}\n")
            for v in rep.violations:
                sys.stdout.write(f"  {v.item}: {v.detail}\n")
                sys.stdout.write("  " + v.edge_list.replace("\n", " / ") + "\n")
        sys.stdout.write(f"total violations: {summary.total_violations}\n")
    return 0 if summary.passed else 1


def _cmd_generate(args) -> int:
    items = iter_corpus(_corpus_spec(args))
    out = Path(args.output)
    if args.split:
        out.mkdir(parents=True, exist_ok=True)
        for it in items:
            (out / f"{it.name}.txt").write_text(f"# {it.name}\n" + serialize(it.graph))
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(serialize_many((it.name, it.graph) for it in items))
    sys.stdout.write(f"{len(items)} graphs written\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_generate(args)
    except (ParseError, CapacityError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
