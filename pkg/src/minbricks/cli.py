"""Batch command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Optional, Sequence

from .enumerate import (ORACLE_SIZES, Catalog, EnumerationError, THREADS_ENV, conjecture_stats,
                        generate_minimal_bricks, oracle_bricks, oracle_minimal_bricks)
from .families import FAMILIES, PARAMETERLESS, FamilyError, family
from .graph import Graph, GraphError, parse_graph6, write_graph6
from .minor import DEFAULT_BUDGET, MinorBudgetExceeded, is_matching_minor
from .predicates import has_perfect_matching, is_bicritical, is_brick, is_minimal_brick, is_three_connected
from .verify import (verify_edge_bound, verify_k4_prism_minor, verify_sparse_closure,
                     verify_three_cubic)

PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "brick": is_brick,
    "minimal-brick": is_minimal_brick,
    "bicritical": is_bicritical,
    "3-connected": is_three_connected,
    "perfect-matching": has_perfect_matching,
}

THEOREMS = ("edge-bound", "three-cubic", "k4-prism-minor", "sparse-closure")


class UsageError(Exception):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True)


def _load_catalog(args: argparse.Namespace) -> Catalog:
    if getattr(args, "catalog", None):
        return Catalog.read(args.catalog)
    return generate_minimal_bricks(args.max_vertices, threads=args.threads)


def cmd_generate(args: argparse.Namespace, out) -> int:
    cat = generate_minimal_bricks(args.max_vertices, include_petersen=not args.no_petersen,
                                  threads=args.threads)
    cat.write(args.out)
    counts: dict[str, int] = {}
    for e in cat.ordered():
        counts[str(e.vertex_count)] = counts.get(str(e.vertex_count), 0) + 1
    print(_dump({"entries": len(cat), "by_vertices": counts, "graph6": args.out}), file=out)
    return 0


def cmd_check(args: argparse.Namespace, out, stdin) -> int:
    pred = PREDICATES[args.predicate]
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        print(_dump({"graph6": line, "predicate": args.predicate, "pass": pred(g)}), file=out)
    return 0


def cmd_family(args: argparse.Namespace, out) -> int:
    kind = args.kind.replace("-", "_")
    print(write_graph6(family(kind, args.param)), file=out)
    return 0


def cmd_minor(args: argparse.Namespace, out) -> int:
    pattern, host = parse_graph6(args.pattern), parse_graph6(args.host)
    try:
        answer: Optional[bool] = is_matching_minor(pattern, host, max_host_vertices=args.budget)
        refused = False
    except MinorBudgetExceeded:
        answer, refused = None, True
    print(_dump({"answer": answer, "refused": refused}), file=out)
    return 0


def cmd_verify(args: argparse.Namespace, out) -> int:
    if args.theorem == "k4-prism-minor":
        sizes = [n for n in ORACLE_SIZES if n <= args.max_vertices]
        if not sizes:
            raise UsageError("k4-prism-minor needs --max-vertices >= 4")
        reports = [verify_k4_prism_minor(n) for n in sizes]
        records = [r for rep in reports for r in rep.records]
        report = reports[-1]
        report.records = records
        report.scope = sizes[-1]
    elif args.theorem == "sparse-closure":
        cat = _load_catalog(args)
        samples = [e.graph for e in cat.ordered() if e.vertex_count <= min(10, args.max_vertices)]
        report = verify_sparse_closure(samples, [e.graph for e in cat.ordered()])
    else:
        cat = _load_catalog(args)
        fn = verify_edge_bound if args.theorem == "edge-bound" else verify_three_cubic
        report = fn(cat)
    print(report.to_json(), file=out)
    return 0 if report.ok else 1


def cmd_oracle(args: argparse.Namespace, out) -> int:
    graphs = oracle_minimal_bricks(args.vertices) if args.minimal else oracle_bricks(args.vertices)
    for g in sorted(graphs, key=lambda g: g.canonical_key()):
        print(write_graph6(g), file=out)
    return 0


def cmd_stats(args: argparse.Namespace, out) -> int:
    print(_dump(conjecture_stats(Catalog.read(args.catalog))), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minbricks", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def threads(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--threads", type=int, default=None,
                        help=f"worker processes (default: ${THREADS_ENV} or 1)")

    g = sub.add_parser("generate", help="generate minimal bricks by strict extensions")
    g.add_argument("--max-vertices", type=int, required=True)
    g.add_argument("--out", required=True, help="graph6 output; provenance goes to <stem>.jsonl")
    g.add_argument("--no-petersen", action="store_true")
    threads(g)

    c = sub.add_parser("check", help="test graph6 lines from stdin against a predicate")
    c.add_argument("--predicate", choices=sorted(PREDICATES), required=True)

    f = sub.add_parser("family", help="print a named graph as graph6")
    f.add_argument("--kind", required=True,
                   choices=sorted(set(FAMILIES) | {k.replace("_", "-") for k in FAMILIES}))
    f.add_argument("--param", type=int, default=None)

    m = sub.add_parser("minor", help="decide whether PATTERN is a matching minor of HOST")
    m.add_argument("--pattern", required=True)
    m.add_argument("--host", required=True)
    m.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    v = sub.add_parser("verify", help="machine-check a theorem at desk scale")
    v.add_argument("--theorem", choices=THEOREMS, required=True)
    v.add_argument("--max-vertices", type=int, required=True)
    v.add_argument("--catalog", default=None, help="reuse a generated graph6 catalog")
    threads(v)

    o = sub.add_parser("oracle", help="brute-force (minimal) bricks on n vertices")
    o.add_argument("--vertices", type=int, choices=ORACLE_SIZES, required=True)
    o.add_argument("--minimal", action="store_true")

    s = sub.add_parser("stats", help="cubic-vertex statistics of a catalog")
    s.add_argument("--catalog", required=True)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "family" and args.param is None \
            and args.kind.replace("-", "_") not in PARAMETERLESS:
        print(f"minbricks family: --param is required for {args.kind}", file=sys.stderr)
        return 2
    try:
        if args.command == "check":
            return cmd_check(args, out, stdin)
        handler = {
            "generate": cmd_generate,
            "family": cmd_family,
            "minor": cmd_minor,
            "verify": cmd_verify,
            "oracle": cmd_oracle,
            "stats": cmd_stats,
        }[args.command]
        return handler(args, out)
    except (UsageError, FamilyError, EnumerationError, GraphError, OSError) as exc:
        print(f"minbricks {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
