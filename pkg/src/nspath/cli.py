"""Command-line entry point.

Exit status: 0 for a "yes"/found answer, 1 for "no"/none, 2 for usage or
input errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import corpus
from .formats import DOC, EDGELIST, GraphDocument, ParseError, parse_graph, serialize
from .forest import bfs_altitude, exact_length_path, find_path_forest, make_altitude
from .generators import gen_gnp, gen_layered
from .graph import GraphError, distances_from
from .oracle import induced_length_set
from .solver import Found, straighten

YES, NO, ERROR = 0, 1, 2


def _read(args) -> GraphDocument:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    doc = parse_graph(text, args.format)
    if doc.name is None:
        doc.name = args.input if args.input not in (None, "-") else "stdin"
    return doc


def _emit(lines, out=None):
    out = out or sys.stdout
    out.write("".join(line + "\n" for line in lines))


def cmd_nsp(args) -> int:
    report = corpus.run_nsp(_read(args))
    sys.stdout.write(report.render(with_time=not args.quiet))
    return YES if report.verdict else NO


def cmd_exact_length(args) -> int:
    doc = _read(args)
    G = doc.graph()
    d = distances_from(G, doc.u)[doc.v]
    if d is None:
        _emit(["VERDICT no", "DIST inf"])
        return NO
    path = exact_length_path(G, doc.u, doc.v, args.k)
    lines = [f"VERDICT {'yes' if path else 'no'}", f"DIST {d}", f"TARGET {d + args.k}"]
    if path:
        lines.append("CERT " + " ".join(map(str, path)))
    _emit(lines)
    return YES if path else NO


def cmd_forest(args) -> int:
    doc = _read(args)
    G = doc.graph()
    h = args.h if args.h is not None else doc.h
    if h is None:
        raise ParseError("forest needs h (from --h or the document)")
    if doc.targets is None:
        raise ParseError("forest needs a document with 'targets'")
    A = make_altitude(G, doc.parts) if doc.parts is not None else bfs_altitude(G, doc.u)
    F = find_path_forest(G, A, doc.targets, h)
    lines = [f"VERDICT {'yes' if F else 'no'}"]
    if F:
        lines += ["PATH " + " ".join(map(str, c.sequence)) for c in F.components]
    _emit(lines)
    return YES if F else NO


def cmd_straighten(args) -> int:
    doc = _read(args)
    result = straighten(doc.graph(), doc.u, doc.v)
    if isinstance(result, Found):
        _emit(["RESULT found", "CERT " + " ".join(map(str, result.path))])
        return YES
    lines = ["RESULT reduced", "LABELS " + " ".join(map(str, result.labels))]
    for rec in result.records:
        added = " ".join(f"{a}-{b}" for a, b in sorted(rec.added_edges))
        lines.append(f"RECORD K={','.join(map(str, sorted(rec.component)))} "
                     f"N={','.join(map(str, sorted(rec.boundary)))} ADDED={added}")
    _emit(lines)
    reduced = GraphDocument(result.final.n, result.final.edges(), result.u, result.v,
                            f"{doc.name}-reduced")
    sys.stdout.write(serialize(reduced, args.format))
    return NO


def cmd_oracle(args) -> int:
    doc = _read(args)
    G = doc.graph()
    d = distances_from(G, doc.u)[doc.v]
    lengths = sorted(induced_length_set(G, doc.u, doc.v))
    yes = d is not None and any(x > d for x in lengths)
    _emit([f"VERDICT {'yes' if yes else 'no'}",
           f"DIST {'inf' if d is None else d}",
           "LENGTHS " + " ".join(map(str, lengths))])
    return YES if yes else NO


def cmd_gen(args) -> int:
    if args.widths:
        widths = [int(w) for w in args.widths.split(",")]
        doc = gen_layered(widths, args.p, args.seed)
    elif args.n is not None:
        doc = gen_gnp(args.n, args.p, args.seed)
    else:
        raise ParseError("gen needs --n (G(n,p)) or --widths (layered)")
    sys.stdout.write(serialize(doc, args.format))
    return YES


def cmd_selftest(args) -> int:
    failures = 0
    checked = 0
    for n in range(1, args.max_n + 1):
        for G in corpus.all_graphs(n):
            for u in range(n):
                for v in range(n):
                    problems = corpus.check_nsp(G, u, v)
                    checked += 1
                    for p in problems:
                        failures += 1
                        print(f"FAIL exhaustive n={n} edges={G.edges()} u={u} v={v}: {p}")
        if not args.quiet:
            print(f"EXHAUSTIVE n={n} instances={checked} failures={failures}")
    docs = list(corpus.gnp_corpus(args.trials, args.seed))
    docs += list(corpus.layered_corpus(max(1, args.trials // 5), args.seed))
    for doc in docs:
        for p in corpus.check_document(doc):
            failures += 1
            print(f"FAIL {p}")
    print(f"SELFTEST instances={checked + len(docs)} failures={failures}")
    return YES if failures == 0 else NO


def cmd_bench(args) -> int:
    for report in corpus.run_bench(args.trials, args.seed, args.max_n):
        sys.stdout.write(report.render(with_time=not args.quiet))
        sys.stdout.flush()
    return YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nspath", description="Induced non-shortest uv-paths, with certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p):
        p.add_argument("--input", default="-", help="graph file, '-' for stdin")
        p.add_argument("--format", choices=(EDGELIST, DOC), default=EDGELIST)
        p.add_argument("--quiet", action="store_true", help="omit timing lines")

    io(sub.add_parser("nsp", help="decide whether a uv-NSP exists"))
    p = sub.add_parser("exact-length", help="induced uv-path of length d(u,v)+k")
    io(p)
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("forest", help="narrow path forest query")
    io(p)
    p.add_argument("--h", type=int)
    io(sub.add_parser("straighten", help="reduce to an all-straight graph"))
    io(sub.add_parser("oracle", help="brute-force verdict and length set"))

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--widths", help="comma-separated layer widths, e.g. 1,2,2,1")
    p.add_argument("--format", choices=(EDGELIST, DOC), default=DOC)

    p = sub.add_parser("selftest", help="oracle equivalence over small and random corpora")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("bench", help="timed runs over layered families")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=40, help="largest instance size")
    p.add_argument("--quiet", action="store_true", help="omit timing lines")
    return parser


COMMANDS = {
    "nsp": cmd_nsp, "exact-length": cmd_exact_length, "forest": cmd_forest,
    "straighten": cmd_straighten, "oracle": cmd_oracle, "gen": cmd_gen,
    "selftest": cmd_selftest, "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
