"""Command-line entry point: ``dagjunction <subcommand> ...``.

Exit codes: 0 success, 1 usage or I/O error, 2 validation failure
(cycle, unknown labels, broken complexity bound), 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from typing import TextIO

from .arborescence import ArcClass, build_arborescence, classify_arcs
from .graph import CycleError, Digraph, ParseError, parse_edge_list, serialize_edge_list, validate_dag
from .junction import build_junction_index, default_jobs, is_junction, iter_junction_pairs, junctions_of_pairs
from .lca import lcas_of_pairs
from .oracle import enumerate_disjoint_path_pair, oracle_is_junction
from .testkit import FAMILIES, GenSpec, fixtures, generate, small_suite

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Digraph:
    try:
        return parse_edge_list(_read_text(path))
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_dag(path: str) -> Digraph:
    g = _load_graph(path)
    try:
        validate_dag(g)
    except CycleError as exc:
        raise CliError(f"{path}: not a DAG, {exc}", EXIT_INVALID) from None
    return g


def _load_pairs(path: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CliError(f"{path}: line {lineno}: expected '<label> <label>'")
        pairs.append((parts[0], parts[1]))
    return pairs


def _source(g: Digraph, label: str) -> int:
    if label not in g.index:
        raise CliError(f"unknown source label {label!r}")
    return g.index[label]


def cmd_validate(args, out: TextIO) -> int:
    g = _load_graph(args.graph)
    try:
        order = validate_dag(g)
    except CycleError as exc:
        print(" ".join(exc.labels), file=sys.stderr)
        return EXIT_INVALID
    for v in order:
        print(g.labels[v], file=out)
    return EXIT_OK


def _emit_reports(reports, fmt: str, out: TextIO, with_lcas: bool) -> int:
    failed = 0
    for r in reports:
        if fmt == "jsonl":
            obj = {"u": r.u, "v": r.v}
            if r.error is not None:
                obj["error"] = r.error
            else:
                obj["junctions"] = r.junctions
                if with_lcas:
                    obj["lcas"] = r.lcas
            print(json.dumps(obj, ensure_ascii=False), file=out)
        elif r.error is not None:
            print(f"{r.u}\t{r.v}\tERROR {r.error}", file=out)
        else:
            cols = [r.u, r.v, ",".join(r.junctions)]
            if with_lcas:
                cols.append(",".join(r.lcas))
            print("\t".join(cols), file=out)
        failed += r.error is not None
    if reports and failed == len(reports):
        return EXIT_INVALID
    return EXIT_OK


def cmd_junctions(args, out: TextIO) -> int:
    g = _load_dag(args.graph)
    reports = junctions_of_pairs(g, _load_pairs(args.pairs), jobs=args.jobs)
    return _emit_reports(reports, args.format, out, with_lcas=False)


def cmd_lcas(args, out: TextIO) -> int:
    g = _load_dag(args.graph)
    reports = lcas_of_pairs(g, _load_pairs(args.pairs), jobs=args.jobs)
    return _emit_reports(reports, args.format, out, with_lcas=True)


def cmd_source_pairs(args, out: TextIO) -> int:
    g = _load_dag(args.graph)
    idx = build_junction_index(g, _source(g, args.source))
    lab = g.labels
    for u, v in iter_junction_pairs(idx, lab):
        out.write(f"{lab[u]}\t{lab[v]}\n")
    return EXIT_OK


def cmd_dump_tree(args, out: TextIO) -> int:
    g = _load_dag(args.graph)
    arb = build_arborescence(g, _source(g, args.source))
    lab = g.labels
    for v in reversed(arb.vertex_of_post):
        print(f"{lab[v]} {arb.post[v]} {arb.minpost[v]} {lab[arb.tree_parent[v]]}", file=out)
    counts = Counter(classify_arcs(g, arb).values())
    footer = " ".join(f"{c.value}={counts.get(c, 0)}" for c in ArcClass)
    print(f"# {footer}", file=out)
    return EXIT_OK


def _genspec(args) -> GenSpec:
    params: dict = {}
    if args.arc_prob is not None:
        params["arc_prob"] = args.arc_prob
    if args.m is not None:
        params["m"] = args.m
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    if args.roots is not None:
        params["roots"] = args.roots
    return GenSpec(args.family, args.n, args.seed, params)


def cmd_gen(args, out: TextIO) -> int:
    try:
        g = generate(_genspec(args))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    out.write(serialize_edge_list(g))
    return EXIT_OK


def _check_graph(name: str, g: Digraph, enum_max: int) -> str | None:
    """Sweep all triples; return a reproducer for the first mismatch."""
    n = g.n
    for s in range(n):
        idx = build_junction_index(g, s, debug=True)
        for u in range(n):
            for v in range(n):
                got = is_junction(idx, u, v)
                want = oracle_is_junction(g, s, u, v)
                brute = want
                if n <= enum_max:
                    brute = enumerate_disjoint_path_pair(g, s, u, v, max_size=enum_max)
                if got != want or want != brute:
                    lab = g.labels
                    return (
                        f"mismatch on {name}: s={lab[s]} u={lab[u]} v={lab[v]} "
                        f"index={got} flow={want} enumeration={brute}\n"
                        + serialize_edge_list(g)
                    )
    return None


def cmd_oracle_check(args, out: TextIO) -> int:
    if args.graph:
        graphs = [(args.graph, _load_dag(args.graph))]
    elif args.suite:
        graphs = list(fixtures().items()) + list(small_suite())
    else:
        base = _genspec(args)
        graphs = []
        for k in range(args.count):
            spec = GenSpec(base.family, base.n, base.seed + k, base.params)
            graphs.append((f"{spec.family} n={spec.n} seed={spec.seed}", generate(spec)))
    triples = 0
    for name, g in graphs:
        problem = _check_graph(name, g, args.enum_max)
        if problem is not None:
            sys.stderr.write(problem)
            return EXIT_MISMATCH
        triples += g.n ** 3
    print(f"checked {len(graphs)} graphs, {triples} triples, 0 mismatches", file=out)
    return EXIT_OK


def bench_graph(g: Digraph, sources: list[int], queries: int = 1000) -> dict:
    """Time per-source builds and queries; track the worst arc-count ratio."""
    bound = g.m + g.n
    worst = 0
    build = 0.0
    query = 0.0
    nq = 0
    violations = 0
    for s in sources:
        t0 = time.perf_counter()
        idx = build_junction_index(g, s)
        t1 = time.perf_counter()
        build += t1 - t0
        worst = max(worst, idx.stats.arcs_examined)
        violations += idx.stats.arcs_examined > bound
        members = idx.arb.vertex_of_post
        k = len(members)
        t1 = time.perf_counter()
        for i in range(min(queries, k * k)):
            is_junction(idx, members[i % k], members[(i * 7 + 1) % k])
        query += time.perf_counter() - t1
        nq += min(queries, k * k)
    return {
        "n": g.n,
        "m": g.m,
        "sources": len(sources),
        "build_s": build,
        "build_ms_per_source": 1000 * build / max(1, len(sources)),
        "max_arcs_examined": worst,
        "bound": bound,
        "violations": violations,
        "queries_per_s": nq / query if query > 0 else float("inf"),
    }


def cmd_bench(args, out: TextIO) -> int:
    rows = []
    for fam in args.family:
        for n in args.sizes:
            params = {}
            if fam == "random-dag":
                params["m"] = min(args.arcs_per_vertex * n, n * (n - 1) // 2)
            g = generate(GenSpec(fam, n, args.seed, params))
            step = max(1, g.n // args.sources) if args.sources else 1
            row = bench_graph(g, list(range(0, g.n, step)))
            row["family"] = fam
            rows.append(row)
    header = ("family", "n", "m", "sources", "build_ms_per_source", "max_arcs_examined", "bound", "queries_per_s")
    print("\t".join(header), file=out)
    for r in rows:
        print(
            f"{r['family']}\t{r['n']}\t{r['m']}\t{r['sources']}\t{r['build_ms_per_source']:.3f}\t"
            f"{r['max_arcs_examined']}\t{r['bound']}\t{r['queries_per_s']:.0f}",
            file=out,
        )
    bad = sum(r["violations"] for r in rows)
    if bad:
        print(f"{bad} builds examined more than m + n arcs", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_gen_args(p: argparse.ArgumentParser, family_default: str | None = None) -> None:
    p.add_argument("--family", choices=FAMILIES, default=family_default, required=family_default is None)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--arc-prob", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--roots", type=int)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dagjunction", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check acyclicity, print a topological order")
    p.add_argument("graph")
    p.set_defaults(func=cmd_validate)

    for name, func, what in (
        ("junctions", cmd_junctions, "list all junctions of each pair"),
        ("lcas", cmd_lcas, "list all lowest common ancestors of each pair"),
    ):
        p = sub.add_parser(name, help=what)
        p.add_argument("graph")
        p.add_argument("pairs")
        p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
        p.add_argument("--jobs", type=int, default=default_jobs(),
                       help="worker processes for per-source builds (env DAGJUNCTION_JOBS)")
        p.set_defaults(func=func)

    p = sub.add_parser("source-pairs", help="all pairs having SOURCE as a junction")
    p.add_argument("graph")
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_source_pairs)

    p = sub.add_parser("dump-tree", help="print the DFS arborescence from SOURCE")
    p.add_argument("graph")
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_dump_tree)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    _add_gen_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-check", help="compare the index with the max-flow oracle")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph")
    src.add_argument("--suite", action="store_true", help="fixtures plus the seeded small-DAG suite")
    _add_gen_args(p, family_default="random-dag")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--enum-max", type=int, default=8,
                   help="also run path enumeration on graphs with at most this many vertices")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("bench", help="time index builds and check the arc-count bound")
    p.add_argument("--family", choices=FAMILIES, action="append", required=True)
    p.add_argument("--sizes", type=_int_list, default=[500, 1000])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--arcs-per-vertex", type=int, default=10)
    p.add_argument("--sources", type=int, default=0, help="sample this many sources (0 = all)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out or sys.stdout)
    except CliError as exc:
        print(f"dagjunction: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
