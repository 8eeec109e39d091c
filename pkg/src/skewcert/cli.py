"""Command-line entry point: ``skewcert <subcommand> ...``.

Graphs travel between subcommands as edge-list text on standard streams.
Exit codes: 0 success, 2 usage or parse error, 3 parameters outside a
construction's range, 4 unresolved search, 5 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence, TextIO

from skewcert.certify import (
    CertificateError,
    CycleType,
    EdgeWeighting,
    classify_cycle,
    counting_bound,
    cycle_templates,
    cycle_weight,
    enumerate_min_cycles,
    face_weight_audit,
    paper_weighting_p,
    paper_weighting_q,
    type_i_face_count,
)
from skewcert.families import (
    FamilyError,
    h_deletion_set,
    petersen,
    q3_reduction,
    q_graph,
)
from skewcert.graph import Graph, GraphError, complete_bipartite, complete_graph, delete_edges
from skewcert.io import ParseError, format_edgelist, parse_edgelist, parse_weights, to_dot
from skewcert.planarity import NonplanarError, embed, is_planar, kuratowski_witness
from skewcert.report import DEFAULT_SEED, GRIDS, paper_report
from skewcert.solver import Status, skewness_bruteforce, skewness_exact, skewness_heuristic

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARAMS = 3
EXIT_UNRESOLVED = 4
EXIT_FAILED = 5


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_USAGE) from None


def _read_graph(path: str) -> Graph:
    text = _read_text(path)
    try:
        return parse_edgelist(text)
    except ParseError as exc:
        where = "<stdin>" if path == "-" else path
        raise CliError(f"{where}: {exc}", EXIT_USAGE) from None


def _dump(record: object, out: TextIO) -> None:
    out.write(json.dumps(record, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise CliError(f"--family {args.family} needs {' '.join(missing)}", EXIT_USAGE)


def _family_graph(args: argparse.Namespace) -> Graph:
    fam = args.family
    if fam == "q":
        _need(args, "s", "k")
        return q_graph(args.s, args.k)
    if fam == "h":
        _need(args, "s", "k")
        return delete_edges(q_graph(args.s, args.k), h_deletion_set(args.s, args.k))
    if fam == "petersen":
        _need(args, "n", "k")
        return petersen(args.n, args.k)
    if fam == "petersen4k":
        _need(args, "k")
        return petersen(4 * args.k, args.k)
    if fam == "complete":
        _need(args, "n")
        return complete_graph(args.n)
    if fam == "bipartite":
        _need(args, "p", "q")
        return complete_bipartite(args.p, args.q)
    raise CliError(f"unknown family {fam!r}", EXIT_USAGE)


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    g = _family_graph(args)
    out.write(to_dot(g) if args.format == "dot" else format_edgelist(g))
    return EXIT_OK


def cmd_planar(args: argparse.Namespace, out: TextIO) -> int:
    g = _read_graph(args.input)
    if args.embed:
        try:
            emb = embed(g)
        except NonplanarError as exc:
            out.write("nonplanar\n")
            if args.witness:
                _write_witness(g, exc.witness.edges, exc.witness.kind.value, out)
            return EXIT_OK
        out.write("planar\n")
        out.write(f"faces: {emb.face_count}\n")
        for i in range(len(emb.faces)):
            walk = " ".join(g.edge_label(e) for e in emb.face_edges(i))
            out.write(f"face {i}: {walk}\n")
        return EXIT_OK
    if is_planar(g):
        out.write("planar\n")
        return EXIT_OK
    out.write("nonplanar\n")
    if args.witness:
        w = kuratowski_witness(g)
        _write_witness(g, w.edges, w.kind.value, out)
    return EXIT_OK


def _write_witness(g: Graph, edges: Sequence[tuple[int, int]], kind: str, out: TextIO) -> None:
    out.write(f"witness: {kind} subdivision, {len(edges)} edges\n")
    for e in edges:
        out.write(f"{e[0]} {e[1]}\n")


def _weighting(args: argparse.Namespace) -> EdgeWeighting:
    choice = args.weighting
    if args.input is not None:
        g = _read_graph(args.input)
        if choice == "paper":
            raise CliError("--weighting paper needs --family; use uniform or a weight file", EXIT_USAGE)
    else:
        if args.family not in ("q", "petersen4k"):
            raise CliError("certify takes --family q or petersen4k, or --input", EXIT_USAGE)
        if choice == "paper":
            if args.family == "q":
                _need(args, "s", "k")
                return paper_weighting_q(args.s, args.k)
            _need(args, "k")
            return paper_weighting_p(args.k)
        g = _family_graph(args)
    if choice == "uniform":
        return EdgeWeighting.uniform(g)
    text = _read_text(choice)
    try:
        return EdgeWeighting(g, parse_weights(text, g))
    except ParseError as exc:
        raise CliError(f"{choice}: {exc}", EXIT_USAGE) from None
    except GraphError as exc:
        raise CliError(f"{choice}: {exc}", EXIT_USAGE) from None


def cmd_certify(args: argparse.Namespace, out: TextIO) -> int:
    w = _weighting(args)
    cert = counting_bound(w)
    if args.json:
        _dump(cert.to_record(), out)
    else:
        out.write(cert.format_text())
    return EXIT_OK


def cmd_cycles(args: argparse.Namespace, out: TextIO) -> int:
    w = paper_weighting_p(args.k)
    budget = 8 * args.k - 8 if args.budget is None else args.budget
    cycles = enumerate_min_cycles(w, budget, workers=args.threads)
    templates = cycle_templates(args.k)
    g = w.graph
    rows = []
    for c in cycles:
        cls = classify_cycle(c, args.k, templates)
        rows.append((c, cycle_weight(c, w), cls))
    counts = Counter(cls.kind for _, _, cls in rows)
    if args.json:
        _dump(
            {
                "k": args.k,
                "budget": budget,
                "count": len(rows),
                "classes": {t.value: counts[t] for t in CycleType},
                "cycles": [
                    {
                        "vertices": [g.label(x) for x in c],
                        "weight": wt,
                        "type": cls.kind.value,
                        "anchor": cls.anchor,
                    }
                    for c, wt, cls in rows
                ],
            },
            out,
        )
        return EXIT_OK
    for c, wt, cls in rows:
        anchor = "" if cls.anchor is None else f" i={cls.anchor}"
        out.write(f"{cls.kind.value:7s}{anchor:6s} weight {wt}: {' '.join(g.label(x) for x in c)}\n")
    summary = ", ".join(f"{t.value}: {counts[t]}" for t in CycleType)
    out.write(f"{len(rows)} cycles of weight <= {budget} ({summary})\n")
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, out: TextIO) -> int:
    if args.family == "petersen4k":
        _need(args, "k")
        x = type_i_face_count(args.k)
        if args.json:
            _dump({"k": args.k, "faces": 3 * args.k + 1, "W_prime": 12 * args.k, "x": str(x)}, out)
        else:
            out.write(f"4x + 8({3 * args.k + 1} - x) = 2*{12 * args.k}  =>  x = {x}\n")
        return EXIT_OK
    if args.family == "q":
        _need(args, "s", "k")
        h = delete_edges(q_graph(args.s, args.k), h_deletion_set(args.s, args.k))
        w = paper_weighting_q(args.s, args.k).restrict(h)
    elif args.input is not None:
        h = _read_graph(args.input)
        if args.weighting == "uniform":
            w = EdgeWeighting.uniform(h)
        else:
            try:
                w = EdgeWeighting(h, parse_weights(_read_text(args.weighting), h), allow_zero=True)
            except GraphError as exc:
                raise CliError(f"{args.weighting}: {exc}", EXIT_USAGE) from None
    else:
        raise CliError("audit takes --family q, --family petersen4k, or --input", EXIT_USAGE)
    try:
        emb = embed(h)
    except NonplanarError:
        raise CliError("audit needs a planar graph", EXIT_FAILED) from None
    audit = face_weight_audit(emb, w)
    if args.json:
        _dump(
            {
                "faces": [
                    {"length": len(emb.faces[i]), "weight": wt}
                    for i, wt in enumerate(audit.face_weights)
                ],
                "face_total": audit.face_total,
                "edge_total": audit.edge_total,
                "identity_holds": audit.identity_holds,
            },
            out,
        )
        return EXIT_OK
    out.write("face  length  weight\n")
    for i, wt in enumerate(audit.face_weights):
        out.write(f"{i:4d}  {len(emb.faces[i]):6d}  {wt:6d}\n")
    out.write(f"sum of face weights {audit.face_total} = 2 * {audit.edge_total}: "
              f"{'true' if audit.identity_holds else 'false'}\n")
    return EXIT_OK


def cmd_construct_h(args: argparse.Namespace, out: TextIO) -> int:
    deleted = h_deletion_set(args.s, args.k)
    h = delete_edges(q_graph(args.s, args.k), deleted)
    if args.verify:
        planar = is_planar(h)
        out.write(f"{len(deleted)} edges deleted; residual planar: {'true' if planar else 'false'}\n")
        return EXIT_OK if planar else EXIT_FAILED
    if args.format == "dot":
        out.write(to_dot(q_graph(args.s, args.k), highlight=deleted, name="Q"))
        return EXIT_OK
    for a, b in deleted:
        out.write(f"# deleted {a} {b}\n")
    out.write(format_edgelist(h))
    return EXIT_OK


def cmd_skewness(args: argparse.Namespace, out: TextIO) -> int:
    g = _read_graph(args.input)
    if args.mode == "brute":
        result = skewness_bruteforce(g, cap=args.cap)
    elif args.mode == "heuristic":
        if args.time_budget is not None:
            result = skewness_heuristic(g, time_budget=args.time_budget, seed=args.seed)
        else:
            result = skewness_heuristic(g, seed=args.seed, restarts=args.restarts)
    else:
        result = skewness_exact(g, budget=args.node_cap, lower_bound=args.lower_bound, seed=args.seed)
    if args.json:
        _dump(result.to_record(timings=args.timings), out)
    else:
        out.write(result.format_text(g, timings=args.timings))
    return EXIT_UNRESOLVED if result.status is Status.UNRESOLVED else EXIT_OK


def cmd_reduce(args: argparse.Namespace, out: TextIO) -> int:
    red = q3_reduction(args.k)
    record = {
        "k": args.k,
        "degree_two": list(red.degree_two),
        "degree_two_matches": red.degree_two_matches,
        "reduced_vertices": red.reduced.vertex_count,
        "reduced_edges": red.reduced.edge_count,
        "isomorphic_to_Q3": red.isomorphic,
        "rim_cycle_mapping_ok": red.rim_cycle_mapping_ok,
    }
    if args.json:
        _dump(record, out)
    else:
        out.write(f"degree-2 vertices of J: {' '.join(red.degree_two)}\n")
        out.write(f"matches expected list: {str(red.degree_two_matches).lower()}\n")
        out.write(f"reduced graph: {red.reduced.vertex_count} vertices, {red.reduced.edge_count} edges\n")
        out.write(f"isomorphic to Q_3({args.k}): {str(red.isomorphic).lower()}\n")
    ok = red.isomorphic and red.degree_two_matches and red.rim_cycle_mapping_ok
    return EXIT_OK if ok else EXIT_FAILED


def cmd_report(args: argparse.Namespace, out: TextIO) -> int:
    report = paper_report(grid=args.grid, seed=args.seed, threads=args.threads)
    out.write(report.to_json() if args.json else report.format_text())
    return EXIT_OK if report.passed else EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(f"{self.prog}: {message}", EXIT_USAGE)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _family_args(p: argparse.ArgumentParser, families: Sequence[str], required: bool = True) -> None:
    p.add_argument("--family", choices=families, required=required)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewcert", description="Skewness bounds, certificates and exact search.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a graph from a family")
    _family_args(p, ["q", "h", "petersen", "petersen4k", "complete", "bipartite"])
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("planar", help="planarity verdict, embedding or Kuratowski witness")
    p.add_argument("--input", default="-")
    p.add_argument("--embed", action="store_true", help="print faces as edge walks")
    p.add_argument("--witness", action="store_true", help="print a K5/K3,3 subdivision")
    p.set_defaults(func=cmd_planar)

    p = sub.add_parser("certify", help="counting lower bound for a weighted graph")
    _family_args(p, ["q", "petersen4k"], required=False)
    p.add_argument("--input")
    p.add_argument("--weighting", default="paper", help="paper, uniform, or a file of 'u v w' lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("cycles", help="light cycles of P(4k,k) under the rim/spoke/inner weighting")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("audit", help="face-weight table of a planar residual")
    _family_args(p, ["q", "petersen4k"], required=False)
    p.add_argument("--input")
    p.add_argument("--weighting", default="uniform", help="uniform or a file of 'u v w' lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("construct-h", help="planar spanning subgraph of Q_s(k)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.set_defaults(func=cmd_construct_h)

    p = sub.add_parser("skewness", help="exact, brute-force or heuristic skewness")
    p.add_argument("--input", default="-")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
    mode.add_argument("--heuristic", dest="mode", action="store_const", const="heuristic")
    p.add_argument("--node-cap", type=_positive)
    p.add_argument("--lower-bound", type=int, default=0)
    p.add_argument("--cap", type=int, help="largest set size tried in brute-force mode")
    p.add_argument("--time-budget", type=float, help="heuristic wall-clock budget in seconds")
    p.add_argument("--restarts", type=int, default=50, help="heuristic restarts when no time budget is set")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include elapsed time in the output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_skewness, mode="exact")

    p = sub.add_parser("reduce", help="reduce P(4k,k) to a subdivision of Q_3(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("report", help="run the verification grid")
    p.add_argument("--grid", choices=GRIDS, default="small")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except CliError as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except (FamilyError, CertificateError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARAMS
    except GraphError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
