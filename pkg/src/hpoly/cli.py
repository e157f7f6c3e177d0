"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (bad input, not-a-tree, ...),
2 when a search budget is exceeded, 64 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import closed_forms, fixtures
from .errors import BudgetExceeded, DomainError, HPolyError
from .generators import DEFAULT_NODE_BUDGET, enumerate_minimal_generators, hpoly
from .graph import Graph, named_pattern, parse_graph, parse_graph6, read_graph, stats
from .invariants import (coefficient_report, component_count_from_pairs,
                         has_hypercube, hypercube_first_appearance,
                         predicted_top_coefficients, pseudotree_slope_at_two,
                         pseudotree_slope_formula, recover_tree_degrees)
from .oracle import DEFAULT_COLORING_BUDGET, build, count_induced, count_induced_c4
from .poly import Poly
from .restrained import rho

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _load(spec: str) -> Graph:
    if spec.startswith("fixture:"):
        return parse_graph(fixtures.fixture_text(spec[len("fixture:"):]))
    path = Path(spec)
    if not path.exists():
        raise DomainError(f"no such graph file: {spec}")
    return read_graph(path)


def _pattern(spec: str) -> Graph:
    try:
        h = named_pattern(spec)
    except DomainError:
        h = parse_graph6(spec)
    if h.m > 4:
        print(f"warning: pattern with {h.m} edges; generator search may be slow",
              file=sys.stderr)
    return h


def _k_values(args) -> list[int]:
    if getattr(args, "k", None) is not None:
        return [args.k]
    text = getattr(args, "k_range", None) or "1..6"
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad k range {text!r}; use A..B") from None
    if lo_i < 0 or hi_i < lo_i:
        raise UsageError(f"bad k range {text!r}")
    return list(range(lo_i, hi_i + 1))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else str(x)


def _emit_poly(args, p: Poly, out) -> None:
    ks = _k_values(args)
    if args.json:
        doc = {"polynomial": p.to_text(), "coefficients": p.to_json_list(),
               "values": {str(k): _fmt(p(k)) for k in ks}}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    out.write(p.to_text() + "\n")
    out.write("k\tvalue\n")
    for k in ks:
        out.write(f"{k}\t{_fmt(p(k))}\n")


def _cmd_chromatic(args, out):
    _emit_poly(args, rho(_load(args.graph)), out)


def _cmd_pairs(args, out):
    _emit_poly(args, closed_forms.pairs_general(_load(args.graph)), out)


def _cmd_clique(args, out):
    _emit_poly(args, closed_forms.clique_general(_load(args.graph), args.t), out)


def _cmd_c4(args, out):
    _emit_poly(args, closed_forms.c4_count_poly(_load(args.graph)), out)


def _cmd_c6(args, out):
    rows = closed_forms.C6_PRINTED_ROWS if args.rows == "printed" else closed_forms.C6_ROWS
    _emit_poly(args, closed_forms.c6_count_poly(_load(args.graph), rows), out)


def _cmd_hpoly(args, out):
    g, h = _load(args.graph), _pattern(args.pattern)
    if args.dump_generators:
        gens = enumerate_minimal_generators(g, h, budget=args.budget_nodes)
        Path(args.dump_generators).write_text(
            json.dumps([x.to_json() for x in gens], indent=1) + "\n")
    _emit_poly(args, hpoly(g, h, budget=args.budget_nodes), out)


def _cmd_oracle(args, out):
    g = _load(args.graph)
    h = _pattern(args.pattern) if args.pattern else None
    rows = []
    for k in _k_values(args):
        cg = build(g, k, budget=args.budget_colorings)
        row = {"k": k, "vertices": cg.vertex_count, "edges": cg.edge_count,
               "triangles": cg.triangle_count(), "squares": count_induced_c4(cg)}
        if h is not None:
            row["induced"] = count_induced(cg, h)
        rows.append(row)
        if args.export_dot:
            Path(args.export_dot).write_text(cg.to_dot())
        if args.export_graph6:
            Path(args.export_graph6).write_text(cg.to_graph6() + "\n")
    if args.json:
        out.write(json.dumps(rows, sort_keys=True) + "\n")
        return
    cols = list(rows[0]) if rows else ["k"]
    out.write("\t".join(cols) + "\n")
    for row in rows:
        out.write("\t".join(str(row[c]) for c in cols) + "\n")


def _cmd_invariants(args, out):
    g = _load(args.graph)
    p = closed_forms.pairs_general(g)
    st = stats(g)
    report = {
        "n": st.vertex_count, "m": st.edge_count, "components": st.components,
        "triangles": st.triangles, "degree_sequence": list(st.degree_sequence),
        "pairs_polynomial": p.to_text(),
        "predicted": predicted_top_coefficients(g).to_json(),
        "observed": coefficient_report(p, g.n).to_json(),
        "components_from_pairs": component_count_from_pairs(p) if not p.is_zero() else None,
    }
    try:
        report["tree_degrees"] = recover_tree_degrees(p, g.n)
    except DomainError:
        report["tree_degrees"] = None
    try:
        report["pseudotree_slope"] = _fmt(pseudotree_slope_at_two(g))
        report["pseudotree_slope_formula"] = _fmt(pseudotree_slope_formula(g))
    except DomainError:
        report["pseudotree_slope"] = None
    if args.json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        out.write(f"{key}\t{value}\n")


def _cmd_hypercube(args, out):
    g = _load(args.graph)
    ks = _k_values(args)
    s_values = range(args.s_max + 1)
    grid = {s: {k: has_hypercube(g, s, k) for k in ks} for s in s_values}
    first = hypercube_first_appearance(g, args.s_max, max(ks))
    if args.json:
        out.write(json.dumps({"grid": {str(s): {str(k): v for k, v in row.items()}
                                       for s, row in grid.items()},
                              "first_appearance": first}, sort_keys=True) + "\n")
        return
    out.write("s\t" + "\t".join(f"k={k}" for k in ks) + "\tfirst\n")
    for s in s_values:
        cells = "\t".join("1" if grid[s][k] else "0" for k in ks)
        out.write(f"{s}\t{cells}\t{first[s] if first[s] is not None else '-'}\n")


def _first_difference(p: Poly, q: Poly) -> int:
    k = 1
    # two distinct polynomials cannot agree on more points than their degree
    while p(k) == q(k):
        k += 1
    return k


def _cmd_distinguish(args, out):
    a, b = _load(args.a), _load(args.b)
    parts = []
    results = []
    for name in [x.strip() for x in args.patterns.split(",") if x.strip()]:
        h = _pattern(name)
        pa = hpoly(a, h, budget=args.budget_nodes)
        pb = hpoly(b, h, budget=args.budget_nodes)
        if pa == pb:
            parts.append(f"{name}: equal")
            results.append({"pattern": name, "equal": True})
        else:
            k = _first_difference(pa, pb)
            parts.append(f"{name}: differ at k={k} ({_fmt(pa(k))} vs {_fmt(pb(k))})")
            results.append({"pattern": name, "equal": False, "k": k,
                            "a": _fmt(pa(k)), "b": _fmt(pb(k))})
    if args.json:
        out.write(json.dumps(results, sort_keys=True) + "\n")
    else:
        out.write(", ".join(parts) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hpoly", description="Chromatic H-polynomials of graphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, graph=True, krange=True):
        if graph:
            p.add_argument("--graph", required=True,
                           help="graph file (edge list or graph6), or fixture:NAME")
        if krange:
            p.add_argument("--k", type=int, help="evaluate at a single k")
            p.add_argument("--k-range", help="evaluation range A..B (default 1..6)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--budget-nodes", type=int, default=DEFAULT_NODE_BUDGET,
                       help="generator search node limit")
        p.add_argument("--budget-colorings", type=int, default=DEFAULT_COLORING_BUDGET,
                       help="oracle candidate-coloring limit")
        return p

    common(sub.add_parser("chromatic", help="chromatic polynomial")).set_defaults(fn=_cmd_chromatic)
    common(sub.add_parser("pairs", help="edge count of the coloring graph")).set_defaults(fn=_cmd_pairs)
    p = common(sub.add_parser("clique", help="induced K_t count"))
    p.add_argument("--t", type=int, default=3)
    p.set_defaults(fn=_cmd_clique)
    common(sub.add_parser("c4", help="induced 4-cycle count")).set_defaults(fn=_cmd_c4)
    p = common(sub.add_parser("c6", help="induced 6-cycle count"))
    p.add_argument("--rows", choices=("derived", "printed"), default="derived",
                   help="multiplicity table for the 3-color triple terms")
    p.set_defaults(fn=_cmd_c6)
    p = common(sub.add_parser("hpoly", help="generic chromatic H-polynomial"))
    p.add_argument("--pattern", required=True, help="N1, P2, K3, C4, C6, Q_3, K4-e or graph6")
    p.add_argument("--dump-generators", metavar="FILE", help="write minimal generators as JSON")
    p.set_defaults(fn=_cmd_hpoly)
    p = common(sub.add_parser("oracle", help="build C_k(G) explicitly and count"))
    p.add_argument("--pattern", help="also count induced copies of this pattern")
    p.add_argument("--export-dot", metavar="FILE")
    p.add_argument("--export-graph6", metavar="FILE")
    p.set_defaults(fn=_cmd_oracle)
    common(sub.add_parser("invariants", help="coefficient and structure report"),
           krange=False).set_defaults(fn=_cmd_invariants)
    p = common(sub.add_parser("hypercube", help="induced hypercube presence table"))
    p.add_argument("--s-max", type=int, default=4)
    p.set_defaults(fn=_cmd_hypercube)
    p = common(sub.add_parser("distinguish", help="compare two graphs pattern by pattern"),
               graph=False, krange=False)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--patterns", default="N1,P2,C4")
    p.set_defaults(fn=_cmd_distinguish)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if not getattr(args, "fn", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        args.fn(args, out)
    except UsageError as exc:
        print(f"hpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"hpoly: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, HPolyError, OSError) as exc:
        print(f"hpoly: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
