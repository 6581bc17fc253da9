"""Command-line surface.

Subcommands: analyze, product, prism, mis, isolatable, certificate, family,
enumerate, verify, conjecture.  Graph arguments accept, in this order of
interpretation: a named constructor token (K5, C7, P4, wl8, fig1h, or
complete:5 / cycle:7 / path:4), "-" for standard input, an existing file
path, an inline edge list (semicolons for newlines), or a graph6 line.

Exit codes: 0 success or pass, 1 violation or counterexample found, 2 usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import certificates as certs
from .errors import InvalidParameter, WellcoveredError
from .graphio import (
    EnumFilter,
    enumerate_connected_graphs,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    Graph,
    cartesian_product,
    girth,
    is_connected,
    named_graph,
    prism,
    strong_support_vertices,
)
from .harness import Bounds, conjecture_search, verify_statement, STATEMENT_IDS
from .independence import (
    enumerate_mis,
    independence_summary,
    is_one_well_covered,
    isolatable,
    isolatable_vertices,
)

_NAMED_SHORT = re.compile(r"(?i)^([kcp])(\d+)$")
_NAMED_LONG = re.compile(r"(?i)^(complete|cycle|path):(\d+)$")
_KIND_BY_LETTER = {"k": "complete", "c": "cycle", "p": "path"}


def _read_graph(token: str) -> Graph:
    """Resolve a graph argument: named token, stdin, file, edge list, graph6."""
    if token.lower() in ("wl8", "fig1h"):
        return named_graph(token.lower())
    m = _NAMED_SHORT.match(token) or _NAMED_LONG.match(token)
    if m:
        kind = m.group(1).lower()
        kind = _KIND_BY_LETTER.get(kind, kind)
        return named_graph(kind, int(m.group(2)))
    if token == "-":
        return _parse_graph_text(sys.stdin.read())
    try:
        with open(token) as f:
            return _parse_graph_text(f.read())
    except OSError:
        pass
    return _parse_graph_text(token.replace(";", "\n"))


def _parse_graph_text(text: str) -> Graph:
    stripped = text.strip()
    if "\n" in stripped or re.fullmatch(r"\d+\s+\d+(\s+\d+)*", stripped):
        return parse_edge_list(stripped + "\n")
    return parse_graph6(stripped)


def _girth_str(value) -> str:
    return "infinite" if value == math.inf else str(value)


def _emit(doc: dict, text_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(text_lines))


# --- subcommand handlers --------------------------------------------------------


def _cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    summary = independence_summary(g, allow_large=args.allow_large)
    iso = isolatable_vertices(g, allow_large=args.allow_large)
    gv = girth(g)
    doc = {
        "order": g.order,
        "size": g.num_edges,
        "girth": None if gv == math.inf else gv,
        "connected": is_connected(g),
        "degrees": list(g.degrees()),
        "strong_support_vertices": sorted(strong_support_vertices(g)),
        "alpha": summary.alpha,
        "i": summary.idom,
        "well_covered": summary.well_covered,
        "isolatable_vertices": sorted(iso),
        "one_well_covered": is_one_well_covered(g, allow_large=args.allow_large),
    }
    if summary.witness is not None:
        doc["witness"] = certs.Certificate.unequal_sets(*summary.witness).to_text()
    lines = [
        f"order:            {doc['order']}",
        f"size:             {doc['size']}",
        f"girth:            {_girth_str(gv)}",
        f"connected:        {doc['connected']}",
        f"degrees:          {' '.join(map(str, doc['degrees']))}",
        f"strong supports:  {doc['strong_support_vertices'] or '-'}",
        f"alpha:            {doc['alpha']}",
        f"i:                {doc['i']}",
        f"well covered:     {doc['well_covered']}",
        f"isolatable:       {doc['isolatable_vertices'] or '-'}",
        f"1-well-covered:   {doc['one_well_covered']}",
    ]
    if "witness" in doc:
        lines.append(f"witness:          {doc['witness']}")
    _emit(doc, lines, args.json)
    return 0


def _product_output(product: Graph, labeling, args) -> int:
    doc = {
        "order": product.order,
        "size": product.num_edges,
        "edge_list": write_edge_list(product),
        "labeling": {
            "g_order": labeling.g_order,
            "h_order": labeling.h_order,
            "encoding": "index = g * h_order + h",
        },
    }
    lines = [write_edge_list(product).rstrip("\n"), ""]
    lines.append(f"labeling: index = g * {labeling.h_order} + h  (g < {labeling.g_order})")
    _emit(doc, lines, args.json)
    return 0


def _cmd_product(args) -> int:
    g = _read_graph(args.graph)
    h = _read_graph(args.partner)
    product, lab = cartesian_product(g, h)
    return _product_output(product, lab, args)


def _cmd_prism(args) -> int:
    g = _read_graph(args.graph)
    product, lab = prism(g)
    return _product_output(product, lab, args)


def _cmd_mis(args) -> int:
    g = _read_graph(args.graph)
    for m in enumerate_mis(g, allow_large=args.allow_large):
        print(" ".join(map(str, sorted(m))))
    return 0


def _cmd_isolatable(args) -> int:
    g = _read_graph(args.graph)
    witness = isolatable(g, args.vertex, allow_large=args.allow_large)
    if args.json:
        doc = {
            "vertex": args.vertex,
            "isolatable": witness is not None,
            "witness": None if witness is None else sorted(witness),
        }
        print(json.dumps(doc, indent=2))
    else:
        print("none" if witness is None else " ".join(map(str, sorted(witness))))
    return 0


_ROUTES = {
    "lemma-3.2": ("isolatable vertex of degree >= 2 in a girth->=4 factor", "x s"),
    "lemma-3.4": ("leaf in a girth->=4 factor", "x s"),
    "lemma-3.5": ("two girth->=4 factors without isolatable vertices", "y s1 s2"),
    "thm-3.7": ("girth->=5 base with an isolatable vertex, prism", "x"),
}


def _cmd_certificate(args) -> int:
    g = _read_graph(args.graph)
    if args.route == "lemma-3.2":
        h = _read_graph(_require_arg(args.partner, "--partner"))
        cert = certs.witness_product_isolatable_deg2(
            g, _require_arg(args.x, "--x"), h, _require_arg(args.s, "--s")
        )
        host, _ = cartesian_product(g, h)
    elif args.route == "lemma-3.4":
        h = _read_graph(_require_arg(args.partner, "--partner"))
        cert = certs.witness_product_leaf(
            g, _require_arg(args.x, "--x"), h, _require_arg(args.s, "--s")
        )
        host, _ = cartesian_product(g, h)
    elif args.route == "lemma-3.5":
        h = _read_graph(_require_arg(args.partner, "--partner"))
        cert = certs.witness_product_order3(
            g,
            _require_arg(args.y, "--y"),
            h,
            _require_arg(args.s1, "--s1"),
            _require_arg(args.s2, "--s2"),
        )
        host, _ = cartesian_product(g, h)
    else:
        cert = certs.witness_prism_girth5_isolatable(g, _require_arg(args.x, "--x"))
        host, _ = prism(g)
    verified = certs.verify_certificate(host, cert)
    if args.json:
        print(
            json.dumps(
                {
                    "route": args.route,
                    "certificate": cert.to_text(),
                    "host_order": host.order,
                    "verified": verified,
                },
                indent=2,
            )
        )
    else:
        print(cert.to_text())
        print(f"host order: {host.order}")
        print(f"verified: {verified}")
    return 0 if verified else 1


def _require_arg(value, name: str):
    if value is None:
        raise InvalidParameter(f"this route requires {name}")
    return value


def _cmd_family(args) -> int:
    with open(args.spec) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise InvalidParameter(f"bad family spec file: {exc}") from None
    try:
        spec = certs.FamilySpec(
            r=data["r"],
            clique_orders=tuple(data["clique_orders"]),
            w_sizes=tuple(data["w_sizes"]),
            extra_edges=tuple(tuple(e) for e in data.get("extra_edges", [])),
            k=data.get("k", 0),
        )
    except (KeyError, TypeError) as exc:
        raise InvalidParameter(f"bad family spec file: {exc}") from None
    g = certs.build_clique_family(spec)
    print(write_edge_list(g).rstrip("\n"))
    if args.partner:
        h = _read_graph(args.partner)
        assignment = certs.family_product_assignment(spec, h)
        print()
        print(f"assignment ({len(assignment)} vertices of the product):")
        print(" ".join(map(str, sorted(assignment))))
    return 0


def _cmd_enumerate(args) -> int:
    filt = EnumFilter(
        order=args.order,
        connected=not args.all,
        min_girth=args.min_girth,
        triangle_free=args.triangle_free,
        min_degree=args.min_degree,
        must_contain_c4=args.contains_c4,
    )
    for g in enumerate_connected_graphs(filt):
        print(write_graph6(g))
    return 0


def _bounds_from(args) -> Bounds:
    return Bounds(
        max_order=args.max_order,
        max_factor_order=args.max_factor,
        max_product_order=args.max_product,
        exact_cap=args.exact_cap,
        samples=args.samples,
        seed=args.seed,
        min_girth=args.min_girth,
    )


def _finish_report(report, args) -> int:
    if args.report_dir:
        from .report import write_report_files

        for path in write_report_files(report, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text(), end="")
    return 0 if report.passed else 1


def _cmd_verify(args) -> int:
    report = verify_statement(args.statement, _bounds_from(args))
    return _finish_report(report, args)


def _cmd_conjecture(args) -> int:
    bounds = Bounds(exact_cap=args.exact_cap, samples=args.samples, seed=args.seed)
    if args.stdin_graph6:
        report = conjecture_search(stream=sys.stdin, bounds=bounds)
    else:
        lo, hi = args.orders
        report = conjecture_search(orders=(lo, hi), bounds=bounds)
    return _finish_report(report, args)


# --- parser ----------------------------------------------------------------------


def _orders_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError("expected a range like 4..8")
    return int(m.group(1)), int(m.group(2))


def _min_girth_value(text: str):
    if text.lower() in ("inf", "infinite"):
        return math.inf
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellcovered",
        description="well-coveredness of small graphs and their Cartesian products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="structured output")

    def add_allow_large(p):
        p.add_argument(
            "--allow-large",
            action="store_true",
            help="override the order-30 enumeration guardrail",
        )

    p = sub.add_parser("analyze", help="invariants of one graph")
    p.add_argument("graph")
    add_json(p)
    add_allow_large(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("product", help="Cartesian product in edge-list form")
    p.add_argument("graph")
    p.add_argument("partner")
    add_json(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("prism", help="product with a single edge")
    p.add_argument("graph")
    add_json(p)
    p.set_defaults(func=_cmd_prism)

    p = sub.add_parser("mis", help="stream maximal independent sets")
    p.add_argument("graph")
    add_allow_large(p)
    p.set_defaults(func=_cmd_mis)

    p = sub.add_parser("isolatable", help="isolating witness for one vertex")
    p.add_argument("graph")
    p.add_argument("vertex", type=int)
    add_json(p)
    add_allow_large(p)
    p.set_defaults(func=_cmd_isolatable)

    p = sub.add_parser("certificate", help="build and verify a witness")
    p.add_argument("route", choices=sorted(_ROUTES))
    p.add_argument("--graph", required=True, help="first factor (or prism base)")
    p.add_argument("--partner", help="second factor, for the product routes")
    p.add_argument("--x", type=int, help="anchor vertex in the first factor")
    p.add_argument("--y", type=int, help="anchor vertex for lemma-3.5")
    p.add_argument("--s", type=int, help="anchor vertex in the partner")
    p.add_argument("--s1", type=int, help="partner edge endpoint for lemma-3.5")
    p.add_argument("--s2", type=int, help="partner edge endpoint for lemma-3.5")
    add_json(p)
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("family", help="build a clique-family graph from a JSON spec")
    p.add_argument("spec", help="JSON file: r, clique_orders, w_sizes, extra_edges, k")
    p.add_argument("--partner", help="also emit the product assignment for this graph")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("enumerate", help="graph6 stream of small graphs")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.add_argument("--min-girth", type=_min_girth_value, default=None)
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--contains-c4", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run one named verification suite")
    p.add_argument("statement", choices=STATEMENT_IDS)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--max-factor", type=int, default=None)
    p.add_argument("--max-product", type=int, default=None)
    p.add_argument("--exact-cap", type=int, default=30)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-girth", type=_min_girth_value, default=None)
    p.add_argument("--report-dir", help="write json/tsv/png report files here")
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="search for a prism counterexample")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--orders", type=_orders_range, help="builtin range, e.g. 4..8")
    src.add_argument("--stdin-graph6", action="store_true")
    p.add_argument("--exact-cap", type=int, default=30)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", help="write json/tsv/png report files here")
    add_json(p)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WellcoveredError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
