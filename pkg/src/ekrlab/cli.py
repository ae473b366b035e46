"""Command-line front end: graph queries, EKR checks and conjecture scans.

All machine output is JSON on stdout; tables are rendered from the same
dict.  Exit codes: 0 pass, 1 input error, 2 property fails, 3 inexact
(budget-limited) result.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cache as result_cache
from .chordal import find_elimination_order
from .generators import build_graph, parse_graph_spec
from .graphs import GraphInputError, format_edge_list
from .independence import mu as compute_mu
from .independence import star_sizes
from .kernel import BACKEND, DEFAULT_NODE_BUDGET
from .solver import BudgetExceeded, is_r_ekr, max_intersecting_family
from .scans import (
    default_minmax_corpus,
    scan_degree_sort,
    scan_gtk_grid,
    scan_leaf_star,
    scan_minmax_conjecture,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2
EXIT_INEXACT = 3


def _emit(payload: dict, args) -> None:
    if getattr(args, "format", "json") == "table":
        text = _render_table(payload)
    else:
        text = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(text)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_table(payload: dict, indent: str = "") -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                row = "  ".join(f"{k}={v}" for k, v in item.items())
                lines.append(f"{indent}  {row}")
        elif isinstance(value, list):
            lines.append(f"{indent}{key}: {' '.join(str(v) for v in value)}")
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines) + "\n"


def _cache_dir(args) -> str | None:
    if getattr(args, "cache", None):
        return args.cache
    return os.environ.get("EKRLAB_CACHE") or None


def _emit_cached_or_run(args, g, r: int, op: str, produce) -> dict:
    """Return the payload dict, via the cache when one is configured."""
    cdir = _cache_dir(args)
    if cdir is not None:
        key = result_cache.cache_key(g, r, op)
        hit = result_cache.load(cdir, key)
        if hit is not None:
            return json.loads(hit)
        payload = produce()
        result_cache.store(cdir, key, json.dumps(payload, indent=2) + "\n")
        return payload
    return produce()


def cmd_ekr(args) -> int:
    spec = parse_graph_spec(args.spec)
    g = build_graph(spec)
    op = "ekr-strict" if args.strict else "ekr"

    def produce() -> dict:
        report = is_r_ekr(
            g,
            args.r,
            node_budget=args.budget,
            check_strict=args.strict,
            spec=spec.text,
        )
        return report.to_json_dict(timings=args.timings)

    payload = _emit_cached_or_run(args, g, args.r, op, produce)
    _emit(payload, args)
    if payload["is_ekr"] is None:
        return EXIT_INEXACT
    return EXIT_OK if payload["is_ekr"] else EXIT_FAIL


def cmd_maxfam(args) -> int:
    spec = parse_graph_spec(args.spec)
    g = build_graph(spec)

    def produce() -> dict:
        try:
            res = max_intersecting_family(g, args.r, node_budget=args.budget)
            return {
                "spec": spec.text,
                "r": args.r,
                "max_family_size": res.size,
                "witness": res.witness.to_hex(),
                "nodes": res.nodes,
                "exact": True,
            }
        except BudgetExceeded as exc:
            return {
                "spec": spec.text,
                "r": args.r,
                "max_family_size": exc.best_size,
                "witness": exc.witness.to_hex() if exc.witness else [],
                "nodes": exc.nodes,
                "exact": False,
            }

    payload = _emit_cached_or_run(args, g, args.r, "maxfam", produce)
    _emit(payload, args)
    return EXIT_OK if payload["exact"] else EXIT_INEXACT


def cmd_mu(args) -> int:
    spec = parse_graph_spec(args.spec)
    g = build_graph(spec)
    _emit({"spec": spec.text, "mu": compute_mu(g)}, args)
    return EXIT_OK


def cmd_stars(args) -> int:
    spec = parse_graph_spec(args.spec)
    g = build_graph(spec)
    sizes = star_sizes(g, args.r)
    ranked = sorted(range(g.n), key=lambda v: (-sizes[v], v))
    payload = {
        "spec": spec.text,
        "r": args.r,
        "stars": [
            {"center": g.label(v), "vertex": v, "size": sizes[v]} for v in ranked
        ],
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_chordal(args) -> int:
    spec = parse_graph_spec(args.spec)
    g = build_graph(spec)
    order = find_elimination_order(g)
    payload = {
        "spec": spec.text,
        "chordal": order is not None,
        "elimination_order": [g.label(v) for v in order.order] if order else None,
    }
    _emit(payload, args)
    return EXIT_OK


_SCANS = ("leaf-star", "degree-sort", "gtk-grid", "minmax")


def cmd_scan(args) -> int:
    if args.name not in _SCANS:
        raise GraphInputError(f"unknown scan {args.name!r}; known: {', '.join(_SCANS)}")
    if args.name == "leaf-star":
        result = scan_leaf_star(args.n, args.r, jobs=args.jobs)
        violations_expected = False
    elif args.name == "degree-sort":
        result = scan_degree_sort(args.n, args.r, jobs=args.jobs)
        violations_expected = True
    elif args.name == "gtk-grid":
        result = scan_gtk_grid(args.tmax)
        violations_expected = False
    else:
        if args.corpus:
            with open(args.corpus, "r", encoding="utf-8") as fh:
                corpus = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        else:
            corpus = default_minmax_corpus()
        result = scan_minmax_conjecture(corpus, node_budget=args.budget, jobs=args.jobs)
        violations_expected = False
    payload = {"scan": args.name, **result.to_json_dict(timings=args.timings)}
    _emit(payload, args)
    if args.emit_violations:
        os.makedirs(args.emit_violations, exist_ok=True)
        for i, violation in enumerate(result.violations):
            g = build_graph(violation["spec"])
            path = os.path.join(args.emit_violations, f"violation-{i:03d}.edges")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_edge_list(g))
    if result.violations and not violations_expected:
        return EXIT_FAIL
    if result.skipped:
        return EXIT_INEXACT
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, with_r: bool = True) -> None:
    p.add_argument("spec", help="graph spec, e.g. 'ladder:4' or 'union(chain:3,4,5;empty:1)'")
    if with_r:
        p.add_argument("-r", type=int, required=True, help="set size r")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="search node budget")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (scans)")
    p.add_argument("--cache", help="result cache directory (or env EKRLAB_CACHE)")
    p.add_argument("--out", help="also write the output to this file")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--timings", action="store_true", help="include wall-clock fields in output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekr-lab",
        description="Exact EKR property checks for independent set families in graphs",
    )
    parser.add_argument("--version-info", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ekr", help="decide whether the graph is r-EKR")
    _add_common(p)
    p.add_argument("--strict", action="store_true", help="also decide strictness")
    p.set_defaults(func=cmd_ekr)

    p = sub.add_parser("maxfam", help="maximum intersecting family of independent r-sets")
    _add_common(p)
    p.set_defaults(func=cmd_maxfam)

    p = sub.add_parser("mu", help="minimax independence number")
    _add_common(p, with_r=False)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("stars", help="star sizes at every vertex, sorted")
    _add_common(p)
    p.set_defaults(func=cmd_stars)

    p = sub.add_parser("chordal", help="chordality test with elimination order")
    _add_common(p, with_r=False)
    p.set_defaults(func=cmd_chordal)

    p = sub.add_parser("scan", help="run a conjecture scan")
    p.add_argument("name", help="one of: " + ", ".join(_SCANS))
    p.add_argument("--n", type=int, default=8, help="max vertex count (tree scans)")
    p.add_argument("-r", "--r", type=int, default=4, dest="r", help="max set size (tree scans)")
    p.add_argument("--tmax", type=int, default=8, help="max t (gtk-grid)")
    p.add_argument("--corpus", help="file of graph specs, one per line (minmax)")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="also write the output to this file")
    p.add_argument("--emit-violations", help="write violation graphs as edge lists here")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "version_info", False):
        sys.stdout.write(json.dumps({"backend": BACKEND}) + "\n")
        return EXIT_OK
    try:
        return args.func(args)
    except GraphInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        sys.stderr.write(f"inexact: {exc}\n")
        return EXIT_INEXACT


if __name__ == "__main__":
    sys.exit(main())
