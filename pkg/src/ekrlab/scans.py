"""Desk-scale scans: tree star conjectures, degree-sort counterexamples,
star-gap grids and the minimax-EKR sweep.

Scans iterate one tree per isomorphism class (every checked predicate is
isomorphism-invariant); full labeled Prüfer enumeration is kept for the
small-order cross-checks.  Violation records carry a replayable generator
spec, and re-running one through the library reproduces its numbers.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import time
from dataclasses import dataclass

import networkx as nx

from .graphs import Graph, bits, disjoint_union
from .generators import (
    make_empty,
    make_gtk,
    make_tree_from_prufer,
    prufer_sequence,
)
from .independence import mu, star_sizes
from .kernel import DEFAULT_NODE_BUDGET
from .solver import is_r_ekr


@dataclass(frozen=True)
class ScanResult:
    space: str
    checked: int
    violations: tuple[dict, ...]
    skipped: tuple[dict, ...] = ()
    elapsed: float = 0.0

    def to_json_dict(self, timings: bool = False) -> dict:
        out = {
            "space": self.space,
            "checked": self.checked,
            "violations": list(self.violations),
            "skipped": list(self.skipped),
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _canonical(violations) -> tuple[dict, ...]:
    return tuple(sorted(violations, key=lambda d: json.dumps(d, sort_keys=True)))


def _run_jobs(worker, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [worker(it) for it in items]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(worker, items)


# -- tree enumeration ---------------------------------------------------------


def distinct_trees(n: int):
    """One tree per isomorphism class on n vertices."""
    if n == 1:
        yield make_empty(1)
        return
    for t in nx.nonisomorphic_trees(n):
        edges = sorted(tuple(sorted(e)) for e in t.edges())
        yield Graph.from_edges(n, edges, tuple(str(i) for i in range(n)))


def labeled_trees(n: int, reverse: bool = False):
    """All n^(n-2) labeled trees via Prüfer sequences, in sequence order."""
    if n == 2:
        yield make_tree_from_prufer([])
        return
    seqs = itertools.product(range(n), repeat=n - 2)
    if reverse:
        seqs = reversed(list(seqs))
    for seq in seqs:
        yield make_tree_from_prufer(list(seq))


def tree_spec(g: Graph) -> str:
    """Replayable generator spec of a tree (its Prüfer sequence)."""
    return "prufer:" + ",".join(str(s) for s in prufer_sequence(g))


def _bipartition_sides(g: Graph) -> list[int]:
    side = [-1] * g.n
    side[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    nxt.append(u)
        frontier = nxt
    return side


# -- leaf-star scan -----------------------------------------------------------


def _leaf_star_worker(args) -> tuple[int, list[dict]]:
    n, edges, r_max = args
    g = Graph.from_edges(n, edges)
    spec = tree_spec(g)
    leaves = [v for v in range(n) if g.degree(v) == 1]
    checked = 0
    violations = []
    for r in range(1, r_max + 1):
        sizes = star_sizes(g, r)
        checked += 1
        best_all = max(sizes)
        best_leaf = max(sizes[v] for v in leaves)
        if best_all > best_leaf:
            center = max(range(n), key=lambda v: (sizes[v], -v))
            violations.append(
                {
                    "spec": spec,
                    "n": n,
                    "r": r,
                    "best_center": center,
                    "best_size": best_all,
                    "best_leaf_size": best_leaf,
                }
            )
    return checked, violations


def scan_leaf_star(n_max: int, r_max: int, jobs: int = 1) -> ScanResult:
    """Check that some maximum star is leaf-centered, over all trees.

    A violation is a (tree, r) whose best star strictly beats every
    leaf-centered star.
    """
    t0 = time.perf_counter()
    items = []
    for n in range(2, n_max + 1):
        for g in distinct_trees(n):
            items.append((n, tuple(g.edges()), r_max))
    checked = 0
    violations: list[dict] = []
    for c, v in _run_jobs(_leaf_star_worker, items, jobs):
        checked += c
        violations.extend(v)
    return ScanResult(
        space=f"trees up to {n_max} vertices (one per isomorphism class), r <= {r_max}",
        checked=checked,
        violations=_canonical(violations),
        elapsed=time.perf_counter() - t0,
    )


# -- bipartite degree-sort scan ----------------------------------------------


def _degree_sort_worker(args) -> tuple[int, list[dict]]:
    n, edges, r_max = args
    g = Graph.from_edges(n, edges)
    spec = tree_spec(g)
    side = _bipartition_sides(g)
    deg = [g.degree(v) for v in range(n)]
    checked = 0
    violations = []
    for r in range(1, r_max + 1):
        sizes = star_sizes(g, r)
        checked += 1
        for x in range(n):
            for y in range(n):
                if x == y or side[x] != side[y]:
                    continue
                if deg[x] <= deg[y] and sizes[x] < sizes[y]:
                    violations.append(
                        {
                            "spec": spec,
                            "n": n,
                            "r": r,
                            "x": x,
                            "y": y,
                            "degree_x": deg[x],
                            "degree_y": deg[y],
                            "star_x": sizes[x],
                            "star_y": sizes[y],
                        }
                    )
    return checked, violations


def scan_degree_sort(n_max: int, r_max: int, jobs: int = 1) -> ScanResult:
    """Flag same-side tree vertex pairs where lower degree gives a smaller star."""
    t0 = time.perf_counter()
    items = []
    for n in range(2, n_max + 1):
        for g in distinct_trees(n):
            items.append((n, tuple(g.edges()), r_max))
    checked = 0
    violations: list[dict] = []
    for c, v in _run_jobs(_degree_sort_worker, items, jobs):
        checked += c
        violations.extend(v)
    return ScanResult(
        space=f"trees up to {n_max} vertices (one per isomorphism class), r <= {r_max}",
        checked=checked,
        violations=_canonical(violations),
        elapsed=time.perf_counter() - t0,
    )


# -- bipartite counterexample star gaps ----------------------------------------


def check_gtk_gap(t: int, k: int) -> int:
    """Star-size gap (y minus x) for the tailed K_{2,t} at r = 3."""
    g, x, y = make_gtk(t, k)
    sizes = star_sizes(g, 3)
    return sizes[y] - sizes[x]


def check_gtk_higher_r(t: int, r: int) -> tuple[int, int]:
    """(x star size, y star size) for the k = 2 construction at general r."""
    g, x, y = make_gtk(t, 2)
    sizes = star_sizes(g, r)
    return sizes[x], sizes[y]


def scan_gtk_grid(t_max: int) -> ScanResult:
    """Verify the y-x star gap equals t - 2k + 1 over the whole small grid."""
    t0 = time.perf_counter()
    checked = 0
    violations = []
    for k in (2, 3):
        for t in range(2 * k, t_max + 1):
            gap = check_gtk_gap(t, k)
            checked += 1
            if gap != t - 2 * k + 1:
                violations.append(
                    {"spec": f"gtk:{t},{k}", "t": t, "k": k, "gap": gap, "expected": t - 2 * k + 1}
                )
    return ScanResult(
        space=f"tailed K_2,t grid 2k <= t <= {t_max}, k in (2, 3)",
        checked=checked,
        violations=_canonical(violations),
        elapsed=time.perf_counter() - t0,
    )


# -- minimax conjecture sweep ---------------------------------------------------


def _minmax_worker(args) -> tuple[int, list[dict], list[dict]]:
    spec, node_budget = args
    from .generators import build_graph

    g = build_graph(spec)
    m = mu(g)
    checked = 0
    violations = []
    skipped = []
    for r in range(1, m // 2 + 1):
        report = is_r_ekr(g, r, node_budget=node_budget, spec=spec)
        if report.is_ekr is None:
            skipped.append({"spec": spec, "r": r, "reason": "budget"})
            continue
        checked += 1
        if not report.is_ekr:
            violations.append(
                {
                    "spec": spec,
                    "r": r,
                    "mu": m,
                    "star_size": report.star_size,
                    "max_family_size": report.max_family_size,
                }
            )
    return checked, violations, skipped


def scan_minmax_conjecture(
    corpus: list[str],
    node_budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
) -> ScanResult:
    """Run the EKR decision for every r up to half the minimax number.

    Budget-stopped instances are reported as skipped, never as passes.
    A violation here would contradict the minimax conjecture at desk scale.
    """
    t0 = time.perf_counter()
    items = [(spec, node_budget) for spec in corpus]
    checked = 0
    violations: list[dict] = []
    skipped: list[dict] = []
    for c, v, s in _run_jobs(_minmax_worker, items, jobs):
        checked += c
        violations.extend(v)
        skipped.extend(s)
    return ScanResult(
        space=f"{len(corpus)} corpus graphs, r <= mu/2",
        checked=checked,
        violations=_canonical(violations),
        skipped=_canonical(skipped),
        elapsed=time.perf_counter() - t0,
    )


# Seeded random interval graphs (chordal, connected, mu = 4); frozen so the
# chordal-union corpus below is fixed.
_INTERVAL_GRAPHS: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = (
    (9, ((0, 5), (0, 6), (1, 6), (2, 3), (2, 4), (2, 6), (3, 4), (4, 7), (7, 8))),
    (10, ((0, 7), (0, 9), (1, 2), (1, 4), (2, 6), (3, 4), (3, 7), (3, 9), (5, 7), (5, 8), (7, 9))),
    (11, ((0, 1), (0, 6), (0, 8), (1, 6), (1, 7), (1, 8), (2, 3), (2, 4), (3, 4), (3, 9),
          (4, 9), (5, 7), (8, 10), (9, 10))),
    (12, ((0, 3), (0, 4), (0, 6), (0, 9), (0, 11), (1, 2), (1, 9), (2, 7), (3, 4), (3, 6),
          (4, 6), (4, 8), (5, 7), (8, 10), (9, 11))),
    (13, ((0, 4), (0, 5), (0, 6), (0, 9), (1, 2), (1, 6), (3, 6), (3, 7), (3, 9), (4, 5),
          (4, 12), (5, 8), (5, 10), (5, 12), (6, 7), (6, 9), (7, 9), (8, 10), (8, 11),
          (8, 12), (10, 12))),
)


def chordal_singleton_corpus() -> list[tuple[str, Graph]]:
    """30 fixed chordal-plus-singleton unions, at most 14 vertices each.

    Mix of cliques, paths, mnd graphs, chains and explicit chordal edge
    lists, every one with an isolated vertex appended.
    """
    from .generators import build_graph

    specs = [
        "union(kn:1;empty:1)",
        "union(kn:2;empty:1)",
        "union(kn:5;empty:1)",
        "union(kn:13;empty:1)",
        "union(path:2;empty:1)",
        "union(path:9;empty:1)",
        "union(path:13;empty:1)",
        "union(cycle:3;empty:1)",
        "union(mnd:0,0,0,0,0;empty:1)",
        "union(mnd:1,1,1,1,1,1,1;empty:1)",
        "union(mnd:2,2,2,2,2,2,2,2;empty:1)",
        "union(mnd:1,2,2,3,3,3;empty:1)",
        "union(mnd:0,0,1,1,2,2,2;empty:1)",
        "union(mnd:3,3,3,3,3,3,3,3,3,3;empty:1)",
        "union(mnd:1,1,2,2,3,3,4,4;empty:1)",
        "union(mnd:2,3,3,3,4,4,4,4;empty:1)",
        "union(chain:2,2;empty:1)",
        "union(chain:2,3,4;empty:1)",
        "union(chain:3,4,5;empty:1)",
        "union(chain:2,2,2,2,2,2;empty:1)",
        "union(chain:5,5;empty:1)",
        "union(chain:2,3,3,3;empty:1)",
        "union(chain:4,5,6;empty:1)",
        "union(chain:3,3;empty:1)",
        "union(prufer:0,0,0,0;empty:1)",
    ]
    out = [(s, build_graph(s)) for s in specs]
    for n, edges in _INTERVAL_GRAPHS:
        base = Graph.from_edges(n, list(edges))
        out.append((f"interval-{n}", disjoint_union([base, make_empty(1)])))
    return out


def default_minmax_corpus() -> list[str]:
    """Small graphs (<= 16 vertices) covering the families the sweep targets."""
    return [
        "union(chain:2,3,4;empty:1)",
        "union(chain:3,4,5;empty:1)",
        "union(mnd:1,1,2,2;empty:1)",
        "union(mnd:0,0,1,1,2,2;empty:1)",
        "union(kn:4;empty:1)",
        "union(path:7;empty:1)",
        "union(path:11;empty:1)",
        "cycle:7",
        "cycpow:8,2",
        "cycpow:9,2",
        "cycpow:11,3",
        "modcyc:8,2,3",
        "modcyc:9,2,5",
        "pathpow:10,2",
        "multipartite:2,3,3",
        "multipartite:3,3,3",
        "ladder:5",
        "ladder:6",
        "ladder:7",
        "ladder:8",
    ]
