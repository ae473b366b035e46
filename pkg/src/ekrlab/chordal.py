"""Chordal graph recognition and the simplicial structure the inductions use."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order in which each vertex is simplicial among its successors."""

    order: tuple[int, ...]


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of v induces a complete subgraph."""
    g._check_vertex(v)
    nb = g.adj[v]
    for u in bits(nb):
        if nb & ~g.adj[u] & ~(1 << u):
            return False
    return True


def _verify_elimination_order(g: Graph, order: tuple[int, ...]) -> bool:
    later = g.full_mask
    for v in order:
        later &= ~(1 << v)
        nb = g.adj[v] & later
        for u in bits(nb):
            if nb & ~g.adj[u] & ~(1 << u):
                return False
    return True


def find_elimination_order(g: Graph) -> EliminationOrder | None:
    """Maximum cardinality search, then an explicit validity check.

    Returns a simplicial elimination ordering iff the graph is chordal.
    The O(n^2) verification is kept on purpose: the invariant is checked,
    not trusted to MCS theory.
    """
    n = g.n
    weight = [0] * n
    numbered = 0
    rev: list[int] = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        numbered |= 1 << best
        rev.append(best)
        for u in bits(g.adj[best]):
            if not numbered >> u & 1:
                weight[u] += 1
    order = tuple(reversed(rev))
    if _verify_elimination_order(g, order):
        return EliminationOrder(order)
    return None


def is_chordal(g: Graph) -> bool:
    return find_elimination_order(g) is not None


def find_domination_pair(g: Graph, component: int) -> tuple[int, int] | None:
    """A simplicial vertex of the component and a neighbor dominating it.

    Returns (v1, vi) with N[v1] a subset of N[vi]: v1 is the lowest-index
    simplicial vertex with an edge, vi its highest-degree neighbor (ties
    to the lowest index).  None when the component has no edges or no
    simplicial vertex with a neighbor exists (non-chordal input).
    """
    for v1 in bits(component):
        if g.adj[v1] and is_simplicial(g, v1):
            vi, best = -1, -1
            for u in bits(g.adj[v1]):
                d = g.degree(u)
                if d > best:
                    vi, best = u, d
            assert g.closed_neighborhood(v1) & ~g.closed_neighborhood(vi) == 0
            return v1, vi
    return None
