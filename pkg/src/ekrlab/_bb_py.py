"""Pure-Python branch-and-bound kernel over intersecting-set compatibility.

Reference implementation: the compiled kernel (_bb.pyx) mirrors this
search tree exactly, including node accounting, so the two backends are
interchangeable bit for bit.  Candidates are vertex-set bitmasks (< 2^64)
given in ascending order; two candidates are compatible iff their masks
intersect, and a clique in that compatibility graph is an intersecting
family.
"""

from __future__ import annotations

import sys

DEFAULT_NODE_BUDGET = 50_000_000

_UNIVERSE = (1 << 64) - 1


def _candidate_rows(masks):
    """Per-candidate compatibility bitsets plus per-vertex membership bitsets."""
    by_vertex = [0] * 64
    for i, m in enumerate(masks):
        for b in _iter_bits(m):
            by_vertex[b] |= 1 << i
    rows = []
    for i, m in enumerate(masks):
        row = 0
        for b in _iter_bits(m):
            row |= by_vertex[b]
        rows.append(row & ~(1 << i))
    return rows, by_vertex


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_clique(masks, lower_bound=0, node_budget=DEFAULT_NODE_BUDGET):
    """Maximum intersecting subfamily size by branch and bound.

    lower_bound must be a realizable family size (callers pass the best
    star).  Returns (best_size, witness_indices | None, nodes, exact);
    the witness is only produced when a family larger than lower_bound
    was found.  exact=False means the node budget stopped the search and
    best_size is only a lower bound on the true maximum.
    """
    n = len(masks)
    if n == 0:
        return lower_bound, None, 0, True
    rows, _ = _candidate_rows(masks)
    best = lower_bound
    witness = None
    nodes = 0
    aborted = False
    path = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def expand(pool, size):
        nonlocal best, witness, nodes, aborted
        nodes += 1
        if nodes > node_budget:
            aborted = True
            return
        # greedy coloring in ascending index order; classes bound the clique
        order = []
        colors = []
        uncolored = pool
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                colors.append(color)
                avail &= ~(rows[v] | low)
                uncolored ^= low
        for idx in range(len(order) - 1, -1, -1):
            if aborted:
                return
            if size + colors[idx] <= best:
                return
            v = order[idx]
            sub = pool & rows[v]
            path.append(v)
            if sub:
                expand(sub, size + 1)
            elif size + 1 > best:
                best = size + 1
                witness = sorted(path)
            path.pop()
            pool &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best, witness, nodes, not aborted


def find_clique(masks, target, node_budget=DEFAULT_NODE_BUDGET, require_empty_common=False):
    """First clique of exactly `target` candidates in lexicographic DFS order.

    Candidates are explored in ascending index order with the include
    branch first, so the first hit is the lexicographically least family
    (masks are sorted, so index order is canonical order).  With
    require_empty_common=True only families whose members have no common
    vertex qualify, which is the non-star witness search.  Returns
    (witness_indices | None, nodes, exact).
    """
    n = len(masks)
    if target == 0:
        return [], 0, True
    if target > n:
        return None, 0, True
    rows, by_vertex = _candidate_rows(masks)
    nodes = 0
    aborted = False
    found = None
    chosen = []

    def color_count(pool):
        count = 0
        uncolored = pool
        while uncolored:
            count += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~(rows[v] | low)
                uncolored &= ~low
        return count

    def dfs(pool, common):
        nonlocal nodes, aborted, found
        nodes += 1
        if nodes > node_budget:
            aborted = True
            return
        need = target - len(chosen)
        if need == 0:
            if not require_empty_common or common == 0:
                found = list(chosen)
            return
        if pool.bit_count() < need:
            return
        if color_count(pool) < need:
            return
        if require_empty_common and common:
            cm = common
            while cm:
                low = cm & -cm
                b = low.bit_length() - 1
                if pool & ~by_vertex[b] == 0:
                    return  # this vertex can never leave the common intersection
                cm ^= low
        avail = pool
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            above = ~((low << 1) - 1)
            chosen.append(v)
            dfs(pool & rows[v] & above, common & masks[v])
            chosen.pop()
            if found is not None or aborted:
                return
            avail ^= low
        return

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))
    dfs((1 << n) - 1, _UNIVERSE if require_empty_common else 0)
    return found, nodes, not aborted
