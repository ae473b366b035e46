"""Exact enumeration of independent r-sets, stars, alpha and mu.

Set families live in a canonical order: member bitmasks sorted ascending
as integers, so family equality is plain tuple equality and reports diff
cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphInputError, bits


@dataclass(frozen=True)
class SetFamily:
    """An r-uniform family of vertex sets in canonical (ascending mask) order."""

    r: int
    sets: tuple[int, ...]
    origin: str = ""

    def __post_init__(self) -> None:
        if any(m.bit_count() != self.r for m in self.sets):
            raise GraphInputError(f"family is not {self.r}-uniform")
        if any(self.sets[i] >= self.sets[i + 1] for i in range(len(self.sets) - 1)):
            raise GraphInputError("family members must be strictly ascending masks")

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.sets)

    def is_intersecting(self) -> bool:
        ms = self.sets
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if not ms[i] & ms[j]:
                    return False
        return True

    def to_hex(self) -> list[str]:
        return [format(m, "#x") for m in self.sets]


def family(r: int, masks, origin: str = "") -> SetFamily:
    """Canonicalize an iterable of masks (dedup + sort) into a SetFamily."""
    return SetFamily(r, tuple(sorted(set(masks))), origin)


def enumerate_independent(g: Graph, r: int) -> SetFamily:
    """All independent r-subsets of the graph, canonically ordered.

    r = 0 yields the family containing just the empty set, which keeps
    the deletion recurrences total.
    """
    if r < 0:
        raise GraphInputError("r must be >= 0")
    out: list[int] = []
    n = g.n
    adj = g.adj

    def extend(start: int, chosen: int, blocked: int, need: int) -> None:
        if need == 0:
            out.append(chosen)
            return
        for v in range(start, n - need + 1):
            if not blocked >> v & 1:
                extend(v + 1, chosen | (1 << v), blocked | adj[v], need - 1)

    extend(0, 0, 0, r)
    out.sort()
    return SetFamily(r, tuple(out), origin=f"independent:{r}")


def star(g: Graph, v: int, r: int) -> SetFamily:
    """The independent r-sets containing v."""
    g._check_vertex(v)
    full = enumerate_independent(g, r)
    return SetFamily(r, tuple(m for m in full.sets if m >> v & 1), origin=f"star:{v}:{r}")


def star_sizes(g: Graph, r: int) -> list[int]:
    """Star size at every vertex, from a single enumeration."""
    sizes = [0] * g.n
    for m in enumerate_independent(g, r).sets:
        for v in bits(m):
            sizes[v] += 1
    return sizes


def best_star(g: Graph, r: int) -> tuple[int, int]:
    """(center, size) of a maximum star; ties go to the lowest vertex index.

    For the empty graph there is no center; returns (-1, 0).
    """
    if g.n == 0:
        return -1, 0
    sizes = star_sizes(g, r)
    best_v = max(range(g.n), key=lambda v: (sizes[v], -v))
    return best_v, sizes[best_v]


def alpha(g: Graph) -> int:
    """Independence number, exact."""
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    best = 0

    def grow(avail: int, size: int) -> None:
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = size
            return
        v = (avail & -avail).bit_length() - 1
        grow(avail & ~closed[v], size + 1)
        grow(avail & ~(1 << v), size)

    grow(g.full_mask, 0)
    return best


def mu(g: Graph) -> int:
    """Minimum size of a maximal independent set, exact.

    Branches on the lowest undominated vertex: a maximal independent set
    must contain it or one of its neighbors.
    """
    if g.n == 0:
        return 0
    full = g.full_mask
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    best = g.n

    def cover(dominated: int, banned: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if dominated == full:
            best = size
            return
        rem = ~dominated & full
        v = (rem & -rem).bit_length() - 1
        for u in bits(closed[v] & ~banned):
            cover(dominated | closed[u], banned | g.adj[u], size + 1)

    cover(0, 0, 0)
    return best
