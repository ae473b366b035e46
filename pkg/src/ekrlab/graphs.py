"""Bitset-backed immutable graphs on at most 64 vertices.

Vertex sets are plain Python ints used as bitmasks over ``range(g.n)``;
bit v set means vertex v is in the set.  All graph values are immutable,
so they can be shared freely (the induction-style algorithms recurse on
``delete_vertex`` and ``delete_closed_neighborhood`` of the same graph).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphInputError(ValueError):
    """Malformed construction data or out-of-range vertex."""


class CapacityError(GraphInputError):
    """Operation would exceed the 64-vertex bitset width."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected graph with bitmask adjacency rows (open neighborhoods)."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"adjacency row {v} has bits outside [0, n)")
            if row >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric edge {v}-{u}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphInputError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise GraphInputError("labels are not pairwise distinct")

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def closed_neighborhood(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if v > u:
                    yield (u, v)

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def index_of_label(self, label: str) -> int:
        if self.labels is None:
            raise GraphInputError("graph has no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphInputError(f"no vertex labeled {label!r}") from None

    def is_independent(self, vertex_mask: int) -> bool:
        for v in bits(vertex_mask):
            if self.adj[v] & vertex_mask:
                return False
        return True

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by least vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                grow = 0
                for u in bits(frontier):
                    grow |= self.adj[u]
                frontier = grow & ~comp
                comp |= grow
            seen |= comp
            out.append(comp)
        return out

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} outside [0, {self.n})")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphInputError(f"duplicate edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


# -- vertex-removal operators used by the induction arguments -------------


def _relabel_after_delete(g: Graph, keep_mask: int) -> Graph:
    keep = list(bits(keep_mask))
    index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        row = 0
        for u in bits(g.adj[old] & keep_mask):
            row |= 1 << index[u]
        adj.append(row)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), tuple(adj), labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    """The graph with vertex ``v`` removed, labels preserved."""
    g._check_vertex(v)
    return _relabel_after_delete(g, g.full_mask & ~(1 << v))


def delete_vertices(g: Graph, vertex_mask: int) -> Graph:
    if vertex_mask & ~g.full_mask:
        raise GraphInputError("vertex mask has bits outside [0, n)")
    return _relabel_after_delete(g, g.full_mask & ~vertex_mask)


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """The graph with ``v`` and its whole neighborhood removed."""
    g._check_vertex(v)
    return _relabel_after_delete(g, g.full_mask & ~g.closed_neighborhood(v))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Block-diagonal union; labels are prefixed with the component index."""
    graphs = list(graphs)
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise CapacityError(f"union on {total} vertices exceeds {MAX_VERTICES}")
    adj: list[int] = []
    labels: list[str] = []
    offset = 0
    for i, g in enumerate(graphs):
        adj.extend(row << offset for row in g.adj)
        labels.extend(f"{i}/{g.label(v)}" for v in range(g.n))
        offset += g.n
    return Graph(total, tuple(adj), tuple(labels))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


# -- edge-list text format -------------------------------------------------
# First line "n m", then m lines "u v" with 0-based endpoints.


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphInputError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphInputError(f"bad header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphInputError(f"bad header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphInputError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"bad edge line {ln!r}") from None
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.edge_count()}"]
    rows.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(rows) + "\n"
