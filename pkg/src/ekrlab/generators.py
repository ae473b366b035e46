"""Constructors for every graph family the toolkit works with.

All generators attach labels so that named vertices (chain connecting
vertices, ladder corners, the distinguished x/y of the bipartite
counterexample graphs) stay addressable after deletions.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graphs import Graph, GraphInputError, bits, mask_of


def make_empty(n: int) -> Graph:
    return Graph(n, (0,) * n, tuple(f"v{i}" for i in range(n)))


def make_complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(
        n,
        tuple(full & ~(1 << v) for v in range(n)),
        tuple(f"v{i}" for i in range(n)),
    )


def make_path(n: int) -> Graph:
    return make_path_power(n, 1)


def make_cycle(n: int) -> Graph:
    return make_cycle_power(n, 1)


def make_path_power(n: int, k: int) -> Graph:
    """Vertices 0..n-1, edges between a, b iff 1 <= |a-b| <= k."""
    if n < 1 or k < 1:
        raise GraphInputError("path power needs n >= 1, k >= 1")
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, min(a + k, n - 1) + 1):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return Graph(n, tuple(adj), tuple(f"v{i + 1}" for i in range(n)))


def make_cycle_power(n: int, k: int) -> Graph:
    """Vertices 0..n-1, edges between a, b at cyclic distance 1..k."""
    if n < 1 or k < 1:
        raise GraphInputError("cycle power needs n >= 1, k >= 1")
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            d = (b - a) % n
            if 1 <= min(d, n - d) <= k:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(n, tuple(adj), tuple(f"v{i + 1}" for i in range(n)))


def make_modified_cycle_power(n: int, k: int, q: int) -> Graph:
    """Cycle power plus the first q chords one step beyond reach k.

    Chord i (1-based, 1 <= i <= q) joins vertex i to vertex i+k+1 taken
    cyclically; chords that coincide with existing edges are absorbed.
    """
    if not (n > 2 and 1 <= k < n - 1 and 0 <= q < n):
        raise GraphInputError("modified cycle power needs n > 2, 1 <= k < n-1, 0 <= q < n")
    base = make_cycle_power(n, k)
    adj = list(base.adj)
    for i in range(q):
        a = i
        b = (i + k + 1) % n
        if a != b:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return Graph(n, tuple(adj), base.labels)


def make_mnd(d: list[int]) -> Graph:
    """Graph on x_1..x_n with an edge x_a x_b (a < b) iff b <= a + d_a.

    The budget sequence d must be non-negative and monotone non-decreasing;
    the result is an interval graph, hence chordal.
    """
    n = len(d)
    if any(x < 0 for x in d):
        raise GraphInputError("mnd sequence must be non-negative")
    if any(d[i] > d[i + 1] for i in range(n - 1)):
        raise GraphInputError("mnd sequence must be monotone non-decreasing")
    adj = [0] * n
    for a in range(n):
        # vertices are 1-based in the defining inequality
        for b in range(a + 1, min(a + d[a], n - 1) + 1):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return Graph(n, tuple(adj), tuple(f"x{i + 1}" for i in range(n)))


def make_multipartite(sizes: list[int]) -> Graph:
    """Complete multipartite graph; part i gets labels p{i}.0, p{i}.1, ..."""
    if not sizes or any(s < 1 for s in sizes):
        raise GraphInputError("multipartite needs part sizes >= 1")
    n = sum(sizes)
    labels = []
    part_of = []
    for i, s in enumerate(sizes):
        labels.extend(f"p{i + 1}.{j}" for j in range(s))
        part_of.extend([i] * s)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels))


# -- chains of complete graphs ---------------------------------------------


@dataclass(frozen=True)
class ChainSpec:
    """Link sizes plus the derived vertex layout of a chain graph.

    ``connecting[i]`` is the vertex shared by links i+1 and i+2 (0-based
    tuple order); ``link_masks[i]`` is the vertex set of link i+1.
    """

    link_sizes: tuple[int, ...]
    connecting: tuple[int, ...]
    link_masks: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.link_sizes)

    def internal_mask(self, link: int) -> int:
        """Vertices private to the given link (1-based)."""
        m = self.link_masks[link - 1]
        for c in self.connecting:
            m &= ~(1 << c)
        return m


def make_chain(link_sizes: list[int]) -> tuple[Graph, ChainSpec]:
    """Chain of complete graphs: consecutive links share one vertex.

    Vertex order is link-by-link with each connecting vertex placed at the
    end of its earlier link, so vertex 0 is always an internal vertex of
    the first link.
    """
    sizes = tuple(link_sizes)
    if not sizes:
        raise GraphInputError("chain needs at least one link")
    if any(s < 2 for s in sizes):
        raise GraphInputError("chain links must have size >= 2")
    n_links = len(sizes)
    labels: list[str] = []
    link_vertices: list[list[int]] = []
    connecting: list[int] = []
    for j, s in enumerate(sizes, start=1):
        members = []
        if j > 1:
            members.append(connecting[-1])
        fresh = s - len(members) - (1 if j < n_links else 0)
        for t in range(fresh):
            members.append(len(labels))
            labels.append(f"i{j}.{t}")
        if j < n_links:
            members.append(len(labels))
            connecting.append(len(labels))
            labels.append(f"c{j}")
        link_vertices.append(members)
    n = len(labels)
    adj = [0] * n
    for members in link_vertices:
        for a in members:
            for b in members:
                if a != b:
                    adj[a] |= 1 << b
    g = Graph(n, tuple(adj), tuple(labels))
    spec = ChainSpec(sizes, tuple(connecting), tuple(mask_of(m) for m in link_vertices))
    return g, spec


def is_special_chain(spec: ChainSpec) -> bool:
    """Growth conditions under which the strong chain theorems apply."""
    sizes = spec.link_sizes
    n = len(sizes)
    if n <= 1:
        return True
    if any(sizes[i] < sizes[i - 1] + 1 for i in range(1, n - 1)):
        return False
    return sizes[n - 1] >= sizes[n - 2]


# -- ladders, counterexample trees, misc ------------------------------------


def make_ladder(n: int) -> Graph:
    """K2 x P_n; x_i at index 2(i-1), y_i at 2(i-1)+1."""
    if n < 1:
        raise GraphInputError("ladder needs n >= 1")
    edges = []
    for i in range(n):
        edges.append((2 * i, 2 * i + 1))
        if i + 1 < n:
            edges.append((2 * i, 2 * i + 2))
            edges.append((2 * i + 1, 2 * i + 3))
    labels = []
    for i in range(1, n + 1):
        labels.extend((f"x{i}", f"y{i}"))
    return Graph.from_edges(2 * n, edges, labels)


def ladder_vertex(n: int, side: str, rung: int) -> int:
    """Index of x_rung / y_rung in make_ladder(n)."""
    if side not in ("x", "y") or not 1 <= rung <= n:
        raise GraphInputError(f"no vertex {side}{rung} in a ladder with {n} rungs")
    return 2 * (rung - 1) + (0 if side == "x" else 1)


def make_gtk(t: int, k: int) -> tuple[Graph, int, int]:
    """Complete bipartite K_{2,t} with a tail of 2k-1 path vertices.

    The tail hangs off one vertex of the size-2 side.  Returns the graph,
    x = the free tail endpoint (degree 1) and y = a degree-2 vertex of the
    size-t side.  Parameters outside the t >= 2k regime are allowed so
    scans can probe where the star-size gap changes sign.
    """
    if t < 1 or k < 1:
        raise GraphInputError("gtk needs t >= 1, k >= 1")
    labels = ["a", "b"] + [f"c{i}" for i in range(1, t + 1)]
    edges = []
    for c in range(2, t + 2):
        edges.append((0, c))
        edges.append((1, c))
    prev = 0
    for j in range(2, 2 * k + 1):
        labels.append(f"p{j}")
        cur = len(labels) - 1
        edges.append((prev, cur))
        prev = cur
    g = Graph.from_edges(len(labels), edges, labels)
    return g, prev, 2


def make_spider2(n: int) -> tuple[Graph, int, int]:
    """Depth-two star: center joined to n middles, one leaf per middle.

    Returns the graph, x = the leaf under middle 1, y = the center.
    """
    if n < 1:
        raise GraphInputError("spider2 needs n >= 1")
    labels = ["y"] + [f"m{i}" for i in range(1, n + 1)] + [f"l{i}" for i in range(1, n + 1)]
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    g = Graph.from_edges(2 * n + 1, edges, labels)
    return g, n + 1, 0


# -- labeled trees -----------------------------------------------------------


def make_tree_from_prufer(seq: list[int]) -> Graph:
    """Decode a Prüfer sequence into the unique labeled tree on len(seq)+2 vertices."""
    n = len(seq) + 2
    if any(not 0 <= s < n for s in seq):
        raise GraphInputError(f"Prüfer entries must lie in [0, {n})")
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges, tuple(str(i) for i in range(n)))


def prufer_sequence(g: Graph) -> list[int]:
    """Encode a tree on >= 2 vertices; inverse of make_tree_from_prufer."""
    n = g.n
    if n < 2 or g.edge_count() != n - 1 or len(g.components()) != 1:
        raise GraphInputError("Prüfer encoding needs a tree on >= 2 vertices")
    adj = list(g.adj)
    deg = [row.bit_count() for row in adj]
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        w = next(bits(adj[leaf]))
        seq.append(w)
        adj[w] &= ~(1 << leaf)
        adj[leaf] = 0
        deg[w] -= 1
        if deg[w] == 1:
            heapq.heappush(leaves, w)
    return seq


# -- the CLI spec mini-language ----------------------------------------------


@dataclass(frozen=True)
class GraphSpec:
    """Parsed form of a generator expression like "chain:3,4,5"."""

    kind: str
    params: tuple
    text: str


_INT_KINDS = {
    "empty": 1,
    "kn": 1,
    "path": 1,
    "cycle": 1,
    "pathpow": 2,
    "cycpow": 2,
    "modcyc": 3,
    "mnd": None,
    "chain": None,
    "ladder": 1,
    "multipartite": None,
    "gtk": 2,
    "spider2": 1,
    "prufer": None,
}


def parse_graph_spec(text: str) -> GraphSpec:
    s = text.strip()
    if s.startswith("union(") and s.endswith(")"):
        inner = s[len("union(") : -1]
        parts = _split_top_level(inner, ";")
        if not parts or any(not p.strip() for p in parts):
            raise GraphInputError(f"bad union spec {text!r}")
        specs = tuple(parse_graph_spec(p) for p in parts)
        return GraphSpec("union", specs, "union(" + ";".join(p.text for p in specs) + ")")
    if ":" not in s:
        raise GraphInputError(f"bad graph spec {text!r} (expected kind:params)")
    kind, _, rest = s.partition(":")
    kind = kind.strip()
    if kind == "file":
        if not rest:
            raise GraphInputError("file spec needs a path")
        return GraphSpec("file", (rest,), s)
    if kind not in _INT_KINDS:
        raise GraphInputError(f"unknown graph kind {kind!r}")
    rest = rest.strip()
    if rest:
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise GraphInputError(f"bad parameters in {text!r}") from None
    else:
        params = ()
    arity = _INT_KINDS[kind]
    if arity is not None and len(params) != arity:
        raise GraphInputError(f"{kind} expects {arity} parameter(s), got {len(params)}")
    if arity is None and kind != "prufer" and not params:
        raise GraphInputError(f"{kind} expects at least one parameter")
    return GraphSpec(kind, params, f"{kind}:{','.join(str(p) for p in params)}")


def _split_top_level(s: str, sep: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def build_graph(spec: GraphSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_graph_spec(spec)
    kind, params = spec.kind, spec.params
    if kind == "empty":
        return make_empty(*params)
    if kind == "kn":
        return make_complete(*params)
    if kind == "path":
        return make_path(*params)
    if kind == "cycle":
        return make_cycle(*params)
    if kind == "pathpow":
        return make_path_power(*params)
    if kind == "cycpow":
        return make_cycle_power(*params)
    if kind == "modcyc":
        return make_modified_cycle_power(*params)
    if kind == "mnd":
        return make_mnd(list(params))
    if kind == "chain":
        return make_chain(list(params))[0]
    if kind == "ladder":
        return make_ladder(*params)
    if kind == "multipartite":
        return make_multipartite(list(params))
    if kind == "gtk":
        return make_gtk(*params)[0]
    if kind == "spider2":
        return make_spider2(*params)[0]
    if kind == "prufer":
        return make_tree_from_prufer(list(params))
    if kind == "union":
        from .graphs import disjoint_union

        return disjoint_union([build_graph(sub) for sub in params])
    if kind == "file":
        from .graphs import parse_edge_list

        try:
            with open(params[0], "r", encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except OSError as exc:
            raise GraphInputError(f"cannot read {params[0]}: {exc}") from None
    raise GraphInputError(f"unknown graph kind {kind!r}")
