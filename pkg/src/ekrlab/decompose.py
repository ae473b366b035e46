"""Executable replays of the compression and contraction decompositions.

Each operation splits an intersecting family of independent r-sets into
the parts the corresponding induction argument feeds to smaller graphs,
then checks the counting identity and structural side conditions.  All
family members stay in the original graph's vertex numbering, so a part
"lives on G - v" simply means every member avoids v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphInputError, bits, delete_vertices
from .generators import make_ladder, ladder_vertex
from .independence import SetFamily, enumerate_independent, family, star_sizes


class InternalCheckError(RuntimeError):
    """A decomposition identity that must hold failed: implementation bug."""


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise InternalCheckError(what)


def _validate_intersecting(g: Graph, fam: SetFamily) -> None:
    for m in fam.sets:
        if m & ~g.full_mask or not g.is_independent(m):
            raise GraphInputError("family member is not an independent set of the graph")
    if not fam.is_intersecting():
        raise GraphInputError("family is not intersecting")


# -- vertex compression (the G - v / G "down" v split) -----------------------


@dataclass(frozen=True)
class CompressionSplit:
    """Result of pushing dominated sets off vi and splitting on membership.

    compressed: the image family (same size as the input);
    kept:       image members avoiding vi (live on G - vi);
    reduced:    image members through vi with vi dropped (live on the
                graph with vi's closed neighborhood deleted).
    """

    compressed: SetFamily
    kept: SetFamily
    reduced: SetFamily


def compress_family(g: Graph, fam: SetFamily, v1: int, vi: int) -> CompressionSplit:
    """Apply the v1-for-vi compression pointwise and split the image.

    Requires v1 adjacent to vi with N[v1] contained in N[vi] (v1 simplicial
    makes any neighbor qualify), and an intersecting family of independent
    r-sets.  The returned parts satisfy the size identity
    len(fam) == len(kept) + len(reduced) and are both intersecting.
    """
    g._check_vertex(v1)
    g._check_vertex(vi)
    if v1 == vi or not g.has_edge(v1, vi):
        raise GraphInputError("v1 and vi must be adjacent")
    if g.closed_neighborhood(v1) & ~g.closed_neighborhood(vi):
        raise GraphInputError("N[v1] must be contained in N[vi]")
    _validate_intersecting(g, fam)
    b1, bi = 1 << v1, 1 << vi
    members = set(fam.sets)
    image = []
    for m in fam.sets:
        if m & bi and not m & b1:
            moved = (m & ~bi) | b1
            if moved not in members:
                m = moved
        image.append(m)
    compressed = family(fam.r, image, origin="compressed")
    _require(len(compressed) == len(fam), "compression must preserve family size")
    kept = family(fam.r, (m for m in image if not m & bi), origin="kept")
    reduced = family(fam.r - 1, (m & ~bi for m in image if m & bi), origin="reduced")
    _require(len(fam) == len(kept) + len(reduced), "split sizes must add up")
    for m in kept.sets:
        _require(g.is_independent(m), "kept member must stay independent")
    closed_i = g.closed_neighborhood(vi)
    for m in reduced.sets:
        _require(not m & closed_i, "reduced member must avoid N[vi]")
        _require(g.is_independent(m), "reduced member must stay independent")
    _require(kept.is_intersecting(), "kept part must be intersecting")
    _require(reduced.is_intersecting(), "reduced part must be intersecting")
    return CompressionSplit(compressed, kept, reduced)


# -- clique contraction -------------------------------------------------------


def contract_clique(g: Graph, clique: int) -> tuple[Graph, dict[int, int]]:
    """The graph with the clique collapsed onto its lowest vertex.

    Every external neighbor of any clique member becomes a neighbor of the
    surviving vertex; duplicate edges merge.  Returns the new graph and the
    old-index -> new-index map of the surviving vertices.
    """
    if clique == 0:
        raise GraphInputError("clique must be nonempty")
    vs = list(bits(clique))
    for a in vs:
        for b in vs:
            if a != b and not g.has_edge(a, b):
                raise GraphInputError("vertex set does not induce a clique")
    v1 = vs[0]
    ext = 0
    for v in vs:
        ext |= g.adj[v]
    ext &= ~clique
    adj = list(g.adj)
    adj[v1] = ext
    for u in range(g.n):
        if ext >> u & 1:
            adj[u] |= 1 << v1
        elif u != v1:
            adj[u] &= ~(1 << v1)
    merged = Graph(g.n, tuple(adj), g.labels)
    gone = clique & ~(1 << v1)
    out = delete_vertices(merged, gone)
    survivors = [v for v in range(g.n) if not gone >> v & 1]
    return out, {old: new for new, old in enumerate(survivors)}


@dataclass(frozen=True)
class ContractionSplit:
    """The four-part split of a maximum family along a clique contraction.

    contracted:       distinct images that stay independent after the
                      clique collapses to its lowest vertex;
    paired_cores[i]:  (r-1)-sets present with both the surviving vertex
                      and clique vertex i (the double-counted fibers);
    root_conflicts[i]:   members through the surviving vertex blocked by a
                      neighbor of clique vertex i;
    member_conflicts[i]: members through clique vertex i blocked by an
                      external neighbor of the clique.
    """

    clique_vertices: tuple[int, ...]
    contracted: SetFamily
    paired_cores: tuple[SetFamily, ...]
    root_conflicts: tuple[SetFamily, ...]
    member_conflicts: tuple[SetFamily, ...]

    def counted_total(self) -> int:
        union_root: set[int] = set()
        for part in self.root_conflicts:
            union_root.update(part.sets)
        return (
            len(self.contracted)
            + sum(len(p) for p in self.paired_cores)
            + len(union_root)
            + sum(len(p) for p in self.member_conflicts)
        )


def contract_clique_split(
    g: Graph,
    clique: int,
    fam: SetFamily,
    family_is_maximum: bool = True,
) -> ContractionSplit:
    """Split a maximum intersecting family along a clique contraction.

    The counting identity len(fam) == counted_total() relies on the family
    being maximum when the clique has 3+ vertices (closure under swapping
    the clique member for the surviving vertex).  With family_is_maximum
    False an identity failure is reported as an input error instead of an
    internal one.
    """
    vs = list(bits(clique))
    if len(vs) < 2:
        raise GraphInputError("clique must have at least 2 vertices")
    for a in vs:
        for b in vs:
            if a != b and not g.has_edge(a, b):
                raise GraphInputError("vertex set does not induce a clique")
    _validate_intersecting(g, fam)
    v1 = vs[0]
    b1 = 1 << v1
    ext = 0
    for v in vs:
        ext |= g.adj[v]
    ext &= ~clique

    members = set(fam.sets)
    images = set()
    for m in fam.sets:
        inter = m & clique
        _require(inter.bit_count() <= 1, "independent set meets a clique at most once")
        img = (m & ~clique) | b1 if inter else m
        blocked_by_ext = bool(img & b1) and bool((img & ~b1) & ext)
        if not blocked_by_ext:
            images.add(img)
    contracted = family(fam.r, images, origin="contracted")

    paired, roots, blocked = [], [], []
    for v in vs[1:]:
        bv = 1 << v
        paired.append(
            family(
                fam.r - 1,
                (
                    m & ~b1
                    for m in fam.sets
                    if m & b1 and ((m & ~b1) | bv) in members
                ),
                origin=f"paired:{v}",
            )
        )
        roots.append(
            family(
                fam.r,
                (m for m in fam.sets if m & b1 and g.adj[v] & (m & ~b1)),
                origin=f"root-conflict:{v}",
            )
        )
        blocked.append(
            family(
                fam.r,
                (m for m in fam.sets if m & bv and ext & (m & ~bv)),
                origin=f"member-conflict:{v}",
            )
        )
    split = ContractionSplit(tuple(vs), contracted, tuple(paired), tuple(roots), tuple(blocked))

    if split.counted_total() != len(fam):
        msg = (
            f"contraction counting identity failed: {split.counted_total()} != {len(fam)}"
        )
        if family_is_maximum:
            raise InternalCheckError(msg)
        raise GraphInputError(msg + " (family not maximum?)")
    _require(contracted.is_intersecting(), "contracted part must be intersecting")
    for part in paired:
        _require(part.is_intersecting(), "paired cores must be intersecting")
        for m in part.sets:
            _require(not m & clique, "paired core must avoid the clique")
            _require(g.is_independent(m), "paired core must stay independent")
    seen: set[int] = set()
    for part in blocked:
        for m in part.sets:
            _require(m not in seen, "member-conflict parts must be disjoint")
            seen.add(m)
    return split


def contraction_closure_violations(
    g: Graph, clique: int, fam: SetFamily
) -> list[tuple[int, int, int]]:
    """Cores violating the swap-closure property of maximum families.

    For a maximum family, whenever a core appears with two different
    non-surviving clique vertices and the core avoids every external
    neighbor of the clique, the core plus the surviving vertex must be in
    the family.  Returns (core, vi, vj) triples that break this; empty for
    maximum families over cliques with 3+ vertices.
    """
    vs = list(bits(clique))
    if len(vs) < 3:
        raise GraphInputError("closure property needs a clique on 3+ vertices")
    v1 = vs[0]
    ext = 0
    for v in vs:
        ext |= g.adj[v]
    ext &= ~clique
    members = set(fam.sets)
    cores: dict[int, list[int]] = {}
    for m in fam.sets:
        inter = m & clique
        if inter and not inter & (1 << v1) and inter.bit_count() == 1:
            v = inter.bit_length() - 1
            cores.setdefault(m & ~inter, []).append(v)
    out = []
    for core, hits in cores.items():
        if len(hits) >= 2 and not core & ext:
            if (core | (1 << v1)) not in members:
                out.append((core, hits[0], hits[1]))
    return out


# -- ladder tail decomposition ------------------------------------------------


@dataclass(frozen=True)
class LadderReport:
    """Replay of the last-rung fold for an intersecting family on a ladder."""

    n: int
    family_size: int
    folded: SetFamily
    paired_x: SetFamily
    paired_y: SetFamily
    tail_cases: tuple[SetFamily, ...]
    merged_x: SetFamily
    merged_y: SetFamily
    fold_identity_ok: bool
    merged_identity_ok: bool
    merged_parts_disjoint: bool
    merged_parts_intersecting: bool
    corner_star_sizes: tuple[int, int, int]
    corner_star_inequality_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "family_size": self.family_size,
            "folded": len(self.folded),
            "paired_x": len(self.paired_x),
            "paired_y": len(self.paired_y),
            "tail_cases": [len(t) for t in self.tail_cases],
            "merged_x": len(self.merged_x),
            "merged_y": len(self.merged_y),
            "fold_identity_ok": self.fold_identity_ok,
            "merged_identity_ok": self.merged_identity_ok,
            "merged_parts_disjoint": self.merged_parts_disjoint,
            "merged_parts_intersecting": self.merged_parts_intersecting,
            "corner_star_sizes": list(self.corner_star_sizes),
            "corner_star_inequality_ok": self.corner_star_inequality_ok,
        }


def replay_ladder_decomposition(n: int, fam: SetFamily) -> LadderReport:
    """Fold the last rung of a ladder onto the one before and split the family.

    The input must be an intersecting family of independent 3-sets of the
    n-rung ladder, n >= 4.  Checks the fold counting identity, the merged
    identity over the two (r-1)-parts, their disjointness and intersecting
    property, and the corner-star growth inequality
    |star(x1, L_n)| >= |star(x1, L_{n-1})| + 2 |star2(x1, L_{n-2})| + 2.
    """
    if n < 4:
        raise GraphInputError("ladder decomposition needs n >= 4")
    if fam.r != 3:
        raise GraphInputError("ladder decomposition is about 3-sets")
    g = make_ladder(n)
    _validate_intersecting(g, fam)

    xn = ladder_vertex(n, "x", n)
    yn = ladder_vertex(n, "y", n)
    xn1 = ladder_vertex(n, "x", n - 1)
    yn1 = ladder_vertex(n, "y", n - 1)
    xn2 = ladder_vertex(n, "x", n - 2)
    yn2 = ladder_vertex(n, "y", n - 2)
    zmask = sum(1 << v for v in (xn, yn, xn1, yn1, xn2, yn2))

    def fold(m: int) -> int:
        if m >> xn & 1:
            m = (m & ~(1 << xn)) | (1 << xn1)
        if m >> yn & 1:
            m = (m & ~(1 << yn)) | (1 << yn1)
        return m

    members = set(fam.sets)
    fold_images = [fold(m) for m in fam.sets]
    folded = family(
        3,
        (img for img in fold_images if g.is_independent(img)),
        origin="folded",
    )
    paired_x = family(
        2,
        (
            m & ~(1 << xn)
            for m in fam.sets
            if m >> xn & 1 and ((m & ~(1 << xn)) | (1 << xn1)) in members
        ),
        origin="paired-x",
    )
    paired_y = family(
        2,
        (
            m & ~(1 << yn)
            for m in fam.sets
            if m >> yn & 1 and ((m & ~(1 << yn)) | (1 << yn1)) in members
        ),
        origin="paired-y",
    )
    signatures = (
        (1 << xn2) | (1 << xn),
        (1 << yn2) | (1 << yn),
        (1 << xn1) | (1 << yn),
        (1 << yn1) | (1 << xn),
        (1 << xn2) | (1 << yn1) | (1 << xn),
        (1 << yn2) | (1 << xn1) | (1 << yn),
    )
    tail_cases = tuple(
        family(3, (m for m in fam.sets if m & zmask == sig), origin=f"tail:{k + 1}")
        for k, sig in enumerate(signatures)
    )
    merged_x = family(
        2,
        list(paired_x.sets) + [m & ~(1 << xn) for m in tail_cases[0].sets],
        origin="merged-x",
    )
    merged_y = family(
        2,
        list(paired_y.sets) + [m & ~(1 << yn) for m in tail_cases[1].sets],
        origin="merged-y",
    )

    fold_ok = len(fam) == (
        len(folded)
        + len(paired_x)
        + len(paired_y)
        + sum(len(t) for t in tail_cases)
    )
    _require(fold_ok, "ladder fold counting identity failed")
    merged_ok = len(fam) == (
        len(folded)
        + len(merged_x)
        + len(merged_y)
        + sum(len(t) for t in tail_cases[2:])
    )
    _require(merged_ok, "ladder merged counting identity failed")
    disjoint = (
        len(merged_x) == len(paired_x) + len(tail_cases[0])
        and len(merged_y) == len(paired_y) + len(tail_cases[1])
    )
    _require(disjoint, "merged parts must be disjoint unions")
    intersecting = merged_x.is_intersecting() and merged_y.is_intersecting()
    _require(intersecting, "merged parts must be intersecting")
    short_mask = (1 << (2 * (n - 2))) - 1  # vertices of the (n-2)-rung ladder
    for part in (merged_x, merged_y):
        for m in part.sets:
            _require(m & ~short_mask == 0, "merged member must avoid the last two rungs")
            _require(g.is_independent(m), "merged member must stay independent")

    corner = ladder_vertex(n, "x", 1)
    s_full = star_sizes(g, 3)[corner]
    s_prev = star_sizes(make_ladder(n - 1), 3)[corner]
    s_two = star_sizes(make_ladder(n - 2), 2)[corner]
    ineq_ok = s_full >= s_prev + 2 * s_two + 2
    _require(ineq_ok, "corner star growth inequality failed")

    return LadderReport(
        n=n,
        family_size=len(fam),
        folded=folded,
        paired_x=paired_x,
        paired_y=paired_y,
        tail_cases=tail_cases,
        merged_x=merged_x,
        merged_y=merged_y,
        fold_identity_ok=fold_ok,
        merged_identity_ok=merged_ok,
        merged_parts_disjoint=disjoint,
        merged_parts_intersecting=intersecting,
        corner_star_sizes=(s_full, s_prev, s_two),
        corner_star_inequality_ok=ineq_ok,
    )
