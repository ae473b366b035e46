"""Exact maximum-intersecting-family search and the r-EKR decision engine.

The maximum intersecting subfamily of independent r-sets is a maximum
clique in the compatibility graph over the enumerated family (edge iff
the two sets share a vertex).  The best star seeds the incumbent, so
instances where the star is optimal close as soon as the bound meets it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import kernel
from .graphs import Graph, GraphInputError
from .independence import SetFamily, best_star, enumerate_independent, family

# Above this many candidate sets the adjacency workspace stops being
# desk-scale; treated the same way as an exhausted node budget.
MAX_CANDIDATES = 40_000


class BudgetExceeded(RuntimeError):
    """Search stopped by the node budget; carries the best-known bound."""

    def __init__(self, message: str, best_size: int, witness: SetFamily | None, nodes: int):
        super().__init__(message)
        self.best_size = best_size
        self.witness = witness
        self.nodes = nodes


@dataclass(frozen=True)
class MaxFamilyResult:
    size: int
    witness: SetFamily
    nodes: int


@dataclass(frozen=True)
class EkrReport:
    """Verdict record for one (graph, r) EKR question."""

    spec: str
    r: int
    star_size: int
    star_center: int
    star_center_label: str
    max_family_size: int
    witness: SetFamily
    is_ekr: bool | None
    is_strict: bool | None
    nodes: int
    millis: float
    exact: bool

    def to_json_dict(self, timings: bool = False) -> dict:
        out = {
            "spec": self.spec,
            "r": self.r,
            "star_size": self.star_size,
            "star_center_label": self.star_center_label,
            "max_family_size": self.max_family_size,
            "is_ekr": self.is_ekr,
            "is_strict": self.is_strict,
            "witness": self.witness.to_hex(),
            "nodes": self.nodes,
            "exact": self.exact,
        }
        if timings:
            out["millis"] = round(self.millis, 3)
        return out


def _validate_family(g: Graph, fam: SetFamily, r: int) -> None:
    if fam.r != r:
        raise GraphInputError(f"family is {fam.r}-uniform, expected {r}")
    for m in fam.sets:
        if m & ~g.full_mask or not g.is_independent(m):
            raise GraphInputError("family member is not an independent set of the graph")


def max_intersecting_family(
    g: Graph,
    r: int,
    lower_bound: int | None = None,
    node_budget: int = kernel.DEFAULT_NODE_BUDGET,
) -> MaxFamilyResult:
    """Exact maximum intersecting subfamily of the independent r-sets.

    The witness is the lexicographically least maximum family in canonical
    order, so output is reproducible no matter how the search went.
    Raises BudgetExceeded when the node budget stops the proof.
    """
    if r < 1:
        raise GraphInputError("r must be >= 1")
    fam = enumerate_independent(g, r)
    if not fam.sets:
        return MaxFamilyResult(0, family(r, (), origin="max-intersecting"), 0)
    if len(fam.sets) > MAX_CANDIDATES:
        raise BudgetExceeded(
            f"{len(fam.sets)} candidate sets exceed the search capacity",
            best_size=best_star(g, r)[1],
            witness=None,
            nodes=0,
        )
    _, star_size = best_star(g, r)
    lb = max(star_size, lower_bound or 0)
    size, rough_witness, nodes, exact = kernel.max_clique(fam.sets, lb, node_budget)
    if not exact:
        wit = None
        if rough_witness is not None:
            wit = family(r, (fam.sets[i] for i in rough_witness), origin="max-intersecting:partial")
        raise BudgetExceeded("node budget exhausted", best_size=size, witness=wit, nodes=nodes)
    indices, nodes2, exact2 = kernel.find_clique(fam.sets, size, node_budget)
    nodes_total = nodes + nodes2
    if exact2 and indices is not None:
        masks = [fam.sets[i] for i in indices]
    elif rough_witness is not None:
        masks = [fam.sets[i] for i in rough_witness]
    else:
        # the star attained the maximum and the retrieval pass died on
        # budget; fall back to the star itself (still a valid witness)
        center, _ = best_star(g, r)
        masks = [m for m in fam.sets if m >> center & 1]
    return MaxFamilyResult(size, family(r, masks, origin="max-intersecting"), nodes_total)


def is_r_ekr(
    g: Graph,
    r: int,
    node_budget: int = kernel.DEFAULT_NODE_BUDGET,
    check_strict: bool = False,
    spec: str = "",
) -> EkrReport:
    """Full EKR verdict for (g, r); never raises on budget, reports inexact.

    is_ekr is None when the budget died without a verdict; it is a certain
    False when a family beating the star was already in hand.
    """
    if r < 1:
        raise GraphInputError("r must be >= 1")
    t0 = time.perf_counter()
    center, star_size = best_star(g, r)
    label = g.label(center) if center >= 0 else ""
    try:
        res = max_intersecting_family(g, r, lower_bound=star_size, node_budget=node_budget)
        exact = True
        size, witness, nodes = res.size, res.witness, res.nodes
        ekr: bool | None = size == star_size
    except BudgetExceeded as exc:
        exact = False
        size = exc.best_size
        witness = exc.witness or family(r, (), origin="max-intersecting:unknown")
        nodes = exc.nodes
        ekr = False if size > star_size else None
    strict: bool | None = None
    if check_strict and exact and ekr:
        try:
            strict = is_strict_r_ekr(g, r, node_budget=node_budget)
        except BudgetExceeded:
            strict = None
    millis = (time.perf_counter() - t0) * 1000.0
    return EkrReport(
        spec=spec,
        r=r,
        star_size=star_size,
        star_center=center,
        star_center_label=label,
        max_family_size=size,
        witness=witness,
        is_ekr=ekr,
        is_strict=strict,
        nodes=nodes,
        millis=millis,
        exact=exact,
    )


def is_strict_r_ekr(g: Graph, r: int, node_budget: int = kernel.DEFAULT_NODE_BUDGET) -> bool:
    """True iff every maximum intersecting subfamily is a star.

    Callers must already know the graph is r-EKR.  A family is a subfamily
    of some star exactly when its members share a common vertex, so this
    searches for a maximum-size family with empty common intersection.
    """
    if r < 1:
        raise GraphInputError("r must be >= 1")
    fam = enumerate_independent(g, r)
    if not fam.sets:
        return True
    _, star_size = best_star(g, r)
    indices, nodes, exact = kernel.find_clique(
        fam.sets, star_size, node_budget, require_empty_common=True
    )
    if not exact:
        raise BudgetExceeded("node budget exhausted", best_size=star_size, witness=None, nodes=nodes)
    return indices is None
