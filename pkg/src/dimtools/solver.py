"""Finding, enumerating, and certifying dominating induced matchings.

A dominating induced matching (DIM) of a graph G is an induced matching
that dominates every edge of G.  Equivalently, writing D_e for the set
of edges dominated by e (e itself plus every edge sharing an endpoint
with it), a set M of edges is a DIM exactly when the family
{D_e : e in M} partitions E(G), i.e. every edge is dominated by exactly
one member.  The solver exploits that characterization as an exact
cover search over the edge set; :func:`brute_force_dims` is the
independent oracle that scans all 2^m edge subsets against the
definitional check instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .graph import EdgeId, Graph

EdgeSet = frozenset[EdgeId]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a search exceeds its node-expansion budget."""


class DimClass(enum.Enum):
    VALID_DIM = "valid-dim"
    NOT_MATCHING = "not-matching"
    NOT_INDUCED = "not-induced"
    NOT_DOMINATING = "not-dominating"


@dataclass(frozen=True)
class DimWitness:
    """Diagnostic classification of a candidate edge set.

    ``counterexample`` pins down the failure: the pair of members
    sharing a vertex (not-matching), the edge joining two members
    (not-induced), or the edge left undominated (not-dominating).  It
    is None exactly when the candidate is a valid DIM.
    """

    edges: EdgeSet
    classification: DimClass
    counterexample: Optional[EdgeId | tuple[EdgeId, EdgeId]] = None

    @property
    def is_valid(self) -> bool:
        return self.classification is DimClass.VALID_DIM


def dominated_set(g: Graph, e: EdgeId) -> EdgeSet:
    """Edges dominated by e: e itself plus all edges sharing an endpoint."""
    if not (0 <= e < g.m):
        raise ValueError(f"edge id {e} out of range")
    u, v = g.edges[e]
    return frozenset(g.incident[u]) | frozenset(g.incident[v])


def _domination_masks(g: Graph) -> list[int]:
    """Bitmask of D_e per edge (bit f set iff f is dominated by e)."""
    masks = []
    for u, v in g.edges:
        mask = 0
        for f in g.incident[u]:
            mask |= 1 << f
        for f in g.incident[v]:
            mask |= 1 << f
        masks.append(mask)
    return masks


def classify_dim(g: Graph, edge_ids: Iterable[EdgeId]) -> DimWitness:
    """Classify an edge set via the definitional three-part check.

    Checks, in order: mutually non-adjacent (matching), no graph edge
    joining two members (induced), every edge dominated.  Scans run in
    canonical edge order, so the reported counterexample is
    deterministic.
    """
    members = frozenset(edge_ids)
    for e in members:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range")
    owner: dict[int, EdgeId] = {}
    for e in sorted(members):
        for w in g.edges[e]:
            if w in owner:
                return DimWitness(members, DimClass.NOT_MATCHING, (owner[w], e))
            owner[w] = e
    for f, (u, v) in enumerate(g.edges):
        if f not in members and u in owner and v in owner:
            # owner[u] != owner[v] is automatic: equal owners would make
            # f a parallel copy of that member.
            return DimWitness(members, DimClass.NOT_INDUCED, f)
    for f, (u, v) in enumerate(g.edges):
        if u not in owner and v not in owner:
            return DimWitness(members, DimClass.NOT_DOMINATING, f)
    return DimWitness(members, DimClass.VALID_DIM, None)


class _ExactCover:
    """Exact cover over E(G) with the candidate sets {D_e}.

    Branches on the lowest-indexed uncovered edge f and tries each
    e in D_f (ascending) as the unique dominator of f; a branch dies
    when f has no viable candidate left.  Every candidate trial counts
    against the node budget.
    """

    def __init__(self, g: Graph, budget: Optional[int]) -> None:
        self.masks = _domination_masks(g)
        self.candidates = [
            sorted(set(g.incident[u]) | set(g.incident[v])) for u, v in g.edges
        ]
        self.full = (1 << g.m) - 1
        self.budget = budget
        self.nodes = 0

    def solutions(self) -> Iterable[EdgeSet]:
        yield from self._solve(self.full, [])

    def _solve(self, uncovered: int, chosen: list[EdgeId]) -> Iterable[EdgeSet]:
        if uncovered == 0:
            yield frozenset(chosen)
            return
        f = (uncovered & -uncovered).bit_length() - 1
        for e in self.candidates[f]:
            mask = self.masks[e]
            if mask & ~uncovered:
                continue
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"exceeded search budget of {self.budget} nodes"
                )
            chosen.append(e)
            yield from self._solve(uncovered & ~mask, chosen)
            chosen.pop()


def find_dim(g: Graph, budget: Optional[int] = None) -> Optional[EdgeSet]:
    """Some valid DIM of g, or None if no DIM exists.

    The empty matching is a DIM of any edgeless graph.
    """
    for sol in _ExactCover(g, budget).solutions():
        return sol
    return None


def enumerate_dims(g: Graph, budget: int = 10_000_000) -> list[EdgeSet]:
    """All DIMs of g, in lexicographic order of sorted edge-id tuples.

    Raises SearchBudgetExceeded once the search expands more than
    ``budget`` nodes; results are never silently truncated.
    """
    sols = list(_ExactCover(g, budget).solutions())
    sols.sort(key=lambda s: tuple(sorted(s)))
    return sols


def dim_size(g: Graph, budget: Optional[int] = None) -> Optional[int]:
    """The common size of g's DIMs (all DIMs of a graph have equal size),
    or None if g has no DIM."""
    sol = find_dim(g, budget)
    return None if sol is None else len(sol)


def brute_force_dims(g: Graph) -> list[EdgeSet]:
    """Oracle: scan all 2^m edge subsets with the definitional check.

    Evaluates matching, induced, and dominating independently for every
    subset using vectorized subset-DP over bitmasks; shares nothing
    with the exact cover search.  Requires m <= 20.
    """
    m = g.m
    if m > 20:
        raise ValueError(f"brute force limited to 20 edges, got {m}")
    if m == 0:
        return [frozenset()]

    dom = np.array(_domination_masks(g), dtype=np.int64)
    adjacent = dom & ~(np.int64(1) << np.arange(m, dtype=np.int64))
    vertex_of = sorted({w for e in g.edges for w in e})
    vid = {w: i for i, w in enumerate(vertex_of)}
    endpoint_masks = np.array(
        [(1 << vid[u]) | (1 << vid[v]) for u, v in g.edges], dtype=np.int64
    )

    size = 1 << m
    conflict = np.zeros(size, dtype=np.int64)
    dominated = np.zeros(size, dtype=np.int64)
    vcover = np.zeros(size, dtype=np.int64)
    for i in range(m):
        lo = 1 << i
        conflict[lo : 2 * lo] = conflict[:lo] | adjacent[i]
        dominated[lo : 2 * lo] = dominated[:lo] | dom[i]
        vcover[lo : 2 * lo] = vcover[:lo] | endpoint_masks[i]

    subset = np.arange(size, dtype=np.int64)
    is_matching = (conflict & subset) == 0
    is_dominating = dominated == (1 << m) - 1
    spanned = np.zeros(size, dtype=np.int64)
    for f in range(m):
        inside = (vcover & endpoint_masks[f]) == endpoint_masks[f]
        spanned |= inside.astype(np.int64) << np.int64(f)
    is_induced = (spanned & ~subset) == 0

    valid = np.flatnonzero(is_matching & is_induced & is_dominating)
    out = [
        frozenset(e for e in range(m) if mask >> e & 1) for mask in valid.tolist()
    ]
    out.sort(key=lambda s: tuple(sorted(s)))
    return out
