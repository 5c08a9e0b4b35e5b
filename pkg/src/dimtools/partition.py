"""Partitioning edge sets into dominating induced matchings.

For a connected graph whose edges split into DIM color classes, the
number of classes is forced: every class holds exactly one edge of
E(u) union E(v) for any fixed edge uv, so there are d(u) + d(v) - 1
classes, and the graph must be regular or biregular.  The search here
bakes those constraints in; :func:`brute_force_dim_partitions` is the
assumption-free oracle that covers the edge set by explicitly
enumerated DIMs instead.

The list assignment sends each vertex to the set of class colors
missing from its incident edges.  For an r-regular graph with 2r - 1
classes each list is an (r-1)-subset of the color set; lists of
adjacent vertices are disjoint, every (r-1)-subset occurs, and all
fibers have equal size.  In the biregular case with side degrees
(x, y) and x + y - 1 classes, degree-x vertices carry (y-1)-subsets
and degree-y vertices carry (x-1)-subsets, with the same three
properties split across the two target families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .graph import Graph, components, degree_profile, induced_subgraph, is_connected
from .solver import (
    DimClass,
    EdgeSet,
    _domination_masks,
    brute_force_dims,
    classify_dim,
)


@dataclass(frozen=True)
class DimPartition:
    """A total coloring of the edge set whose classes are DIMs.

    Colors are 1-based.  The constructor checks totality, color range,
    and nonempty classes; DIM validity of each class is the producer's
    obligation and is what :func:`verify_dim_partition` re-checks.
    """

    num_classes: int
    color_of: tuple[int, ...]
    classes: tuple[EdgeSet, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.num_classes < 0:
            raise ValueError("class count must be nonnegative")
        buckets: list[set[int]] = [set() for _ in range(self.num_classes)]
        for eid, c in enumerate(self.color_of):
            if not (1 <= c <= self.num_classes):
                raise ValueError(f"color {c} out of range 1..{self.num_classes}")
            buckets[c - 1].add(eid)
        if any(not b for b in buckets):
            raise ValueError("every color class must be nonempty")
        object.__setattr__(self, "classes", tuple(frozenset(b) for b in buckets))


@dataclass(frozen=True)
class PartitionCheck:
    valid: bool
    class_count_ok: bool
    regularity: str  # "regular" | "biregular" | "neither"


@dataclass(frozen=True)
class ListAssignment:
    """Map from vertices to subsets of the color universe {1..num_labels}."""

    num_labels: int
    lists: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class ListCheck:
    disjointness: bool
    surjective: bool
    equal_fibers: bool


def _component_class_count(g: Graph) -> Optional[int]:
    """The forced class count d(u)+d(v)-1, or None if it varies by edge."""
    counts = {g.degrees[u] + g.degrees[v] - 1 for u, v in g.edges}
    if len(counts) != 1:
        return None
    return counts.pop()


def _search_component_colors(g: Graph, k: int) -> Optional[list[int]]:
    """Backtracking edge coloring of a connected graph into k DIM classes.

    Assigns colors to edges in canonical order.  A class may take an
    edge only while its dominated-edge set stays disjoint from the
    edge's dominated set (each class dominates each edge at most once);
    once the last potential dominator of an edge f has been colored,
    every class must already dominate f.  Color symmetry is broken by
    allowing a new color only when all lower colors are in use.
    """
    m = g.m
    masks = _domination_masks(g)
    deadline: dict[int, list[int]] = {}
    for f in range(m):
        closes_at = max(e for e in range(m) if masks[e] >> f & 1)
        deadline.setdefault(closes_at, []).append(f)

    colors = [0] * m
    class_dom = [0] * (k + 1)

    def assign(i: int, used: int) -> bool:
        if i == m:
            return used == k
        mask = masks[i]
        for c in range(1, min(used + 1, k) + 1):
            if class_dom[c] & mask:
                continue
            class_dom[c] |= mask
            colors[i] = c
            now_used = max(used, c)
            complete = all(
                class_dom[cc] >> f & 1
                for f in deadline.get(i, ())
                for cc in range(1, k + 1)
            )
            if complete and assign(i + 1, now_used):
                return True
            class_dom[c] ^= mask
        colors[i] = 0
        return False

    if m == 0:
        return []
    return colors if assign(0, 0) else None


def find_dim_partition(g: Graph) -> Optional[DimPartition]:
    """Partition E(g) into DIM classes, or None when impossible.

    Each edge-bearing component is partitioned independently; all
    components must agree on the class count (forced per component by
    the degree sums), and a connected component whose degree profile is
    neither regular nor biregular is rejected without search.  The
    edgeless graph gets the empty partition.
    """
    comp_vertex_sets = [c for c in components(g) if any(g.incident[v] for v in c)]
    if not comp_vertex_sets:
        return DimPartition(0, ())

    target_k: Optional[int] = None
    color_of = [0] * g.m
    for comp in comp_vertex_sets:
        sub, old_vertices = induced_subgraph(g, comp)
        k = _component_class_count(sub)
        if k is None:
            return None
        if target_k is None:
            target_k = k
        elif k != target_k:
            return None
        profile = degree_profile(sub)
        if not profile.is_regular and profile.biregular is None:
            return None
        sub_colors = _search_component_colors(sub, k)
        if sub_colors is None:
            return None
        for local_eid, (a, b) in enumerate(sub.edges):
            eid = g.edge_id(old_vertices[a], old_vertices[b])
            color_of[eid] = sub_colors[local_eid]

    assert target_k is not None
    partition = DimPartition(target_k, tuple(color_of))
    for cls in partition.classes:
        assert classify_dim(g, cls).is_valid, "search produced a non-DIM class"
    return partition


def verify_dim_partition(g: Graph, p: DimPartition) -> PartitionCheck:
    """Re-check a partition from scratch against its graph.

    ``valid`` holds when every class is a DIM; ``class_count_ok`` when
    the class count equals d(u)+d(v)-1 for every edge uv.  Regularity
    is read off the degree profile and reported rather than assumed.
    """
    if len(p.color_of) != g.m:
        raise ValueError(
            f"partition colors {len(p.color_of)} edges, graph has {g.m}"
        )
    valid = all(classify_dim(g, cls).is_valid for cls in p.classes)
    count_ok = all(
        p.num_classes == g.degrees[u] + g.degrees[v] - 1 for u, v in g.edges
    )
    profile = degree_profile(g)
    if profile.is_regular:
        regularity = "regular"
    elif profile.biregular is not None:
        regularity = "biregular"
    else:
        regularity = "neither"
    return PartitionCheck(valid=valid, class_count_ok=count_ok, regularity=regularity)


def list_assignment(g: Graph, p: DimPartition) -> ListAssignment:
    """Assign each vertex the set of class colors absent at that vertex."""
    for cls in p.classes:
        witness = classify_dim(g, cls)
        if not witness.is_valid:
            raise ValueError(
                f"partition class is not a DIM ({witness.classification.value})"
            )
    if len(p.color_of) != g.m:
        raise ValueError("partition does not color this graph")
    universe = frozenset(range(1, p.num_classes + 1))
    lists = []
    for v in range(g.n):
        incident_colors = {p.color_of[e] for e in g.incident[v]}
        lists.append(universe - incident_colors)
    return ListAssignment(p.num_classes, tuple(lists))


def _expected_list_shape(g: Graph) -> tuple[dict[int, int], int, set[int]]:
    """Expected per-vertex list size, universe size, and target subset sizes.

    Regular degree r: every list is an (r-1)-subset of a (2r-1)-color
    universe.  Biregular (x, y): degree-x vertices carry (y-1)-subsets
    and degree-y vertices (x-1)-subsets of an (x+y-1)-color universe.
    Raises when the profile is neither.
    """
    profile = degree_profile(g)
    if profile.is_regular:
        r = profile.max_degree
        universe = 2 * r - 1 if r > 0 else 0
        size = max(r - 1, 0)
        return {v: size for v in range(g.n)}, universe, {size}
    if profile.biregular is not None:
        x, y = profile.biregular.x_degree, profile.biregular.y_degree
        expected = {}
        for v in profile.biregular.x_side:
            expected[v] = y - 1
        for v in profile.biregular.y_side:
            expected[v] = x - 1
        return expected, x + y - 1, {x - 1, y - 1}
    raise ValueError("degree profile is neither regular nor biregular")


def verify_list_properties(g: Graph, assignment: ListAssignment) -> ListCheck:
    """Check disjointness along edges, surjectivity, and equal fibers.

    The target family is every subset of the color universe whose size
    matches some vertex's expected list size (one size in the regular
    case, up to two in the biregular case).  Fiber sizes are compared
    across the whole combined family, not only disjoint pairs.
    """
    expected, universe_size, subset_sizes = _expected_list_shape(g)
    if assignment.num_labels != universe_size:
        raise ValueError(
            f"label universe has {assignment.num_labels} colors, expected {universe_size}"
        )
    if len(assignment.lists) != g.n:
        raise ValueError("assignment does not cover every vertex")
    for v in range(g.n):
        if len(assignment.lists[v]) != expected[v]:
            raise ValueError(
                f"vertex {v} has a list of size {len(assignment.lists[v])}, "
                f"expected {expected[v]}"
            )

    disjoint = all(
        not (assignment.lists[u] & assignment.lists[v]) for u, v in g.edges
    )

    fibers: dict[frozenset[int], int] = {}
    for size in sorted(subset_sizes):
        for combo in itertools.combinations(range(1, assignment.num_labels + 1), size):
            fibers[frozenset(combo)] = 0
    for v in range(g.n):
        lst = assignment.lists[v]
        if lst in fibers:
            fibers[lst] += 1
    surjective = all(count > 0 for count in fibers.values())
    equal_fibers = len(set(fibers.values())) <= 1
    return ListCheck(
        disjointness=disjoint, surjective=surjective, equal_fibers=equal_fibers
    )


def check_kneser_isomorphism(g: Graph, assignment: ListAssignment) -> bool:
    """Does the list assignment exhibit g as the disjointness graph on
    (r-1)-subsets of 2r-1 colors?

    True exactly when the vertex count equals C(2r-1, r-1), the lists
    hit every (r-1)-subset once, and two vertices are adjacent iff
    their lists are disjoint.  Requires a connected regular graph.
    """
    profile = degree_profile(g)
    if not profile.is_regular:
        raise ValueError("graph is not regular")
    if not is_connected(g):
        raise ValueError("graph is not connected")
    r = profile.max_degree
    if assignment.num_labels != 2 * r - 1 or len(assignment.lists) != g.n:
        raise ValueError("assignment shape does not match an r-regular partition")

    if g.n != comb(2 * r - 1, r - 1):
        return False
    if len(set(assignment.lists)) != g.n:
        return False
    if any(len(lst) != r - 1 for lst in assignment.lists):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            disjoint = not (assignment.lists[u] & assignment.lists[v])
            if disjoint != g.has_edge(u, v):
                return False
    return True


def brute_force_dim_partitions(g: Graph) -> list[tuple[EdgeSet, ...]]:
    """Oracle: all partitions of E(g) into DIMs, with no structural shortcuts.

    Enumerates every DIM via the subset-scan oracle and searches for
    exact covers of the edge set among them, so no degree or class
    count law is assumed.  Each partition is a tuple of classes sorted
    by smallest edge id.  Intended for graphs with few edges.
    """
    if g.m == 0:
        return [()]
    dims = [d for d in brute_force_dims(g) if d]
    masks = [sum(1 << e for e in d) for d in dims]
    full = (1 << g.m) - 1
    results: list[tuple[EdgeSet, ...]] = []

    def cover(remaining: int, chosen: list[int]) -> None:
        if remaining == 0:
            results.append(tuple(sorted((dims[i] for i in chosen), key=min)))
            return
        lowest = (remaining & -remaining).bit_length() - 1
        for i in range(len(dims)):
            if masks[i] >> lowest & 1 and not (masks[i] & ~remaining):
                chosen.append(i)
                cover(remaining & ~masks[i], chosen)
                chosen.pop()

    cover(full, [])
    results.sort(key=lambda p: tuple(sorted(tuple(sorted(c)) for c in p)))
    return results
