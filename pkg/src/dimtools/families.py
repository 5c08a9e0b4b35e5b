"""Generators for disjointness-graph families and standard small graphs.

The Kneser graph KG(n, k) has the k-subsets of {1..n} as vertices and
joins disjoint subsets.  The bipartite disjointness graph BG(m, n) has
the m-subsets of a ground set on one side, the n-subsets on the other,
and again joins disjoint cross pairs; its ground set here has
m + n + 1 elements, so a disjoint pair leaves exactly one element
uncovered.  That leftover element is what drives the closed-form DIM
partitions: coloring each edge XY by the single element outside
X union Y splits KG(2r-1, r-1) into 2r-1 DIM classes and
BG(r-1, s-1) into r+s-1 classes.

Subsets are enumerated in colexicographic order, which fixes vertex
ids reproducibly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, build_graph
from .partition import DimPartition

SubsetLabel = frozenset[int]


@dataclass(frozen=True)
class LabeledGraph:
    """A graph whose vertices carry subset labels over {1..ground_size}."""

    graph: Graph
    labels: tuple[SubsetLabel, ...]
    ground_size: int


def _colex_subsets(ground_size: int, k: int) -> list[tuple[int, ...]]:
    combos = itertools.combinations(range(1, ground_size + 1), k)
    return sorted(combos, key=lambda s: s[::-1])


def kneser(n: int, k: int) -> LabeledGraph:
    """Disjointness graph on the k-subsets of {1..n}.

    n < 2k is allowed and yields an edgeless graph.
    """
    if k < 1:
        raise ValueError("subset size k must be positive")
    if n < 1:
        raise ValueError("ground set size n must be positive")
    labels = [frozenset(s) for s in _colex_subsets(n, k)]
    pairs = [
        (i, j)
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
        if labels[i].isdisjoint(labels[j])
    ]
    return LabeledGraph(build_graph(len(labels), pairs), tuple(labels), n)


def bipartite_kneser(m: int, n: int) -> LabeledGraph:
    """Bipartite disjointness graph: m-subsets vs n-subsets of {1..m+n+1}.

    The m-subset part comes first in vertex order.  Every m-subset has
    n + 1 neighbors and every n-subset has m + 1.
    """
    if m < 1 or n < 1:
        raise ValueError("subset sizes must be positive")
    ground = m + n + 1
    left = [frozenset(s) for s in _colex_subsets(ground, m)]
    right = [frozenset(s) for s in _colex_subsets(ground, n)]
    offset = len(left)
    pairs = [
        (i, offset + j)
        for i in range(len(left))
        for j in range(len(right))
        if left[i].isdisjoint(right[j])
    ]
    labels = tuple(left) + tuple(right)
    return LabeledGraph(build_graph(len(labels), pairs), labels, ground)


def _leftover_coloring(lg: LabeledGraph) -> DimPartition:
    """Color each edge by the unique ground element missing from both labels."""
    colors = []
    for u, v in lg.graph.edges:
        leftover = frozenset(range(1, lg.ground_size + 1)) - lg.labels[u] - lg.labels[v]
        if len(leftover) != 1:
            raise ValueError("edge labels do not leave exactly one element uncovered")
        colors.append(next(iter(leftover)))
    return DimPartition(lg.ground_size, tuple(colors))


def kneser_dim_partition(r: int) -> tuple[LabeledGraph, DimPartition]:
    """KG(2r-1, r-1) with its closed-form partition into 2r-1 DIM classes."""
    if r < 2:
        raise ValueError("r must be at least 2")
    lg = kneser(2 * r - 1, r - 1)
    return lg, _leftover_coloring(lg)


def bg_dim_partition(r: int, s: int) -> tuple[LabeledGraph, DimPartition]:
    """BG(r-1, s-1) with its closed-form partition into r+s-1 DIM classes."""
    if r < 2 or s < 2:
        raise ValueError("r and s must be at least 2")
    lg = bipartite_kneser(r - 1, s - 1)
    return lg, _leftover_coloring(lg)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return build_graph(n, itertools.combinations(range(n), 2))


def star(k: int) -> Graph:
    """K(1, k): center 0 joined to leaves 1..k."""
    if k < 1:
        raise ValueError("star needs at least 1 leaf")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen() -> Graph:
    """The Petersen graph, as the disjointness graph of 2-subsets of {1..5}."""
    return kneser(5, 2).graph
