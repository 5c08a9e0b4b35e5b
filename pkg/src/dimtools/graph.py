"""Immutable simple graphs with canonical edge indexing.

Vertices are dense 0-based integers.  Edges are stored as a
lexicographically sorted tuple of pairs (u, v) with u < v, so two equal
graphs always have identical edge lists, edge ids, and serializations.
All functions in this package treat Graph values as immutable; sharing
them across threads is safe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

EdgeId = int
VertexPair = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph in canonical form.

    Construct through :func:`build_graph`, which normalizes arbitrary
    pair lists; the constructor itself assumes edges are already
    canonical (validated in ``__post_init__``).
    """

    n: int
    edges: tuple[VertexPair, ...]
    neighbors: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )
    incident: tuple[tuple[EdgeId, ...], ...] = field(
        init=False, repr=False, compare=False
    )
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of canonical range for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edge list is not strictly increasing")
            prev = (u, v)
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        inc: list[list[EdgeId]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            nbrs[u].add(v)
            nbrs[v].add(u)
            inc[u].append(eid)
            inc[v].append(eid)
        object.__setattr__(self, "neighbors", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "incident", tuple(tuple(ids) for ids in inc))
        object.__setattr__(self, "degrees", tuple(len(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> EdgeId:
        """Id of the edge between u and v (order-insensitive)."""
        if u > v:
            u, v = v, u
        eid = self._edge_index().get((u, v))
        if eid is None:
            raise KeyError(f"({u}, {v}) is not an edge")
        return eid

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u] if 0 <= u < self.n else False

    def _edge_index(self) -> dict[VertexPair, EdgeId]:
        idx = getattr(self, "_edge_index_cache", None)
        if idx is None:
            idx = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_index_cache", idx)
        return idx


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical Graph from arbitrary vertex pairs.

    Pairs are sorted within themselves, deduplicated, and sorted
    overall.  Raises ValueError on self-loops or endpoints outside
    0..n-1.
    """
    canon: set[VertexPair] = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


@dataclass(frozen=True)
class BiregularClasses:
    """A bipartition with uniform degrees on each side.

    ``x_side`` is the side containing vertex 0 (for n >= 1); every
    vertex there has degree ``x_degree``, every ``y_side`` vertex has
    degree ``y_degree``.  An empty side reports degree 0.
    """

    x_degree: int
    y_degree: int
    x_side: frozenset[int]
    y_side: frozenset[int]


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    is_regular: bool
    biregular: Optional[BiregularClasses]


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns (subgraph, old-id-per-new-id)."""
    order = sorted(vertices)
    remap = {v: i for i, v in enumerate(order)}
    pairs = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return build_graph(len(order), pairs), order


def _two_color(g: Graph, comp: list[int]) -> Optional[tuple[list[int], list[int]]]:
    """BFS 2-coloring of one component; side 0 holds the smallest vertex."""
    root = comp[0]
    color = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    side0 = sorted(v for v in comp if color[v] == 0)
    side1 = sorted(v for v in comp if color[v] == 1)
    return side0, side1


def _uniform_degree(g: Graph, side: list[int]) -> Optional[int]:
    """Common degree of ``side`` (0 if empty), or None if mixed."""
    if not side:
        return 0
    degs = {g.degrees[v] for v in side}
    return degs.pop() if len(degs) == 1 else None


def degree_profile(g: Graph) -> DegreeProfile:
    """Degrees together with regularity and biregularity structure.

    The graph is biregular when its vertices split into two sides X and
    Y such that every edge crosses, all X-degrees agree and all
    Y-degrees agree.  X is the side containing vertex 0; when several
    (x, y) pairs are feasible the one induced by vertex 0's component is
    reported.  Edgeless graphs are regular and trivially biregular
    with classes (0, 0).
    """
    degs = g.degrees
    lo = min(degs) if degs else 0
    hi = max(degs) if degs else 0
    comps = components(g)

    sides = []
    bipartite = True
    for comp in comps:
        split = _two_color(g, comp)
        if split is None:
            bipartite = False
            break
        d0 = _uniform_degree(g, split[0])
        d1 = _uniform_degree(g, split[1])
        if d0 is None or d1 is None:
            bipartite = False
            break
        sides.append((split[0], split[1], d0, d1))

    biregular = None
    if bipartite:
        biregular = _assemble_biregular(sides)
    return DegreeProfile(
        degrees=degs,
        min_degree=lo,
        max_degree=hi,
        is_regular=lo == hi,
        biregular=biregular,
    )


def _assemble_biregular(
    sides: list[tuple[list[int], list[int], int, int]],
) -> Optional[BiregularClasses]:
    """Orient per-component bipartitions into one global (x, y) split."""
    if not sides:
        return BiregularClasses(0, 0, frozenset(), frozenset())
    # Vertex 0 lives in side0 of the first component and pins X there.
    x0, y0 = sides[0][2], sides[0][3]
    # y0 is unconstrained when the first component is a lone vertex.
    candidates = [(x0, y0)] if sides[0][1] else [(x0, None)]
    for x, y in candidates:
        xs: list[int] = []
        ys: list[int] = []
        ok = True
        for s0, s1, d0, d1 in sides:
            placements = []
            if d0 == x and (y is None or d1 == y or not s1):
                placements.append((s0, s1, d1 if s1 else None))
            if d1 == x and (y is None or d0 == y) and s1:
                placements.append((s1, s0, d0))
            if not placements:
                ok = False
                break
            sx, sy, dy = placements[0]
            xs.extend(sx)
            ys.extend(sy)
            if y is None and dy is not None:
                y = dy
        if ok:
            return BiregularClasses(
                x_degree=x,
                y_degree=y if y is not None else 0,
                x_side=frozenset(xs),
                y_side=frozenset(ys),
            )
    return None


@dataclass(frozen=True)
class Cycle:
    """A simple cycle in canonical rotation/reflection.

    ``vertices`` starts at the smallest vertex on the cycle and its
    second entry is smaller than its last, which makes the tuple the
    lexicographic minimum over all rotations and reflections.
    """

    vertices: tuple[int, ...]
    edge_ids: frozenset[EdgeId]

    @property
    def length(self) -> int:
        return len(self.vertices)


def enumerate_cycles(g: Graph, max_len: int) -> list[Cycle]:
    """All simple cycles of length <= max_len, each exactly once.

    Rooted depth-first search: a cycle is discovered from its smallest
    vertex, extending paths through strictly larger vertices only, and
    reflections are suppressed by requiring second < last vertex.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    out: list[Cycle] = []

    def edge_set(cycle: tuple[int, ...]) -> frozenset[EdgeId]:
        ids = [
            g.edge_id(cycle[i], cycle[(i + 1) % len(cycle)])
            for i in range(len(cycle))
        ]
        return frozenset(ids)

    def extend(root: int, path: list[int], on_path: set[int]) -> None:
        last = path[-1]
        for nxt in sorted(g.neighbors[last]):
            if nxt == root and len(path) >= 3 and path[1] < path[-1]:
                cyc = tuple(path)
                out.append(Cycle(cyc, edge_set(cyc)))
            elif nxt > root and nxt not in on_path and len(path) < max_len:
                path.append(nxt)
                on_path.add(nxt)
                extend(root, path, on_path)
                on_path.remove(nxt)
                path.pop()

    for root in range(g.n):
        extend(root, [root], {root})
    return out
