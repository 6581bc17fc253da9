"""Immutable simple graphs over vertices 0..n-1 with bitset adjacency.

Vertex sets are plain machine integers used as bit vectors, wrapped in
:class:`VertexSet` at the public surface; adjacency rows are one mask per
vertex.  All operations are pure and every returned object is safe to share
across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    EmptyFactor,
    EndpointOutOfRange,
    InvalidParameter,
    MissingParameter,
    NotIndependent,
    SelfLoop,
    VertexOutOfRange,
)

# Girth is a finite cycle length (int >= 3) or INFINITE_GIRTH for forests.
GirthValue = int | float
INFINITE_GIRTH: float = math.inf


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A set of vertex indices of a host graph of order `universe`."""

    universe: int
    mask: int = 0

    @classmethod
    def from_vertices(cls, universe: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < universe:
                raise VertexOutOfRange(f"vertex {v} not in 0..{universe - 1}")
            mask |= 1 << v
        return cls(universe, mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        full = (1 << self.universe) - 1
        return VertexSet(self.universe, full & ~self.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def _check(self, other: "VertexSet") -> None:
        if self.universe != other.universe:
            raise VertexOutOfRange(
                f"universe mismatch: {self.universe} vs {other.universe}"
            )

    def __repr__(self) -> str:  # compact: {0,2,5}/8
        return "{%s}/%d" % (",".join(map(str, self)), self.universe)


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; `adj[v]` is the neighbor bitmask of v."""

    order: int
    adj: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.order, self.adj[v])

    def closed_neighborhood(self, vs: VertexSet) -> VertexSet:
        m = vs.mask
        out = m
        while m:
            low = m & -m
            out |= self.adj[low.bit_length() - 1]
            m ^= low
        return VertexSet(self.order, out)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            m = self.adj[u] >> (u + 1)
            while m:
                low = m & -m
                yield (u, u + 1 + low.bit_length() - 1)
                m ^= low

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.from_vertices(self.order, vertices)

    def is_independent(self, vs: VertexSet) -> bool:
        m = vs.mask
        while m:
            low = m & -m
            if self.adj[low.bit_length() - 1] & vs.mask:
                return False
            m ^= low
        return True

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.order - 1}")


@dataclass(frozen=True, slots=True)
class ProductLabeling:
    """Row-major encoding of product vertices: (g, h) <-> g * h_order + h."""

    g_order: int
    h_order: int

    def encode(self, g: int, h: int) -> int:
        if not (0 <= g < self.g_order and 0 <= h < self.h_order):
            raise VertexOutOfRange(f"pair ({g},{h}) outside factors")
        return g * self.h_order + h

    def decode(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.g_order * self.h_order:
            raise VertexOutOfRange(f"product vertex {v} out of range")
        return divmod(v, self.h_order)

    def h_layer(self, g: int) -> VertexSet:
        """Vertices of the copy of H sitting above factor-G vertex g."""
        n = self.g_order * self.h_order
        mask = ((1 << self.h_order) - 1) << (g * self.h_order)
        return VertexSet(n, mask)

    def g_layer(self, h: int) -> VertexSet:
        """Vertices of the copy of G at factor-H vertex h."""
        n = self.g_order * self.h_order
        mask = 0
        for g in range(self.g_order):
            mask |= 1 << (g * self.h_order + h)
        return VertexSet(n, mask)


# --- constructors -------------------------------------------------------------


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list; rejects loops and duplicates."""
    if order < 0:
        raise InvalidParameter("order must be >= 0")
    adj = [0] * order
    seen = set()
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise EndpointOutOfRange(f"edge ({u},{v}) outside 0..{order - 1}")
        if u == v:
            raise SelfLoop(f"loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


_WL8_EDGES = (
    (0, 1), (1, 2), (2, 3), (0, 3),          # inner 4-cycle a-b-c-d
    (0, 4), (4, 5), (2, 5),                   # outer path a-e-f-c
    (3, 6), (6, 7), (1, 7),                   # outer path d-g-h-b
)

_FIG1H_EDGES = tuple(
    [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
)


def named_graph(name: str, n: int | None = None) -> Graph:
    """Named constructors: complete/cycle/path (need n), wl8, fig1h."""
    name = name.lower()
    if name in ("complete", "cycle", "path"):
        if n is None:
            raise MissingParameter(f"{name} requires n")
        if name == "complete":
            if n < 1:
                raise InvalidParameter("complete requires n >= 1")
            return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        if name == "path":
            if n < 1:
                raise InvalidParameter("path requires n >= 1")
            return build_graph(n, [(i, i + 1) for i in range(n - 1)])
        if n < 3:
            raise InvalidParameter("cycle requires n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if name in ("wl8", "fig1h"):
        if n is not None:
            raise InvalidParameter(f"{name} takes no order parameter")
        return build_graph(8, _WL8_EDGES if name == "wl8" else _FIG1H_EDGES)
    raise InvalidParameter(f"unknown graph name {name!r}")


# --- structural queries -------------------------------------------------------


def _bfs_distances(adj: tuple[int, ...], order: int, source: int) -> list[float]:
    dist: list[float] = [INFINITE_GIRTH] * order
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            m = adj[u]
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if dist[v] > d:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def distance(graph: Graph, u: int, v: int) -> GirthValue:
    """Shortest-path length between u and v; INFINITE_GIRTH when disconnected."""
    graph._check_vertex(u)
    graph._check_vertex(v)
    return _bfs_distances(graph.adj, graph.order, u)[v]


def girth(graph: Graph) -> GirthValue:
    """Length of a shortest cycle, or INFINITE_GIRTH for forests.

    BFS from every vertex; a non-tree edge (u,w) seen from root r closes a
    walk of length dist[u]+dist[w]+1 that contains a cycle no longer than
    itself, and the minimum over all roots is exact.
    """
    best: GirthValue = INFINITE_GIRTH
    adj = graph.adj
    n = graph.order
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                m = adj[u]
                while m:
                    low = m & -m
                    v = low.bit_length() - 1
                    m ^= low
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
            frontier = nxt
        for u in range(n):
            if dist[u] < 0:
                continue
            m = adj[u] >> (u + 1)
            while m:
                low = m & -m
                w = u + 1 + low.bit_length() - 1
                m ^= low
                if dist[w] < 0 or parent[u] == w or parent[w] == u:
                    continue
                cand = dist[u] + dist[w] + 1
                if cand < best:
                    best = cand
    return best


def _reachable_mask(adj: tuple[int, ...], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(graph: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuous for order <= 1)."""
    if graph.order <= 1:
        return True
    return _reachable_mask(graph.adj, 0) == graph.full_mask


def connected_components(graph: Graph) -> list[VertexSet]:
    out = []
    remaining = graph.full_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reachable_mask(graph.adj, start)
        out.append(VertexSet(graph.order, comp))
        remaining &= ~comp
    return out


def has_four_cycle(graph: Graph) -> bool:
    """True iff some pair of vertices has two common neighbors."""
    adj = graph.adj
    for u in range(graph.order):
        for v in range(u + 1, graph.order):
            if (adj[u] & adj[v]).bit_count() >= 2:
                return True
    return False


def strong_support_vertices(graph: Graph) -> VertexSet:
    """Vertices with at least two degree-1 neighbors.

    A nonempty result certifies that the graph is not well-covered.
    """
    leaf_mask = 0
    for v in range(graph.order):
        if graph.adj[v].bit_count() == 1:
            leaf_mask |= 1 << v
    out = 0
    for v in range(graph.order):
        if (graph.adj[v] & leaf_mask).bit_count() >= 2:
            out |= 1 << v
    return VertexSet(graph.order, out)


# --- products and reductions --------------------------------------------------


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, ProductLabeling]:
    """Cartesian product: (g1,h1)~(g2,h2) iff equal in one coordinate and
    adjacent in the other.  Row-major vertex labeling g*|V(H)|+h."""
    if g.order == 0 or h.order == 0:
        raise EmptyFactor("both factors must have order >= 1")
    ng, nh = g.order, h.order
    adj = [0] * (ng * nh)
    for gg in range(ng):
        base = gg * nh
        g_nbrs = g.adj[gg]
        for hh in range(nh):
            m = h.adj[hh] << base
            gm = g_nbrs
            while gm:
                low = gm & -gm
                m |= 1 << ((low.bit_length() - 1) * nh + hh)
                gm ^= low
            adj[base + hh] = m
    return Graph(ng * nh, tuple(adj)), ProductLabeling(ng, nh)


def prism(g: Graph) -> tuple[Graph, ProductLabeling]:
    """The product of g with a single edge; layers are g_layer(0), g_layer(1)."""
    return cartesian_product(g, build_graph(2, [(0, 1)]))


def induced_subgraph(graph: Graph, keep: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on `keep`; mapping sends old indices to new ones."""
    old_ids = list(keep)
    index = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        m = graph.adj[old] & keep.mask
        row = 0
        while m:
            low = m & -m
            row |= 1 << index[low.bit_length() - 1]
            m ^= low
        adj.append(row)
    return Graph(len(old_ids), tuple(adj)), index


def delete_closed_neighborhood(
    graph: Graph, independent: VertexSet
) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V - N[I] for an independent set I."""
    if independent.universe != graph.order:
        raise VertexOutOfRange("set universe does not match graph order")
    if not graph.is_independent(independent):
        raise NotIndependent("the deleted set must be independent")
    closed = graph.closed_neighborhood(independent)
    return induced_subgraph(graph, closed.complement())
