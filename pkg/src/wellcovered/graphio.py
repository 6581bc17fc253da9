"""graph6 and edge-list text formats, canonical forms, and the built-in
small-order graph enumerator.

The enumerator grows graphs level by level: every order-n graph arises from an
order-(n-1) graph by attaching one new vertex, and girth lower bounds are
hereditary under vertex deletion, so each level only extends the previous one
inside the same girth-constrained universe.  Deduplication uses a canonical
adjacency encoding (maximum backward-edge encoding over vertex orderings,
restricted to refinement-invariant position blocks).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    BadHeader,
    InvalidParameter,
    MalformedLine,
    NonCanonicalPadding,
    OrderTooLarge,
    OrderTooLargeForGenerator,
    TrailingGarbage,
    TruncatedPayload,
)
from .graphs import (
    Graph,
    GirthValue,
    _bfs_distances,
    build_graph,
    has_four_cycle,
    is_connected,
)

GENERATOR_ORDER_CAP = 9


# --- graph6 -------------------------------------------------------------------


def write_graph6(graph: Graph) -> str:
    """Canonical graph6 line (single-byte header, order <= 62)."""
    n = graph.order
    if n > 62:
        raise OrderTooLarge(f"graph6 single-byte header handles order <= 62, got {n}")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = graph.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; padding bits must be zero."""
    line = line.rstrip("\r\n")
    if not line:
        raise BadHeader("empty line")
    head = ord(line[0])
    if head == 126:
        raise BadHeader("multi-byte order headers are not supported")
    if not 63 <= head <= 125:
        raise BadHeader(f"order byte {line[0]!r} outside '?'..'}}'")
    n = head - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    payload = line[1:]
    if len(payload) < nchars:
        raise TruncatedPayload(f"need {nchars} payload characters, got {len(payload)}")
    if len(payload) > nchars:
        raise TrailingGarbage(f"{len(payload) - nchars} characters after the payload")
    bits = []
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise TruncatedPayload(f"invalid payload character {ch!r}")
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    if any(bits[nbits:]):
        raise NonCanonicalPadding("nonzero padding bits")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


# --- edge-list text -----------------------------------------------------------


def write_edge_list(graph: Graph) -> str:
    lines = [f"{graph.order} {graph.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise MalformedLine("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedLine(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedLine(f"header must be 'n m', got {lines[0]!r}") from None
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise MalformedLine(f"expected {m} edge lines, got {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedLine(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedLine(f"edge line must be 'u v', got {ln!r}") from None
    return build_graph(n, edges)


# --- canonical form -----------------------------------------------------------


def _refine_colors(n: int, adj: tuple[int, ...]) -> list[int]:
    """Iterated neighborhood-color refinement; color ids are an isomorphism
    invariant, ordered by signature (high degree first)."""
    colors = [adj[v].bit_count() for v in range(n)]
    keys = sorted(set(colors), reverse=True)
    rank = {key: i for i, key in enumerate(keys)}
    colors = [rank[c] for c in colors]
    classes = len(keys)
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = adj[v]
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        keys = sorted(set(sigs))
        if len(keys) == classes:
            return colors
        classes = len(keys)
        rank = {key: i for i, key in enumerate(keys)}
        colors = [rank[s] for s in sigs]


def canonical_form(graph: Graph) -> tuple[int, ...]:
    """Adjacency masks of a canonical relabeling: isomorphic graphs map to
    identical tuples.

    The canonical labeling maximizes the sequence of backward-adjacency rows
    over all orderings that respect the refinement color blocks; equal-chunk
    branches are explored, interchangeable twins collapse.
    """
    n = graph.order
    if n == 0:
        return ()
    adj = graph.adj
    colors = _refine_colors(n, adj)
    nclasses = max(colors) + 1
    blocks: list[list[int]] = [[] for _ in range(nclasses)]
    for v in range(n):
        blocks[colors[v]].append(v)
    block_of_pos: list[int] = []
    for b, members in enumerate(blocks):
        block_of_pos.extend([b] * len(members))

    best: list[int] | None = None
    placed: list[int] = []
    rows: list[int] = []
    used = 0

    def dfs(pos: int) -> None:
        # invariant on entry: rows == best[:pos]
        nonlocal best, used
        if pos == n:
            return
        row_best = -1
        group: list[int] = []
        for v in blocks[block_of_pos[pos]]:
            if (used >> v) & 1:
                continue
            av = adj[v]
            r = 0
            for j in range(pos):
                r |= ((av >> placed[j]) & 1) << j
            if r > row_best:
                row_best = r
                group = [v]
            elif r == row_best:
                group.append(v)
        if best is not None and best[pos] > row_best:
            return
        if best is None or row_best > best[pos]:
            # this prefix beats every leaf seen so far; reopen the tail
            best = rows + [row_best] + [-1] * (n - pos - 1)
        kept: list[int] = []
        for v in group:
            if any((adj[u] ^ adj[v]) & ~((1 << u) | (1 << v)) == 0 for u in kept):
                continue
            kept.append(v)
        rows.append(row_best)
        for v in kept:
            placed.append(v)
            used |= 1 << v
            dfs(pos + 1)
            used &= ~(1 << v)
            placed.pop()
        rows.pop()

    dfs(0)
    assert best is not None and all(r >= 0 for r in best)
    out = [0] * n
    for k in range(n):
        r = best[k]
        while r:
            low = r & -r
            j = low.bit_length() - 1
            r ^= low
            out[k] |= 1 << j
            out[j] |= 1 << k
    return tuple(out)


# --- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class EnumFilter:
    """Conjunctive filters for the built-in enumerator."""

    order: int
    connected: bool = True
    min_girth: GirthValue | None = None
    triangle_free: bool = False
    min_degree: int | None = None
    must_contain_c4: bool = False

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InvalidParameter("filter order must be >= 1")
        if self.min_girth is not None and not (
            self.min_girth == math.inf or self.min_girth >= 3
        ):
            raise InvalidParameter("min_girth must be >= 3 or infinite")

    @property
    def girth_floor(self) -> GirthValue:
        floor: GirthValue = 3
        if self.triangle_free:
            floor = 4
        if self.min_girth is not None and self.min_girth > floor:
            floor = self.min_girth
        return floor


_UNIVERSE_CACHE: dict[tuple[int, GirthValue], tuple[Graph, ...]] = {}


def _extension_sets(parent: Graph, floor: GirthValue) -> Iterator[int]:
    """Neighbor sets for a new vertex that keep girth >= floor.

    A new cycle through the added vertex has length 2 + d(u, v) for a pair
    u, v of its neighbors, so all pairs must be at distance >= floor - 2.
    """
    n = parent.order
    if floor <= 3:
        yield from range(1 << n)
        return
    need = floor - 2
    compat = []
    for v in range(n):
        dist = _bfs_distances(parent.adj, n, v)
        mask = 0
        for u in range(n):
            if u != v and dist[u] >= need:
                mask |= 1 << u
        compat.append(mask)

    def rec(cur: int, cand: int) -> Iterator[int]:
        yield cur
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            yield from rec(cur | low, m & compat[v])

    yield from rec(0, (1 << n) - 1)


def _universe(order: int, floor: GirthValue) -> tuple[Graph, ...]:
    """All graphs of the given order (up to isomorphism, disconnected
    included) with girth >= floor, as canonical representatives."""
    key = (order, floor)
    cached = _UNIVERSE_CACHE.get(key)
    if cached is not None:
        return cached
    if order == 1:
        reps = (Graph(1, (0,)),)
        _UNIVERSE_CACHE[key] = reps
        return reps
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    new_bit = 1 << (order - 1)
    for parent in _universe(order - 1, floor):
        for s_mask in _extension_sets(parent, floor):
            adj = list(parent.adj) + [s_mask]
            m = s_mask
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= new_bit
                m ^= low
            canon = canonical_form(Graph(order, tuple(adj)))
            if canon not in seen:
                seen.add(canon)
                out.append(Graph(order, canon))
    out.sort(key=lambda g: g.adj)
    reps = tuple(out)
    _UNIVERSE_CACHE[key] = reps
    return reps


def enumerate_connected_graphs(filt: EnumFilter) -> Iterator[Graph]:
    """One canonical representative per isomorphism class satisfying the
    filter, in a deterministic order."""
    if filt.order > GENERATOR_ORDER_CAP:
        raise OrderTooLargeForGenerator(
            f"built-in generation is capped at order {GENERATOR_ORDER_CAP}; "
            "feed larger orders through parse_graph6"
        )
    for g in _universe(filt.order, filt.girth_floor):
        if filt.connected and not is_connected(g):
            continue
        if filt.min_degree is not None and (
            g.order > 0 and min(g.degrees()) < filt.min_degree
        ):
            continue
        if filt.must_contain_c4 and not has_four_cycle(g):
            continue
        yield g
