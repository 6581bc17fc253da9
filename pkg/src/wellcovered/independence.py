"""Exact independence machinery.

Maximal independent sets are enumerated with the pivoting scheme of classical
maximal-clique enumeration, run on non-neighborhoods: candidates and excluded
vertices are bitmasks, the pivot maximizes coverage of the candidate set, and
the stream order is deterministic (ascending branch vertices, lowest-index
pivot tie-break).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterator

from .errors import EnumerationTooLarge, NotWellCovered
from .graphs import Graph, VertexSet, delete_closed_neighborhood, induced_subgraph

# Full enumeration above this order is refused unless explicitly overridden;
# guards against accidental exponential blowup on large products.
ENUMERATION_ORDER_CAP = 30


@dataclass(frozen=True, slots=True)
class IndependenceSummary:
    """Exact alpha, i, the well-covered verdict, and a witness when negative."""

    alpha: int
    idom: int
    well_covered: bool
    witness: tuple[VertexSet, VertexSet] | None


def _check_size(graph: Graph, allow_large: bool) -> None:
    if graph.order > ENUMERATION_ORDER_CAP and not allow_large:
        raise EnumerationTooLarge(
            f"order {graph.order} exceeds the enumeration guardrail "
            f"({ENUMERATION_ORDER_CAP}); pass allow_large=True to override"
        )


def _mis_masks(order: int, adj: tuple[int, ...]) -> Iterator[int]:
    """Yield every maximal independent set as a bitmask, each exactly once."""
    full = (1 << order) - 1
    nonadj = [full & ~(adj[v] | (1 << v)) for v in range(order)]

    def expand(chosen: int, cand: int, excl: int) -> Iterator[int]:
        if cand == 0 and excl == 0:
            yield chosen
            return
        # pivot: max |cand & nonadj[u]| over u in cand|excl, lowest index wins ties
        pool = cand | excl
        pivot = -1
        pivot_cover = -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cover = (cand & nonadj[u]).bit_count()
            if cover > pivot_cover:
                pivot, pivot_cover = u, cover
        branch = cand & ~nonadj[pivot]
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            yield from expand(chosen | low, cand & nonadj[v], excl & nonadj[v])
            cand &= ~low
            excl |= low

    yield from expand(0, full, 0)


def enumerate_mis(graph: Graph, *, allow_large: bool = False) -> Iterator[VertexSet]:
    """Stream every maximal independent set exactly once, deterministically."""
    _check_size(graph, allow_large)
    for mask in _mis_masks(graph.order, graph.adj):
        yield VertexSet(graph.order, mask)


def independence_summary(graph: Graph, *, allow_large: bool = False) -> IndependenceSummary:
    """Exact alpha and i by full enumeration.

    The well-covered verdict is settled the moment two maximal sets of
    different sizes appear; those first two sets are kept as the witness.
    """
    _check_size(graph, allow_large)
    alpha = -1
    idom = -1
    first_mask = -1
    witness: tuple[VertexSet, VertexSet] | None = None
    for mask in _mis_masks(graph.order, graph.adj):
        size = mask.bit_count()
        if first_mask < 0:
            first_mask = mask
            alpha = idom = size
            continue
        if witness is None and size != first_mask.bit_count():
            witness = (
                VertexSet(graph.order, first_mask),
                VertexSet(graph.order, mask),
            )
        if size > alpha:
            alpha = size
        if size < idom:
            idom = size
    return IndependenceSummary(alpha, idom, witness is None, witness)


def find_unequal_maximal_sets(
    graph: Graph, *, allow_large: bool = False
) -> tuple[VertexSet, VertexSet] | None:
    """First two maximal independent sets of different sizes, or None.

    Short-circuits on the first size mismatch, so deciding "not well-covered"
    is typically far cheaper than a full enumeration.
    """
    _check_size(graph, allow_large)
    first_mask = -1
    for mask in _mis_masks(graph.order, graph.adj):
        if first_mask < 0:
            first_mask = mask
        elif mask.bit_count() != first_mask.bit_count():
            return (VertexSet(graph.order, first_mask), VertexSet(graph.order, mask))
    return None


def is_well_covered(graph: Graph, *, allow_large: bool = False) -> bool:
    return find_unequal_maximal_sets(graph, allow_large=allow_large) is None


def isolating_sets(
    graph: Graph, w: int, *, allow_large: bool = False
) -> Iterator[VertexSet]:
    """All independent sets J with V - N[J] = {w}, each exactly once.

    An isolating set avoids N[w] and dominates every other vertex of
    G - N[w], which makes it maximal there; so filtering the maximal
    independent sets of G - N[w] by coverage enumerates the family
    completely.
    """
    graph._check_vertex(w)
    reduced, index = delete_closed_neighborhood(graph, graph.vertex_set([w]))
    _check_size(reduced, allow_large)
    back = {new: old for old, new in index.items()}
    target = graph.full_mask & ~(1 << w)
    for mask in _mis_masks(reduced.order, reduced.adj):
        j_mask = 0
        m = mask
        while m:
            low = m & -m
            j_mask |= 1 << back[low.bit_length() - 1]
            m ^= low
        covered = j_mask
        m = j_mask
        while m:
            low = m & -m
            covered |= graph.adj[low.bit_length() - 1]
            m ^= low
        # members of G - N[w] never touch w, so covered == target means
        # V - N[J] is exactly {w}
        if covered == target:
            yield VertexSet(graph.order, j_mask)


def isolatable(graph: Graph, w: int, *, allow_large: bool = False) -> VertexSet | None:
    """An independent J with V - N[J] = {w}, or None if no such set exists.

    w is isolatable iff some maximal independent set M of G - N[w] satisfies
    N[M] >= V - {w}; the first such M in enumeration order is returned.
    """
    for j in isolating_sets(graph, w, allow_large=allow_large):
        return j
    return None


def isolatable_vertices(graph: Graph, *, allow_large: bool = False) -> VertexSet:
    """All w for which an isolating independent set exists."""
    mask = 0
    for w in range(graph.order):
        if isolatable(graph, w, allow_large=allow_large) is not None:
            mask |= 1 << w
    return VertexSet(graph.order, mask)


def _extendable_given_alpha(graph: Graph, x: int, alpha: int) -> bool:
    keep = graph.vertex_set([x]).complement()
    reduced, _ = induced_subgraph(graph, keep)
    sub = independence_summary(reduced)
    return sub.well_covered and sub.alpha == alpha


def is_extendable(graph: Graph, x: int, *, allow_large: bool = False) -> bool:
    """True iff deleting x keeps the graph well-covered with the same alpha.

    Defined only for well-covered graphs; raises NotWellCovered otherwise.
    """
    graph._check_vertex(x)
    summary = independence_summary(graph, allow_large=allow_large)
    if not summary.well_covered:
        raise NotWellCovered("extendability is defined on well-covered graphs only")
    return _extendable_given_alpha(graph, x, summary.alpha)


def is_one_well_covered(graph: Graph, *, allow_large: bool = False) -> bool:
    """Well-covered with every vertex extendable.

    Computed twice: via per-vertex extendability and via absence of isolatable
    vertices; the two routes must agree.
    """
    summary = independence_summary(graph, allow_large=allow_large)
    if not summary.well_covered:
        return False
    by_extension = all(
        _extendable_given_alpha(graph, x, summary.alpha) for x in range(graph.order)
    )
    by_isolation = len(isolatable_vertices(graph, allow_large=allow_large)) == 0
    if by_extension != by_isolation:
        raise RuntimeError(
            "extendability and isolatability routes disagree on "
            f"a well-covered graph of order {graph.order}: "
            f"{by_extension} vs {by_isolation}"
        )
    return by_extension


def random_maximal_independent_set(graph: Graph, seed: int) -> VertexSet:
    """Greedy sweep over a seeded random vertex permutation; deterministic
    for a fixed (graph, seed)."""
    rng = Random(seed)
    perm = list(range(graph.order))
    rng.shuffle(perm)
    chosen = 0
    blocked = 0
    for v in perm:
        bit = 1 << v
        if blocked & bit:
            continue
        chosen |= bit
        blocked |= bit | graph.adj[v]
    return VertexSet(graph.order, chosen)
