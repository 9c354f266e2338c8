"""Brute-force reference implementations.

Everything here is deliberately slow and obviously correct; the fast paths
are validated against these on small instances. Size caps keep accidental
exponential blowups from hanging a test run; callers may override them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, Matching, VertexSet, canonical_matching, ordered_edge


@dataclass(frozen=True)
class OracleLimit:
    """Instance-size caps for the exponential searches."""

    subset_search: int = 16  # induced matching / independent set
    triangle_count: int = 64
    kbb_search: int = 20


DEFAULT_LIMIT = OracleLimit()


class OracleLimitError(ValueError):
    pass


def _check_size(n: int, cap: int | None, default: int, what: str) -> None:
    bound = default if cap is None else cap
    if bound <= 0:
        raise ValueError("oracle limit must be positive")
    if n > bound:
        raise OracleLimitError(f"{what} limited to n <= {bound}, got n = {n}")


def _max_weight_subset(conflict: list[int], count: int) -> tuple[int, int]:
    """Branch-and-bound maximum independent set over conflict bitmasks.

    Returns ``(size, chosen_mask)``. Deterministic: branches on the item
    with most conflicts among the remaining ones, lowest index first.
    """
    best_size = 0
    best_mask = 0

    def rec(avail: int, size: int, chosen: int) -> None:
        nonlocal best_size, best_mask
        if size + avail.bit_count() <= best_size:
            return
        if avail == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        pick = -1
        pick_deg = -1
        a = avail
        while a:
            bit = a & -a
            v = bit.bit_length() - 1
            a ^= bit
            deg = (conflict[v] & avail).bit_count()
            if deg > pick_deg:
                pick_deg, pick = deg, v
        if pick_deg == 0:
            size += avail.bit_count()
            if size > best_size:
                best_size, best_mask = size, chosen | avail
            return
        bit = 1 << pick
        rec(avail & ~(conflict[pick] | bit), size + 1, chosen | bit)
        rec(avail & ~bit, size, chosen)

    rec((1 << count) - 1, 0, 0)
    return best_size, best_mask


def max_independent_set_bf(g: Graph, limit: int | None = None) -> tuple[int, VertexSet]:
    """Maximum independent set size with a witness, by exhaustive search."""
    _check_size(g.n, limit, DEFAULT_LIMIT.subset_search, "independent-set search")
    masks = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    size, mask = _max_weight_subset(masks, g.n)
    witness = frozenset(v for v in range(g.n) if mask >> v & 1)
    return size, witness


def max_induced_matching_bf(g: Graph, limit: int | None = None) -> tuple[int, Matching]:
    """Maximum induced matching size with a witness.

    Searches edge subsets with include/exclude branching; two edges conflict
    when they share a vertex or any graph edge joins their endpoints.
    """
    _check_size(g.n, limit, DEFAULT_LIMIT.subset_search, "induced-matching search")
    edges = sorted(g.edges())
    closed = []
    for u, v in edges:
        closed.append({u, v} | set(g.adjacency[u]) | set(g.adjacency[v]))
    conflict = [0] * len(edges)
    for i, j in combinations(range(len(edges)), 2):
        x, y = edges[j]
        if x in closed[i] or y in closed[i]:
            conflict[i] |= 1 << j
            conflict[j] |= 1 << i
    size, mask = _max_weight_subset(conflict, len(edges))
    witness = tuple(edges[i] for i in range(len(edges)) if mask >> i & 1)
    return size, witness


def count_triangles_bf(g: Graph, limit: int | None = None) -> int:
    """Exact triangle count by scanning all vertex triples."""
    _check_size(g.n, limit, DEFAULT_LIMIT.triangle_count, "triangle count")
    nbr = g.neighbor_sets
    total = 0
    for a, b, c in combinations(range(g.n), 3):
        if b in nbr[a] and c in nbr[a] and c in nbr[b]:
            total += 1
    return total


def contains_kbb_bf(g: Graph, b: int, limit: int | None = None) -> bool:
    """True iff some pair of disjoint ``b``-sets is completely joined.

    Equivalent formulation used here: some ``b``-set of vertices has at
    least ``b`` common neighbors (common neighbors are automatically
    disjoint from the set because the graph has no self-loops).
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    _check_size(g.n, limit, DEFAULT_LIMIT.kbb_search, "complete-bipartite search")
    if g.n < 2 * b:
        return False
    nbr = g.neighbor_sets
    for side in combinations(range(g.n), b):
        common = nbr[side[0]]
        for v in side[1:]:
            common = common & nbr[v]
            if len(common) < b:
                break
        if len(common) >= b:
            return True
    return False


def is_c4_free_bf(g: Graph, limit: int | None = None) -> bool:
    """True iff ``g`` has no 4-cycle; a 4-cycle is exactly a complete
    bipartite pair of 2-sets."""
    return not contains_kbb_bf(g, 2, limit=limit)


def is_induced_matching_bf(g: Graph, matching) -> bool:
    """Exhaustive recheck of the induced-matching property.

    Independent of :func:`indmatch.graph.is_induced_matching`: compares the
    full edge set over all endpoint pairs instead of walking adjacency.
    """
    edges = canonical_matching(matching)
    all_edges = set(g.edges())
    for e in edges:
        if e not in all_edges:
            raise ValueError(f"matching edge {e} not present in graph")
    endpoints = [v for e in edges for v in e]
    if len(endpoints) != len(set(endpoints)):
        return False
    induced = {
        ordered_edge(u, v)
        for u, v in combinations(sorted(set(endpoints)), 2)
        if ordered_edge(u, v) in all_edges
    }
    return induced == set(edges)
