"""Edge coloring, matching extraction, and matching contraction.

A proper edge coloring with at most ``max_degree + 1`` colors always has a
color class of size ``m / (max_degree + 1)``, which for d-regular graphs is
the linear-size matching the rest of the pipeline builds on. Contracting a
matching produces the quotient graph whose independent sets pull back to
induced matchings of the host.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import (
    Edge,
    Graph,
    Matching,
    canonical_matching,
    degree_profile,
    from_edge_list,
    is_matching,
    matched_vertices,
    ordered_edge,
)


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring: ``colors`` maps each canonical edge to a color
    id in ``[0, num_colors)``."""

    colors: dict[Edge, int]
    num_colors: int

    def classes(self) -> list[list[Edge]]:
        buckets: list[list[Edge]] = [[] for _ in range(self.num_colors)]
        for edge in sorted(self.colors):
            buckets[self.colors[edge]].append(edge)
        return buckets


def is_proper_edge_coloring(g: Graph, coloring: EdgeColoring) -> bool:
    """Every edge colored, ids in range, and no color repeated at a vertex."""
    edges = set(g.edges())
    if set(coloring.colors) != edges:
        return False
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for (u, v), c in coloring.colors.items():
        if not 0 <= c < coloring.num_colors:
            return False
        if c in seen[u] or c in seen[v]:
            return False
        seen[u].add(c)
        seen[v].add(c)
    return True


def misra_gries_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most ``max_degree + 1`` colors by the
    Misra-Gries fan rotation procedure.

    Works edge by edge in canonical order. For an uncolored edge (u, v) it
    grows a maximal fan of u starting at v, picks a color c free at u and d
    free at the fan tip, flips the alternating c/d path through u, then
    rotates a fan prefix and colors its last edge d. All choices (fan
    extension, free colors, prefix) take the lowest-numbered admissible
    color, then the lowest-numbered vertex, so the result is deterministic.
    """
    _, delta, _ = degree_profile(g)
    palette = delta + 1
    # at[v][c] = neighbor across the c-colored edge at v
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]
    ecolor: dict[Edge, int] = {}

    def free_color(v: int) -> int:
        for c in range(palette):
            if c not in at[v]:
                return c
        raise AssertionError("degree exceeded palette")

    def assign(x: int, y: int, c: int) -> None:
        at[x][c] = y
        at[y][c] = x
        ecolor[ordered_edge(x, y)] = c

    def unassign(x: int, y: int) -> int:
        c = ecolor.pop(ordered_edge(x, y))
        del at[x][c]
        del at[y][c]
        return c

    for u, v in sorted(g.edges()):
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        while True:
            tip = fan[-1]
            best: tuple[int, int] | None = None
            for w in g.adjacency[u]:
                if w in in_fan:
                    continue
                c = ecolor.get(ordered_edge(u, w))
                if c is None or c in at[tip]:
                    continue
                if best is None or (c, w) < best:
                    best = (c, w)
            if best is None:
                break
            fan.append(best[1])
            in_fan.add(best[1])

        c = free_color(u)
        d = free_color(fan[-1])
        if c != d:
            # invert the maximal path through u alternating d, c
            path: list[tuple[int, int, int]] = []
            x, col = u, d
            while col in at[x]:
                y = at[x][col]
                path.append((x, y, col))
                x, col = y, (c if col == d else d)
            for x, y, col in path:
                del at[x][col]
                del at[y][col]
                del ecolor[ordered_edge(x, y)]
            for x, y, col in path:
                assign(x, y, c if col == d else d)

        # shortest fan prefix that is still a fan and whose tip misses d
        w_idx = None
        for i, fi in enumerate(fan):
            if i > 0 and ecolor[ordered_edge(u, fan[i])] in at[fan[i - 1]]:
                break
            if d not in at[fi]:
                w_idx = i
                break
        if w_idx is None:
            raise AssertionError("fan rotation failed; coloring bug")

        shifted = [ecolor[ordered_edge(u, fan[j + 1])] for j in range(w_idx)]
        for j in range(1, w_idx + 1):
            unassign(u, fan[j])
        for j in range(w_idx):
            assign(u, fan[j], shifted[j])
        assign(u, fan[w_idx], d)

    used = sorted(set(ecolor.values()))
    remap = {c: i for i, c in enumerate(used)}
    return EdgeColoring({e: remap[c] for e, c in ecolor.items()}, len(used))


def extract_matching(g: Graph, coloring: EdgeColoring) -> Matching:
    """Largest color class of a proper edge coloring (lowest color id on
    ties). For a d-regular graph with a (d+1)-coloring this has size at
    least ``ceil(n*d / (2*(d+1))) >= ceil(n/4)``."""
    if not is_proper_edge_coloring(g, coloring):
        raise ValueError("coloring is not a proper edge coloring of the graph")
    if not coloring.colors:
        return ()
    classes = coloring.classes()
    best = max(range(len(classes)), key=lambda c: (len(classes[c]), -c))
    return tuple(sorted(classes[best]))


def greedy_maximal_matching(g: Graph, seed: int) -> Matching:
    """Maximal matching from a seeded random edge order (no size guarantee
    on irregular inputs; fast fallback only)."""
    edges = sorted(g.edges())
    random.Random(seed).shuffle(edges)
    used: set[int] = set()
    chosen = []
    for u, v in edges:
        if u not in used and v not in used:
            chosen.append((u, v))
            used.add(u)
            used.add(v)
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class ContractedGraph:
    """Quotient of a host graph by a matching.

    ``graph`` has one vertex per matching edge; ``rep[x]`` is the matching
    edge behind contracted vertex ``x`` and ``inv_rep`` sends each matched
    host vertex to its contracted vertex. Distinct contracted vertices are
    adjacent iff some host edge joins their endpoint pairs; the matching
    edge itself never produces a loop.
    """

    graph: Graph
    rep: tuple[Edge, ...]
    inv_rep: dict[int, int]


def contract_matching(g: Graph, matching) -> ContractedGraph:
    edges = canonical_matching(matching)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"matching edge ({u}, {v}) not present in graph")
    if not is_matching(edges):
        raise ValueError("edges do not form a matching")
    inv_rep: dict[int, int] = {}
    for idx, (u, v) in enumerate(edges):
        inv_rep[u] = idx
        inv_rep[v] = idx
    quotient_edges = set()
    for idx, (u, v) in enumerate(edges):
        for x in (u, v):
            for w in g.adjacency[x]:
                j = inv_rep.get(w)
                if j is not None and j != idx:
                    quotient_edges.add((idx, j) if idx < j else (j, idx))
    quotient = from_edge_list(len(edges), quotient_edges)
    return ContractedGraph(graph=quotient, rep=edges, inv_rep=inv_rep)


def pull_back_matching(contracted: ContractedGraph, vertices) -> Matching:
    """Map an independent set of the quotient back to host edges; the result
    is an induced matching of the host."""
    return tuple(sorted(contracted.rep[x] for x in set(vertices)))


def host_vertices(contracted: ContractedGraph) -> frozenset[int]:
    return matched_vertices(contracted.rep)
