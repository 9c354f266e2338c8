"""Immutable simple undirected graphs and the structural checks built on them.

Vertices are dense integers ``0..n-1`` and adjacency is kept as sorted
tuples, which makes triangle enumeration by neighbor intersection cheap and
lets graph values be shared freely across threads. All "mutation" style
operations (induced subgraphs, vertex deletion) return new graphs together
with an old-to-new vertex map.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Iterator

VertexSet = frozenset[int]
Edge = tuple[int, int]
Triangle = tuple[int, int, int]
Matching = tuple[Edge, ...]


def ordered_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``. Build
    instances through :func:`from_edge_list`, which enforces the
    invariants (no self-loops, symmetric adjacency, no duplicates).
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph` from vertex pairs.

    Duplicate pairs (in either orientation) collapse to one edge. Self-loops
    and out-of-range endpoints raise ``ValueError``.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def validate_graph(g: Graph) -> None:
    """Walk every representation invariant, raising ``ValueError`` on the
    first violation. Used by tests on graphs produced by other modules."""
    if g.n < 0:
        raise ValueError("negative vertex count")
    if len(g.adjacency) != g.n:
        raise ValueError("adjacency length differs from vertex count")
    total = 0
    for v, nbrs in enumerate(g.adjacency):
        if list(nbrs) != sorted(set(nbrs)):
            raise ValueError(f"adjacency of {v} not sorted or has duplicates")
        for w in nbrs:
            if not 0 <= w < g.n:
                raise ValueError(f"neighbor {w} of {v} out of range")
            if w == v:
                raise ValueError(f"self-loop at {v}")
            if v not in g.adjacency[w]:
                raise ValueError(f"asymmetric edge ({v}, {w})")
        total += len(nbrs)
    if g.m != total // 2:
        raise ValueError("edge count inconsistent with adjacency")


def degree_profile(g: Graph) -> tuple[int, int, bool]:
    """Return ``(min_degree, max_degree, is_regular)``; ``(0, 0, True)`` for
    the empty graph."""
    if g.n == 0:
        return (0, 0, True)
    degs = [len(nbrs) for nbrs in g.adjacency]
    lo, hi = min(degs), max(degs)
    return (lo, hi, lo == hi)


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All triangles of ``g``, each exactly once as a sorted tuple.

    Neighbor intersection over a degree ordering: every triangle is reported
    from its lowest-rank vertex, so no deduplication pass is needed.
    """
    order = sorted(range(g.n), key=lambda v: (len(g.adjacency[v]), v))
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    forward = [frozenset(w for w in g.adjacency[v] if pos[w] > pos[v]) for v in range(g.n)]
    triangles: list[Triangle] = []
    for u in range(g.n):
        fu = forward[u]
        for v in fu:
            common = fu & forward[v]
            for w in common:
                a, b, c = sorted((u, v, w))
                triangles.append((a, b, c))
    triangles.sort()
    return triangles


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices`` plus the old-to-new vertex map.

    New labels follow the sorted order of the selected vertices.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    mapping = {old: new for new, old in enumerate(chosen)}
    adjacency = tuple(
        tuple(mapping[w] for w in g.adjacency[old] if w in mapping) for old in chosen
    )
    return Graph(len(chosen), adjacency), mapping


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``vertices``."""
    chosen = set(vertices)
    for v in chosen:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        if not chosen.isdisjoint(g.neighbor_sets[v]):
            return False
    return True


def canonical_matching(edges: Iterable[tuple[int, int]]) -> Matching:
    """Normalize edges to sorted ``(u, v)`` pairs with ``u < v``, deduplicated
    and sorted. Rejects degenerate pairs ``(u, u)``."""
    seen = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"degenerate matching edge ({u}, {v})")
        seen.add(ordered_edge(u, v))
    return tuple(sorted(seen))


def matched_vertices(matching: Iterable[tuple[int, int]]) -> VertexSet:
    return frozenset(v for e in matching for v in e)


def is_matching(edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the (deduplicated) edges are pairwise vertex-disjoint."""
    used: set[int] = set()
    for u, v in canonical_matching(edges):
        if u in used or v in used:
            return False
        used.add(u)
        used.add(v)
    return True


def is_induced_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> bool:
    """True iff ``matching`` is a matching of ``g`` and the subgraph induced
    on its endpoints contains no edge beyond the matching itself.

    Raises ``ValueError`` when a listed edge is absent from ``g``.
    """
    edges = canonical_matching(matching)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"matching edge ({u}, {v}) not present in graph")
    if not is_matching(edges):
        return False
    edge_set = set(edges)
    endpoints = matched_vertices(edges)
    for v in endpoints:
        for w in g.adjacency[v]:
            if w > v and w in endpoints and (v, w) not in edge_set:
                return False
    return True


# Edge-list text format: first line "n m", then m lines "u v" (0-indexed,
# whitespace separated). Readers accept either endpoint order and collapse
# duplicate lines.


def write_edge_list(g: Graph, target: str | Path | IO[str]) -> None:
    lines = [f"{g.n} {g.m}\n"]
    lines.extend(f"{u} {v}\n" for u, v in g.edges())
    text = "".join(lines)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)


def read_edge_list(source: str | Path | IO[str]) -> Graph:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    rows = [
        (idx + 1, line.split())
        for idx, line in enumerate(io.StringIO(text))
        if line.strip()
    ]
    if not rows:
        raise ValueError("empty edge-list file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ValueError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"line {lineno}: expected header 'n m'") from exc
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, tokens in rows[1:]:
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected two integers")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected two integers") from exc
        edges.append((u, v))
    return from_edge_list(n, edges)
