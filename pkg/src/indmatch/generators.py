"""Generators for the graph families the guarantees are exercised on.

Two classical C4-free families over prime fields (point-line incidence
graphs of projective planes and their polarity quotients), random regular
graphs from the pairing model, and small named fixtures with frozen
labelings.

Finite-field arithmetic is plain ``mod p``; prime powers are out of scope.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass

from .graph import Graph, from_edge_list

PAIRING_RESTART_BUDGET = 1000

FIXTURE_NAMES = (
    "petersen",
    "heawood",
    "cycle-<k>",
    "path-<k>",
    "complete-<k>",
    "complete-bipartite-<a>-<b>",
    "edgeless-<k>",
)


class GenerationError(RuntimeError):
    """Raised when randomized generation exhausts its restart budget."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


def _require_prime(q: int) -> None:
    if q < 2:
        raise ValueError(f"field order must be a prime >= 2, got {q}")
    if q in (2, 3):
        return
    if q % 2 == 0:
        raise ValueError(f"field order must be prime, got {q}")
    f = 3
    while f * f <= q:
        if q % f == 0:
            raise ValueError(f"field order must be prime, got {q}")
        f += 2


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    # Canonical representatives: first nonzero coordinate normalized to 1,
    # enumerated in a frozen order so vertex labels are stable.
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts.extend((0, 1, z) for z in range(q))
    pts.append((0, 0, 1))
    return pts


def _dot(u: tuple[int, int, int], v: tuple[int, int, int], q: int) -> int:
    return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q


def projective_incidence_graph(q: int) -> Graph:
    """Bipartite point-line incidence graph of the projective plane of
    prime order ``q``.

    Vertices ``0..N-1`` are points and ``N..2N-1`` are lines, where
    ``N = q*q + q + 1``; both sides use the same frozen coordinate
    enumeration, and point ``i`` joins line ``j`` when their coordinate
    vectors are orthogonal mod ``q``. The result is (q+1)-regular with
    girth 6, hence triangle-free and C4-free.
    """
    _require_prime(q)
    pts = _projective_points(q)
    n = len(pts)
    edges = [
        (i, n + j)
        for i in range(n)
        for j in range(n)
        if _dot(pts[i], pts[j], q) == 0
    ]
    return from_edge_list(2 * n, edges)


def polarity_graph(q: int) -> Graph:
    """Polarity quotient of the incidence graph over the prime field of
    order ``q`` (the classical C4-free near-regular construction).

    Vertices are the ``q*q + q + 1`` projective points; two distinct points
    are adjacent when orthogonal. Exactly ``q + 1`` self-orthogonal points
    have degree ``q``; all others have degree ``q + 1``.
    """
    _require_prime(q)
    pts = _projective_points(q)
    n = len(pts)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if _dot(pts[i], pts[j], q) == 0
    ]
    return from_edge_list(n, edges)


def _pairing_suitable(edges: set[tuple[int, int]], leftover: dict[int, int]) -> bool:
    # A stuck pairing round can still finish iff some pair of leftover stubs
    # joins non-adjacent distinct vertices.
    if not leftover:
        return True
    nodes = list(leftover)
    for i, s1 in enumerate(nodes):
        for s2 in nodes[i + 1 :]:
            pair = (s1, s2) if s1 < s2 else (s2, s1)
            if pair not in edges:
                return True
    return False


def _try_pairing(n: int, d: int, rng: random.Random) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = list(range(n)) * d
    while stubs:
        leftover: dict[int, int] = defaultdict(int)
        rng.shuffle(stubs)
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftover[s1] += 1
                leftover[s2] += 1
        if not leftover:
            return edges
        if not _pairing_suitable(edges, leftover):
            return None
        stubs = [v for v, cnt in leftover.items() for _ in range(cnt)]
    return edges


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random ``d``-regular graph on ``n`` vertices from the pairing model.

    Half-edge stubs are paired after a shuffle; colliding stubs (loops and
    repeated pairs) are re-shuffled among themselves until none remain, and
    the whole sample restarts when a round gets stuck. Deterministic in
    ``seed``. Raises :class:`GenerationError` after
    ``PAIRING_RESTART_BUDGET`` restarts.
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    if d >= n and not (n == 0 and d == 0):
        raise ValueError(f"degree {d} requires more than {n} vertices")
    if n * d % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    for _ in range(PAIRING_RESTART_BUDGET):
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            return from_edge_list(n, edges)
    raise GenerationError(
        f"no simple {d}-regular pairing on {n} vertices after "
        f"{PAIRING_RESTART_BUDGET} restarts",
        attempts=PAIRING_RESTART_BUDGET,
    )


def _petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))  # outer cycle
        edges.append((i, i + 5))  # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return from_edge_list(10, edges)


def _heawood() -> Graph:
    # Hamiltonian labeling: 14-cycle plus the chord i -- i+5 at even i.
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges.extend((i, (i + 5) % 14) for i in range(0, 14, 2))
    return from_edge_list(14, edges)


def named_fixture(name: str) -> Graph:
    """Small canonical graphs with documented, frozen vertex labelings.

    Supported: ``petersen``, ``heawood``, ``cycle-k`` (k >= 3), ``path-k``
    (k >= 1 vertices), ``complete-k``, ``complete-bipartite-a-b`` (sides
    ``0..a-1`` and ``a..a+b-1``) and ``edgeless-k``.
    """
    if name == "petersen":
        return _petersen()
    if name == "heawood":
        return _heawood()
    parts = name.split("-")
    try:
        if parts[0] == "cycle" and len(parts) == 2:
            k = int(parts[1])
            if k < 3:
                raise ValueError(f"cycle needs k >= 3, got {k}")
            return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])
        if parts[0] == "path" and len(parts) == 2:
            k = int(parts[1])
            if k < 1:
                raise ValueError(f"path needs k >= 1, got {k}")
            return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])
        if parts[0] == "complete" and parts[1] != "bipartite" and len(parts) == 2:
            k = int(parts[1])
            if k < 1:
                raise ValueError(f"complete needs k >= 1, got {k}")
            return from_edge_list(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
        if parts[:2] == ["complete", "bipartite"] and len(parts) == 4:
            a, b = int(parts[2]), int(parts[3])
            if a < 1 or b < 1:
                raise ValueError("complete bipartite needs both sides >= 1")
            return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])
        if parts[0] == "edgeless" and len(parts) == 2:
            k = int(parts[1])
            if k < 0:
                raise ValueError(f"edgeless needs k >= 0, got {k}")
            return from_edge_list(k, [])
    except ValueError as exc:
        if "invalid literal" not in str(exc):
            raise
    raise ValueError(
        f"unknown fixture {name!r}; supported: {', '.join(FIXTURE_NAMES)}"
    )


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative description of one generated graph (CLI-facing)."""

    family: str  # projective | polarity | random-regular | fixture
    q: int | None = None
    n: int | None = None
    d: int | None = None
    seed: int = 0
    fixture_name: str | None = None


def build_graph(spec: GeneratorSpec) -> Graph:
    if spec.family == "projective":
        if spec.q is None:
            raise ValueError("projective family requires q")
        return projective_incidence_graph(spec.q)
    if spec.family == "polarity":
        if spec.q is None:
            raise ValueError("polarity family requires q")
        return polarity_graph(spec.q)
    if spec.family == "random-regular":
        if spec.n is None or spec.d is None:
            raise ValueError("random-regular family requires n and d")
        return random_regular(spec.n, spec.d, spec.seed)
    if spec.family == "fixture":
        if spec.fixture_name is None:
            raise ValueError("fixture family requires a name")
        return named_fixture(spec.fixture_name)
    raise ValueError(f"unknown family {spec.family!r}")
