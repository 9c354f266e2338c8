from collections import Counter, deque

import pytest

from indmatch import (
    GeneratorSpec,
    build_graph,
    degree_profile,
    enumerate_triangles,
    named_fixture,
    polarity_graph,
    projective_incidence_graph,
    random_regular,
    validate_graph,
)
from indmatch.oracle import is_c4_free_bf


def girth(g):
    """Shortest cycle length by BFS from every vertex; None if acyclic."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


@pytest.mark.parametrize("q,n,d", [(2, 14, 3), (3, 26, 4), (5, 62, 6)])
def test_projective_incidence_structure(q, n, d):
    g = projective_incidence_graph(q)
    validate_graph(g)
    assert g.n == n
    assert g.m == n * d // 2
    assert degree_profile(g) == (d, d, True)
    assert enumerate_triangles(g) == []
    assert is_c4_free_bf(g, limit=g.n)


def test_projective_incidence_girth_six():
    assert girth(projective_incidence_graph(2)) == 6
    assert girth(projective_incidence_graph(3)) == 6


def test_projective_heawood_equivalent(heawood):
    g = projective_incidence_graph(2)
    assert (g.n, g.m, degree_profile(g)) == (heawood.n, heawood.m, degree_profile(heawood))


@pytest.mark.parametrize("q", [1, 4, 6, 9])
def test_projective_rejects_non_prime(q):
    with pytest.raises(ValueError):
        projective_incidence_graph(q)
    with pytest.raises(ValueError):
        polarity_graph(q)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_polarity_structure(q):
    g = polarity_graph(q)
    validate_graph(g)
    assert g.n == q * q + q + 1
    degrees = Counter(g.degree(v) for v in range(g.n))
    assert degrees[q] == q + 1  # self-orthogonal points
    assert degrees[q + 1] == g.n - (q + 1)
    assert is_c4_free_bf(g, limit=g.n)


def test_random_regular_basic():
    g = random_regular(10, 3, 7)
    validate_graph(g)
    assert degree_profile(g) == (3, 3, True)


def test_random_regular_deterministic():
    assert random_regular(24, 5, 99) == random_regular(24, 5, 99)
    assert random_regular(24, 5, 99) != random_regular(24, 5, 100)


def test_random_regular_parity_error():
    with pytest.raises(ValueError, match="even"):
        random_regular(5, 3, 0)


def test_random_regular_degree_bound():
    with pytest.raises(ValueError):
        random_regular(4, 4, 0)


def test_random_regular_k4():
    g = random_regular(4, 3, 12345)
    assert g.m == 6  # unique 3-regular graph on 4 vertices


def test_random_regular_d0_and_large_degree():
    g = random_regular(6, 0, 1)
    assert g.m == 0
    big = random_regular(100, 20, 5)
    assert degree_profile(big) == (20, 20, True)


def test_fixture_examples(petersen):
    from indmatch.oracle import count_triangles_bf

    assert count_triangles_bf(petersen) == 0
    c6 = named_fixture("cycle-6")
    assert degree_profile(c6) == (2, 2, True)
    k22 = named_fixture("complete-bipartite-2-2")
    assert (k22.n, k22.m) == (4, 4)
    assert girth(k22) == 4


def test_fixture_unknown_name_lists_supported():
    with pytest.raises(ValueError, match="petersen"):
        named_fixture("dodecahedron")
    with pytest.raises(ValueError):
        named_fixture("cycle-2")


def test_heawood_structure(heawood):
    validate_graph(heawood)
    assert degree_profile(heawood) == (3, 3, True)
    assert enumerate_triangles(heawood) == []
    assert is_c4_free_bf(heawood, limit=14)
    assert girth(heawood) == 6


def test_build_graph_dispatch():
    assert build_graph(GeneratorSpec(family="projective", q=2)).n == 14
    assert build_graph(GeneratorSpec(family="polarity", q=2)).n == 7
    assert build_graph(GeneratorSpec(family="random-regular", n=8, d=3, seed=1)).n == 8
    assert build_graph(GeneratorSpec(family="fixture", fixture_name="petersen")).n == 10
    with pytest.raises(ValueError):
        build_graph(GeneratorSpec(family="projective"))
    with pytest.raises(ValueError):
        build_graph(GeneratorSpec(family="nope"))
