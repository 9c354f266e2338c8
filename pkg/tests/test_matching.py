import math
from itertools import combinations

import pytest
from hypothesis import given, settings

from indmatch import (
    contract_matching,
    degree_profile,
    enumerate_triangles,
    extract_matching,
    greedy_maximal_matching,
    is_induced_matching,
    is_proper_edge_coloring,
    is_independent_set,
    misra_gries_edge_color,
    named_fixture,
    pull_back_matching,
    validate_graph,
)
from indmatch.matching import EdgeColoring
from indmatch.oracle import max_independent_set_bf

from conftest import graphs, regular_corpus


def test_cycle_colorings():
    c5 = named_fixture("cycle-5")
    col5 = misra_gries_edge_color(c5)
    assert is_proper_edge_coloring(c5, col5)
    assert col5.num_colors == 3  # odd cycle needs three colors
    c6 = named_fixture("cycle-6")
    col6 = misra_gries_edge_color(c6)
    assert is_proper_edge_coloring(c6, col6)
    assert col6.num_colors <= 3
    assert len(extract_matching(c6, col6)) >= 2


def test_heawood_coloring(heawood):
    coloring = misra_gries_edge_color(heawood)
    assert is_proper_edge_coloring(heawood, coloring)
    assert coloring.num_colors <= 4


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=12))
def test_coloring_proper_and_delta_plus_one(g):
    coloring = misra_gries_edge_color(g)
    assert is_proper_edge_coloring(g, coloring)
    _, delta, _ = degree_profile(g)
    assert coloring.num_colors <= delta + 1
    assert len(coloring.colors) == g.m


def test_coloring_deterministic(petersen):
    a = misra_gries_edge_color(petersen)
    b = misra_gries_edge_color(petersen)
    assert a.colors == b.colors and a.num_colors == b.num_colors


def test_extract_matching_examples(heawood):
    coloring = misra_gries_edge_color(heawood)
    matching = extract_matching(heawood, coloring)
    assert len(matching) >= math.ceil(21 / 4)
    k2 = named_fixture("complete-2")
    assert extract_matching(k2, misra_gries_edge_color(k2)) == ((0, 1),)
    empty = named_fixture("edgeless-4")
    assert extract_matching(empty, misra_gries_edge_color(empty)) == ()


def test_extract_matching_rejects_improper(c6):
    bad = EdgeColoring({e: 0 for e in c6.edges()}, 1)
    with pytest.raises(ValueError):
        extract_matching(c6, bad)


def test_regular_matching_guarantee():
    for name, g in regular_corpus(seeds_per_combo=1, n_step=8):
        coloring = misra_gries_edge_color(g)
        _, d, regular = degree_profile(g)
        assert regular
        assert coloring.num_colors <= d + 1, name
        matching = extract_matching(g, coloring)
        assert len(matching) >= math.ceil(g.n * d / (2 * (d + 1))), name
        assert len(matching) >= math.ceil(g.n / 4), name


def test_greedy_maximal_matching():
    p4 = named_fixture("path-4")
    m = greedy_maximal_matching(p4, 0)
    assert len(m) >= 1
    k4 = named_fixture("complete-4")
    assert len(greedy_maximal_matching(k4, 3)) == 2
    assert greedy_maximal_matching(named_fixture("edgeless-3"), 5) == ()


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_greedy_matching_is_maximal(g):
    matching = greedy_maximal_matching(g, 42)
    used = {v for e in matching for v in e}
    for u, v in g.edges():
        assert u in used or v in used  # no extendable edge


def test_contract_examples(c6):
    p4 = named_fixture("path-4")
    cg = contract_matching(p4, [(0, 1), (2, 3)])
    assert cg.graph.n == 2 and cg.graph.m == 1
    k2 = named_fixture("complete-2")
    single = contract_matching(k2, [(0, 1)])
    assert single.graph.n == 1 and single.graph.m == 0
    tri = contract_matching(c6, [(0, 1), (2, 3), (4, 5)])
    assert tri.graph.n == 3 and tri.graph.m == 3
    assert len(enumerate_triangles(tri.graph)) == 1


def test_contract_rejects_invalid(c6):
    with pytest.raises(ValueError):
        contract_matching(c6, [(0, 2)])  # not an edge
    with pytest.raises(ValueError):
        contract_matching(c6, [(0, 1), (1, 2)])  # shares a vertex


def test_contract_degree_bound():
    for name, g in regular_corpus(seeds_per_combo=1, n_step=12):
        _, d, _ = degree_profile(g)
        coloring = misra_gries_edge_color(g)
        matching = extract_matching(g, coloring)
        cg = contract_matching(g, matching)
        validate_graph(cg.graph)
        _, d_m, _ = degree_profile(cg.graph)
        assert d_m <= 2 * (d - 1), name


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9, min_n=2))
def test_pull_back_property_exhaustive(g):
    # Every independent set of the contraction pulls back to an induced
    # matching of the host, checked against all subsets.
    matching = greedy_maximal_matching(g, 7)
    if not matching:
        return
    cg = contract_matching(g, matching)
    k = cg.graph.n
    for mask in range(1 << k):
        subset = [x for x in range(k) if mask >> x & 1]
        if is_independent_set(cg.graph, subset):
            pulled = pull_back_matching(cg, subset)
            assert is_induced_matching(g, pulled)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9, min_n=2))
def test_contraction_correspondence_both_directions(g):
    # Subsets of a maximal matching are induced matchings exactly when their
    # contracted vertices form an independent set.
    maximal = greedy_maximal_matching(g, 11)
    if not maximal:
        return
    cg = contract_matching(g, maximal)
    index_of = {e: i for i, e in enumerate(cg.rep)}
    for r in range(len(maximal) + 1):
        for subset in combinations(maximal, r):
            indices = [index_of[e] for e in subset]
            assert is_induced_matching(g, subset) == is_independent_set(
                cg.graph, indices
            )


def test_contracted_independent_sets_pull_back_to_oracle_valid(heawood):
    coloring = misra_gries_edge_color(heawood)
    matching = extract_matching(heawood, coloring)
    cg = contract_matching(heawood, matching)
    size, witness = max_independent_set_bf(cg.graph, limit=cg.graph.n)
    pulled = pull_back_matching(cg, witness)
    assert is_induced_matching(heawood, pulled)
    assert len(pulled) == size
