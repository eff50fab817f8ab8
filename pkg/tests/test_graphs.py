"""Structural predicates, radius, and edge coloring."""

from itertools import combinations

import pytest

from ovlab import (
    BipartiteGraph,
    GraphError,
    build_biclique,
    build_cycle,
    build_hadamard,
    build_path,
    build_radius_tree,
    common_neighbors,
    edge_color_bipartite,
    enumerate_induced_p4s,
    is_c4_free,
    is_disjoint_union_of_bicliques,
    load_fixture,
    radius_center,
    sample_random_bipartite,
    twin_status,
)
from ovlab.graphs import is_connected, is_forest, is_tree


def brute_force_induced_p4_count(g: BipartiteGraph) -> int:
    """Independent oracle: scan all 4-subsets of the vertex union."""
    verts = g.vertices()
    count = 0
    for quad in combinations(verts, 4):
        inside = set(quad)
        deg = {}
        edges = 0
        for v in quad:
            side, i = v
            other = "p" if side == "s" else "s"
            nbrs = [w for w in ((other, j) for j in g.neighbors(v)) if w in inside]
            deg[v] = len(nbrs)
            edges += len(nbrs)
        edges //= 2
        if edges == 3 and sorted(deg.values()) == [1, 1, 2, 2]:
            count += 1
    return count


def test_biclique_classification_examples():
    ok, witness = is_disjoint_union_of_bicliques(build_biclique(2, 2))
    assert ok and witness is None

    ok, witness = is_disjoint_union_of_bicliques(build_path(4))
    assert not ok
    e1, mid, e3 = witness
    assert {e1, mid, e3} == build_path(4).edges

    # the weight-1 layer of the fig1 fixture: both edges share one p vertex
    fig1 = load_fixture("fig1")
    layer1 = fig1.decomposition.layer(1)
    assert layer1 == {(2, 2), (3, 2)}
    ok, _ = is_disjoint_union_of_bicliques(BipartiteGraph(3, 3, layer1))
    assert ok


def test_induced_p4_examples():
    assert len(enumerate_induced_p4s(build_path(4))) == 1
    assert enumerate_induced_p4s(build_cycle(4)) == []
    assert len(enumerate_induced_p4s(build_cycle(6))) == 6


def test_induced_p4_shape():
    ((e1, mid, e3),) = enumerate_induced_p4s(build_path(4))
    assert mid == (2, 1)
    assert e1 < e3


def test_induced_p4_matches_brute_force_on_random_graphs():
    for seed in range(40):
        g = sample_random_bipartite(4, 0.4 + (seed % 5) / 10, seed)
        assert len(enumerate_induced_p4s(g)) == brute_force_induced_p4_count(g)


def test_bicliques_iff_no_induced_p4():
    for seed in range(60):
        g = sample_random_bipartite(3, (seed % 10) / 10, seed)
        assert is_disjoint_union_of_bicliques(g)[0] == (not enumerate_induced_p4s(g))


def test_c4_free():
    assert not is_c4_free(build_cycle(4))
    assert is_c4_free(build_path(6))
    assert is_c4_free(build_radius_tree(3)[0])
    assert is_c4_free(build_hadamard(2))
    assert not is_c4_free(build_biclique(2, 2))


def test_common_neighbors_examples():
    h3 = build_hadamard(3)
    pair_counts = set()
    for a, b in combinations(range(1, 8), 2):
        cn = common_neighbors(h3, ("s", a), ("s", b))
        if cn:
            pair_counts.add(len(cn))
    assert pair_counts == {2}  # n/4 with n = 8

    assert common_neighbors(build_biclique(2, 2), ("s", 1), ("s", 2)) == {1, 2}
    two_edges = BipartiteGraph(2, 2, [(1, 1), (2, 2)])
    assert common_neighbors(two_edges, ("s", 1), ("s", 2)) == frozenset()


def test_common_neighbors_rejects_cross_part():
    with pytest.raises(GraphError):
        common_neighbors(build_biclique(2, 2), ("s", 1), ("p", 1))


def test_common_neighbors_implies_c4():
    for seed in range(40):
        g = sample_random_bipartite(4, 0.5, seed + 1000)
        for a, b in combinations(range(1, 5), 2):
            if len(common_neighbors(g, ("s", a), ("s", b))) >= 2:
                assert not is_c4_free(g)


def test_twins():
    assert twin_status(build_biclique(2, 2), ("s", 1), ("s", 2)) == "non_isolated_twins"
    empty = BipartiteGraph(2, 2, [])
    assert twin_status(empty, ("p", 1), ("p", 2)) == "isolated_twins"
    p4 = build_path(4)
    assert twin_status(p4, ("s", 1), ("s", 2)) == "not_twins"
    with pytest.raises(GraphError):
        twin_status(p4, ("s", 1), ("s", 1))
    with pytest.raises(GraphError):
        twin_status(p4, ("s", 1), ("p", 1))


def test_radius_examples():
    star = BipartiteGraph(1, 4, [(1, j) for j in range(1, 5)])
    radius, center, levels = radius_center(star)
    assert radius == 1 and center == ("s", 1)
    assert levels[0] == {("s", 1)}

    assert radius_center(build_path(4))[0] == 2

    t3, _ = build_radius_tree(3)
    assert radius_center(t3)[0] == 3


def test_radius_rejects_disconnected():
    with pytest.raises(GraphError):
        radius_center(BipartiteGraph(2, 2, [(1, 1)]))


def test_radius_levels_on_trees():
    for i in range(4):
        tree, _ = build_radius_tree(i)
        if tree.ns + tree.np == 1:
            continue
        radius, center, levels = radius_center(tree)
        assert levels[0] == {center}
        depth = {v: d for d, level in enumerate(levels) for v in level}
        for s, p in tree.edges:
            assert abs(depth[("s", s)] - depth[("p", p)]) == 1


def test_connectivity_helpers():
    assert is_tree(build_path(5))
    assert not is_tree(build_cycle(6))
    assert is_forest(BipartiteGraph(2, 2, [(1, 1), (2, 2)]))
    assert not is_forest(build_cycle(4))
    assert is_connected(build_cycle(4))
    assert not is_connected(BipartiteGraph(2, 2, [(1, 1)]))


def test_edge_coloring_examples():
    matching = BipartiteGraph(3, 3, [(i, i) for i in range(1, 4)])
    assert set(edge_color_bipartite(matching).values()) == {1}

    k22 = build_biclique(2, 2)
    coloring = edge_color_bipartite(k22)
    assert sorted(coloring.values()).count(1) == 2
    assert sorted(coloring.values()).count(2) == 2

    h3 = build_hadamard(3)
    coloring = edge_color_bipartite(h3)
    assert len(coloring) == 28
    assert max(coloring.values()) == 4


def _layers_are_matchings(g: BipartiteGraph, coloring: dict) -> bool:
    for c in set(coloring.values()):
        edges = [e for e, col in coloring.items() if col == c]
        if len({s for s, _ in edges}) != len(edges):
            return False
        if len({p for _, p in edges}) != len(edges):
            return False
    return True


def test_edge_coloring_property():
    for seed in range(50):
        g = sample_random_bipartite(5, 0.3 + (seed % 7) / 10, seed)
        if not g.edges:
            continue
        coloring = edge_color_bipartite(g)
        assert set(coloring) == g.edges
        assert max(coloring.values()) == g.max_degree()
        assert _layers_are_matchings(g, coloring)


def test_edge_coloring_rejects_edgeless():
    with pytest.raises(GraphError):
        edge_color_bipartite(BipartiteGraph(2, 2, []))


def test_graph_validation():
    with pytest.raises(GraphError):
        BipartiteGraph(2, 2, [(3, 1)])
    with pytest.raises(GraphError):
        BipartiteGraph(-1, 2, [])
