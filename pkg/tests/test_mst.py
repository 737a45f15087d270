import random

import pytest

from proxigraph.cdt import build_cdt
from proxigraph.errors import DisconnectedError, GeometryError
from proxigraph.mst import (
    cmst,
    cmst_visibility,
    mst,
    mst_of_cdt,
    mst_visibility,
    spanning_trees_of_cdt,
)
from proxigraph.planegraph import PlaneGraph, WeightedEdge, WeightedGraph, cvg, evg

from conftest import forest


def test_mst_triangle():
    g = PlaneGraph([(0, 0), (3, 0), (3, 4)], [])
    t = mst(evg(g))
    assert t.edge_pairs() == {(0, 1), (1, 2)}  # drops the length-5 edge
    assert t.total_weight == pytest.approx(7.0)


def test_mst_of_tree_is_itself():
    f = forest(3, 4, 25)
    sub = PlaneGraph(f.points, f.edges)
    tree_edges = set(sub.edges)
    # when the input spans and is weighted zero, the cmst is the input
    if len(tree_edges) == f.n - 1:
        assert cmst(sub).edge_pairs() == tree_edges


def test_zero_edge_always_in_mst():
    g = PlaneGraph([(0, 0), (10, 0), (10, 10), (0, 10)], [(0, 2)])
    t = mst(cvg(g))
    assert (0, 2) in t.edge_pairs()


def test_disconnected_raises():
    wg = WeightedGraph(3, [WeightedEdge(0, 1, 1, False)], "euclidean")
    with pytest.raises(DisconnectedError):
        mst(wg)


def test_mst_unweighted_rejected():
    from proxigraph.planegraph import visibility_graph

    g = PlaneGraph([(0, 0), (1, 0), (0, 1)], [])
    with pytest.raises(ValueError):
        mst(visibility_graph(g))


def test_mst_of_cdt_equals_visibility_mst():
    for seed in range(100):
        f = forest(seed, 3, 30)
        assert mst_of_cdt(build_cdt(f)).edge_pairs() == mst_visibility(f).edge_pairs()


def test_cmst_equals_visibility_cmst_and_contains_input():
    for seed in range(200):
        f = forest(seed, 3, 40)
        c = cmst(f)
        assert set(f.edges) <= c.edge_pairs()
        if seed < 60:
            assert c.edge_pairs() == cmst_visibility(f).edge_pairs()


def test_cmst_with_no_edges_is_euclidean_mst():
    f = forest(11, 5, 30)
    bare = PlaneGraph(f.points, [])
    assert cmst(bare).edge_pairs() == mst_visibility(bare).edge_pairs()


def test_cmst_two_points():
    assert cmst(PlaneGraph([(0, 0), (1, 2)], [])).edge_pairs() == {(0, 1)}


def test_cmst_rejects_cycles():
    g = PlaneGraph([(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GeometryError):
        cmst(g)


def test_cycle_property():
    # every non-tree edge is the maximum of the cycle it closes
    for seed in range(20):
        f = forest(seed, 4, 15)
        wg = evg(f)
        tree = mst(wg)
        pairs = tree.edge_pairs()
        keys = {(e.u, e.v): e.key() for e in wg.edges}
        for e in wg.edges:
            if (e.u, e.v) in pairs:
                continue
            cycle = tree.path_edges(e.u, e.v)
            assert all(keys[c] < e.key() for c in cycle)


def test_spanning_trees_of_cdt_matches_kruskal():
    for seed in range(40):
        f = forest(seed, 3, 35)
        tri = build_cdt(f)
        tp, cm = spanning_trees_of_cdt(tri)
        assert tp.edge_pairs() == mst_of_cdt(tri).edge_pairs()
        assert cm.edge_pairs() == cmst(f).edge_pairs()
        assert set(f.edges) <= cm.edge_pairs()
