import random

import pytest

from proxigraph.cmst_constraints import (
    cmst_constraints_fast,
    cmst_constraints_reference,
    verify_containment,
)
from proxigraph.errors import GeometryError
from proxigraph.generators import figure2, figure3, random_forest, zigzag
from proxigraph.mst import cmst_visibility, mst_visibility
from proxigraph.oracle import oracle_min_constraints
from proxigraph.planegraph import PlaneGraph, visible

from conftest import forest


def test_figure2_needs_both_edges():
    f = figure2()
    assert cmst_constraints_reference(f).edges == ((0, 1), (1, 2))
    assert cmst_constraints_fast(f).edges == ((0, 1), (1, 2))
    assert oracle_min_constraints(f, "cmst").edges == ((0, 1), (1, 2))


def test_figure3_needs_only_the_middle_edge():
    f = figure3()
    # the middle edge blocks v1..v4 in the visibility graph, and every
    # path edge is longer than the absent bottom edge
    assert not visible(f, 0, 3)
    bottom = f.int_edge_sqlen((0, 3))
    for e in f.edges:
        assert f.int_edge_sqlen(e) > bottom
    assert cmst_constraints_reference(f).edges == ((1, 2),)
    assert cmst_constraints_fast(f).edges == ((1, 2),)
    assert oracle_min_constraints(f, "cmst").edges == ((1, 2),)
    assert verify_containment(f, [(1, 2)])
    assert not verify_containment(f, [])


def test_subset_of_euclidean_mst_needs_nothing():
    for seed in range(20):
        f = forest(seed, 4, 25)
        t = mst_visibility(PlaneGraph(f.points, []))
        sub = [e for e in f.edges if e in t.edge_pairs()]
        g = PlaneGraph(f.points, sub, validate="none")
        assert cmst_constraints_fast(g).edges == ()


def test_zigzag_worst_case():
    for n in range(4, 13):
        z = zigzag(n)
        assert len(cmst_constraints_fast(z).edges) == n - 1
        assert len(cmst_constraints_reference(z).edges) == n - 1


def test_two_points_need_nothing():
    g = PlaneGraph([(0, 0), (5, 5)], [(0, 1)])
    assert cmst_constraints_fast(g).edges == ()


def test_non_forest_rejected():
    g = PlaneGraph([(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GeometryError):
        cmst_constraints_fast(g)
    with pytest.raises(GeometryError):
        cmst_constraints_reference(g)


def test_fast_equals_reference():
    for seed in range(120):
        kind = "dt" if seed % 2 else "vis"
        f = forest(seed, 3, 45, kind=kind)
        assert (
            cmst_constraints_fast(f).edges
            == cmst_constraints_reference(f).edges
        ), seed


def test_property1_unforced_edges_live_in_t_prime():
    for seed in range(40):
        f = forest(seed, 4, 30)
        s = set(cmst_constraints_fast(f).edges)
        t_prime = mst_visibility(f).edge_pairs()
        for e in f.edges:
            if e not in s:
                assert e in t_prime


def test_output_cmst_avoids_crossing_the_forest():
    # CMST(V, S) stays inside the visibility graph of F
    from proxigraph.mst import cmst_of_subset
    from proxigraph.geometry import segments_cross_sign

    for seed in range(30):
        f = forest(seed, 4, 25)
        s = cmst_constraints_fast(f)
        tree = cmst_of_subset(f, list(s))
        xs, ys = f.xs, f.ys
        for a, b in tree.edge_pairs():
            for c, d in f.edges:
                if a in (c, d) or b in (c, d):
                    continue
                assert not segments_cross_sign(
                    xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]
                )


def test_containment_and_minimality():
    for seed in range(60):
        f = forest(seed, 3, 14)
        s = cmst_constraints_fast(f)
        assert verify_containment(f, s)
        # minimal: dropping any edge of S breaks containment
        for e in s.edges:
            rest = [x for x in s.edges if x != e]
            assert not verify_containment(f, rest), (seed, e)


def test_minimum_against_exhaustive_oracle():
    for seed in range(40):
        f = forest(seed, 3, 10)
        if f.m > 10:
            continue
        assert (
            cmst_constraints_fast(f).edges
            == oracle_min_constraints(f, "cmst").edges
        ), seed


def test_audit_log_is_always_empty():
    # A non-input CMST edge on the cycle of e' can never outweigh e':
    # swapping it for e' would yield a lighter spanning tree.  So the
    # final intersection with the input edges is a no-op safety net, and
    # the extraction never zeroes a non-input edge.
    for seed in range(80):
        f = forest(seed, 4, 30)
        s, audit = cmst_constraints_fast(f, with_audit=True)
        assert verify_containment(f, s)
        assert audit == []


def test_spanning_input_tree_with_all_constraints():
    f = forest(9, 4, 20)
    if set(cmst_visibility(f).edge_pairs()) >= set(f.edges):
        assert verify_containment(f, list(f.edges))
