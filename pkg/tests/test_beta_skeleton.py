import random
from fractions import Fraction

import pytest

from proxigraph.beta_skeleton import (
    EliminationPath,
    beta_constraints,
    build_elimination_forest,
    closest_eliminator,
    contract_forest,
    elimination_path,
    segment_sqdist,
)
from proxigraph.cdt import build_cdt, is_locally_delaunay
from proxigraph.gabriel import gabriel_constraints
from proxigraph.geometry import BetaParam, orient_sign
from proxigraph.oracle import oracle_min_constraints
from proxigraph.planegraph import PlaneGraph, visibility_matrix

from conftest import plane_graph

BETAS = (1, "5/4", "3/2", 2)


def test_acute_triangle_has_empty_forest_at_beta1():
    g = PlaneGraph([(0, 0), (4, 0), (2, 4)], [])
    tri = build_cdt(g)
    forest = build_elimination_forest(tri, 1)
    assert forest.leaves == []
    assert forest.nodes == {}


def test_obtuse_triangle_single_leaf_at_beta1():
    g = PlaneGraph([(0, 0), (4, 0), (2, "1/2")], [])  # obtuse at vertex 2
    tri = build_cdt(g)
    forest = build_elimination_forest(tri, 1)
    assert len(forest.leaves) == 1
    leaf = forest.leaves[0]
    assert leaf.vertex == 2
    assert forest.nodes[leaf.start].edge == (0, 1)


def test_empty_path_when_outside_neighbourhood():
    g = PlaneGraph([(0, 0), (4, 0), (2, 4)], [])
    tri = build_cdt(g)
    p = tri.triangles[0][0]
    path = elimination_path(p, 0, 1, tri)
    assert path.edges == [] and path.reason == "left-neighbourhood"


def test_non_locally_delaunay_edge_terminates_path():
    # constrained non-locally-Delaunay edge: a path reaching it stops with
    # that edge as its last element
    g = PlaneGraph([(0, 0), (4, 0), (2, "9/10"), (2, -3)], [(0, 1)])
    tri = build_cdt(g)
    assert not is_locally_delaunay(tri, (0, 1))
    t = next(i for i, tv in enumerate(tri.triangles) if 3 in tv)
    path = elimination_path(3, t, 2, tri)
    assert path.edges == [(0, 1)]
    assert path.reason == "hit-non-locally-delaunay"


def test_non_locally_delaunay_is_never_interior_to_a_path():
    for seed in range(20):
        g = plane_graph(seed, lo=5, hi=16, max_m=8)
        tri = build_cdt(g)
        for beta in (1, 2):
            forest = build_elimination_forest(tri, beta)
            for leaf in forest.leaves:
                path = forest.path_of(leaf)
                for e in path[:-1]:
                    assert is_locally_delaunay(tri, e), (seed, beta, e)


def test_path_membership_invariant():
    from proxigraph.geometry import in_beta_disks

    for seed in range(30):
        g = plane_graph(seed, lo=6, hi=30, max_m=10)
        tri = build_cdt(g)
        beta = BetaParam.of(random.Random(seed).choice(BETAS))
        forest = build_elimination_forest(tri, beta)
        xs, ys = g.xs, g.ys
        for leaf in forest.leaves:
            for a, b in forest.path_of(leaf):
                assert in_beta_disks(
                    xs[a], ys[a], xs[b], ys[b],
                    xs[leaf.vertex], ys[leaf.vertex],
                    beta.num, beta.den,
                ), seed


def test_forest_replays_standalone_paths():
    for seed in range(30):
        g = plane_graph(seed, lo=5, hi=20, max_m=8)
        tri = build_cdt(g)
        beta = random.Random(seed ^ 1).choice(BETAS)
        forest = build_elimination_forest(tri, beta)
        starts = {}
        for leaf in forest.leaves:
            starts.setdefault((leaf.vertex, leaf.start), leaf)
        for t, tv in enumerate(tri.triangles):
            for s in range(3):
                p = tv[s]
                path = elimination_path(p, t, beta, tri)
                if not path.edges:
                    continue
                e0 = path.edges[0]
                xs, ys = g.xs, g.ys
                side = orient_sign(
                    xs[e0[0]], ys[e0[0]], xs[e0[1]], ys[e0[1]], xs[p], ys[p]
                )
                leaf = starts[(p, (e0[0], e0[1], side))]
                assert forest.path_of(leaf) == path.edges, (seed, p, t)


def test_contract_forest_identity_and_empty():
    g = plane_graph(3, lo=6, hi=14, max_m=6)
    tri = build_cdt(g)
    forest = build_elimination_forest(tri, "3/2")
    full = contract_forest(forest, list(tri.edge_tri.keys()))
    assert len(full.nodes) == len(forest.nodes)
    assert len(full.leaves) == len(forest.leaves)
    empty = contract_forest(forest, [])
    assert empty.nodes == {} and empty.leaves == []
    with pytest.raises(ValueError):
        contract_forest(full, [])


def test_leaf_survives_iff_path_contains_input_edge():
    for seed in range(25):
        g = plane_graph(seed, lo=5, hi=16, max_m=7)
        tri = build_cdt(g)
        forest = build_elimination_forest(tri, "3/2")
        contracted = contract_forest(forest, g.edges)
        eset = set(g.edges)
        survivors = {(l.vertex, l.end) for l in contracted.leaves}
        for leaf in forest.leaves:
            path = forest.path_of(leaf)
            should_survive = any(e in eset for e in path)
            assert ((leaf.vertex, leaf.end) in survivors) == should_survive


def test_beta1_matches_gabriel():
    for seed in range(60):
        g = plane_graph(seed)
        assert beta_constraints(g, 1).edges == gabriel_constraints(g).edges, seed


def test_beta2_matches_rng_oracle():
    for seed in range(60):
        g = plane_graph(seed)
        assert (
            beta_constraints(g, 2).edges
            == oracle_min_constraints(g, "beta", beta=2).edges
        ), seed


def test_mid_beta_matches_oracle():
    for seed in range(40):
        beta = random.Random(seed).choice(("9/8", "5/4", "3/2", "7/4"))
        g = plane_graph(seed)
        assert (
            beta_constraints(g, beta).edges
            == oracle_min_constraints(g, "beta", beta=Fraction(beta)).edges
        ), (seed, beta)


def test_beta_monotone_in_beta():
    for seed in range(40):
        g = plane_graph(seed)
        prev = set()
        for beta in (1, Fraction(5, 4), Fraction(3, 2), 2):
            cur = set(beta_constraints(g, beta).edges)
            assert prev <= cur, (seed, beta)
            prev = cur


def test_two_points_one_edge_all_betas():
    g = PlaneGraph([(0, 0), (3, 1)], [(0, 1)])
    for beta in BETAS:
        assert beta_constraints(g, beta).edges == ()


def test_closest_eliminator_triangle_is_empty():
    # the triangle spanned by an edge and its closest eliminator
    # contains no other vertex
    from proxigraph.geometry import orient_sign as osign

    for seed in range(40):
        g = plane_graph(seed, lo=5, hi=15, max_m=8)
        tri = build_cdt(g)
        adj = visibility_matrix(g)
        xs, ys = g.xs, g.ys
        for e in tri.edges():
            p = closest_eliminator(g, e, 2, adjacency=adj)
            if p is None:
                continue
            a, b = e
            for w in range(g.n):
                if w in (a, b, p):
                    continue
                s1 = osign(xs[a], ys[a], xs[b], ys[b], xs[w], ys[w])
                s2 = osign(xs[b], ys[b], xs[p], ys[p], xs[w], ys[w])
                s3 = osign(xs[p], ys[p], xs[a], ys[a], xs[w], ys[w])
                strictly_inside = (
                    s1 == s2 == s3 and s1 != 0
                )
                assert not strictly_inside, (seed, e, p, w)


def test_closest_eliminator_path_contains_edge():
    # an input edge with an eliminator lies on the elimination path
    # induced by its closest eliminator
    for seed in range(40):
        g = plane_graph(seed, lo=5, hi=15, max_m=8)
        tri = build_cdt(g)
        adj = visibility_matrix(g)
        for beta in (1, 2):
            for e in g.edges:
                p = closest_eliminator(g, e, beta, adjacency=adj)
                if p is None:
                    continue
                found = False
                for t, tv in enumerate(tri.triangles):
                    if p in tv and e in elimination_path(p, t, beta, tri).edges:
                        found = True
                        break
                assert found, (seed, beta, e, p)


def test_leaf_attached_iff_eliminator_exists():
    # the equivalence driving the algorithm's correctness
    for seed in range(50):
        g = plane_graph(seed, lo=4, hi=14, max_m=8)
        adj = visibility_matrix(g)
        for beta in (1, "3/2", 2):
            s = set(beta_constraints(g, beta).edges)
            for e in g.edges:
                has_elim = closest_eliminator(g, e, beta, adjacency=adj) is not None
                assert (e in s) == has_elim, (seed, beta, e)


def test_forest_touch_counter_linear():
    from proxigraph.generators import random_forest

    worst = 0
    for seed in range(10):
        n = 400
        f = random_forest(n, seed=seed, m=n - 1)
        tri = build_cdt(f)
        for beta in (1, 2):
            forest = build_elimination_forest(tri, beta)
            worst = max(worst, forest.touches / n)
    print(f"\nelimination-forest touch counter: <= {worst:.2f} per vertex")
    # measured on random instances: around 2-4 node touches per vertex
    assert worst <= 12.0, worst


def test_segment_sqdist():
    assert segment_sqdist(0, 5, 0, 0, 10, 0) == 25
    assert segment_sqdist(-3, 4, 0, 0, 10, 0) == 25
    assert segment_sqdist(13, 4, 0, 0, 10, 0) == 25
    assert segment_sqdist(5, 1, 0, 0, 10, 0) == 1
