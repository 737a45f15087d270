import random
from fractions import Fraction

import pytest

from proxigraph.beta_skeleton import beta_constraints
from proxigraph.errors import OracleGuardError
from proxigraph.gabriel import gabriel_constraints
from proxigraph.generators import figure2, figure3, random_plane_graph
from proxigraph.oracle import (
    classical_gbeta,
    classical_gg,
    classical_rng,
    oracle_cbeta,
    oracle_cgg,
    oracle_crng,
    oracle_min_constraints,
    verify_constraint_hierarchy,
    verify_hierarchy,
)
from proxigraph.planegraph import PlaneGraph

from conftest import forest, plane_graph


def test_cgg_of_acute_triangle_is_complete():
    g = PlaneGraph([(0, 0), (4, 0), (2, 4)], [])
    assert oracle_cgg(g) == {(0, 1), (0, 2), (1, 2)}


def test_unconstrained_reduces_to_classical():
    for seed in range(25):
        n = random.Random(seed).randint(4, 20)
        g = random_plane_graph(n, seed=seed, m=0)
        assert oracle_cgg(g) == classical_gg(g)
        assert oracle_crng(g) == classical_rng(g)
        assert oracle_cbeta(g, "3/2") == classical_gbeta(g, "3/2")


def test_blocked_witness_is_ignored():
    # p sits inside the diametral circle of (u, v), but a long input edge
    # passing through the disk (endpoints outside it) hides p from both
    # endpoints, so (u, v) stays locally Gabriel
    g = PlaneGraph(
        [(0, 0), (10, 0), (4, 2), (-1, 1), (11, "3/2")],
        [(3, 4)],
        validate="full",
    )
    from proxigraph.geometry import in_diametral_circle
    from proxigraph.planegraph import visible

    assert in_diametral_circle(g.points[0], g.points[1], g.points[2])
    assert not visible(g, 2, 0)  # edge (3,4) blocks p=2 from u=0
    assert visible(g, 0, 1)
    assert (0, 1) in oracle_cgg(g)


def test_beta_endpoints():
    for seed in range(15):
        g = plane_graph(seed)
        assert oracle_cbeta(g, 1) == oracle_cgg(g)
        assert oracle_cbeta(g, 2) == oracle_crng(g)


def test_two_points():
    g = PlaneGraph([(0, 0), (1, 1)], [])
    assert oracle_crng(g) == {(0, 1)}


def test_min_constraints_figures():
    assert oracle_min_constraints(figure2(), "cmst").edges == ((0, 1), (1, 2))
    assert oracle_min_constraints(figure3(), "cmst").edges == ((1, 2),)


def test_min_constraints_guard():
    g = random_plane_graph(16, seed=1, m=14)
    with pytest.raises(OracleGuardError):
        oracle_min_constraints(g, "gabriel", guard=10)


def test_min_constraints_matches_fast_paths():
    for seed in range(25):
        g = plane_graph(seed)
        assert (
            oracle_min_constraints(g, "gabriel").edges
            == gabriel_constraints(g).edges
        )
        assert (
            oracle_min_constraints(g, "beta", beta="5/4").edges
            == beta_constraints(g, "5/4").edges
        )


def test_hierarchy_random_forests():
    for seed in range(30):
        f = forest(seed, 3, 25)
        rep = verify_hierarchy(f)
        assert rep.ok, (seed, rep.failures)


def test_hierarchy_classical_chain_without_edges():
    # MST within RNG within G_beta within GG within DT
    for seed in range(10):
        n = random.Random(seed).randint(5, 22)
        g = random_plane_graph(n, seed=seed, m=0)
        rep = verify_hierarchy(g)
        assert rep.ok, rep.failures


def test_hierarchy_single_edge():
    g = PlaneGraph([(0, 0), (5, 2)], [(0, 1)])
    assert verify_hierarchy(g).ok
    assert verify_constraint_hierarchy(g).ok


def test_constraint_hierarchy_random():
    for seed in range(30):
        f = forest(seed, 3, 12)
        rep = verify_constraint_hierarchy(f)
        assert rep.ok, (seed, rep.failures)


def test_constraint_hierarchy_fig6_strict():
    # uv sits in S_CGG but not in S_CDT: the chain is strict here
    g = PlaneGraph([(0, 0), (4, 0), (2, "9/10"), (2, -5)], [(0, 1)])
    from proxigraph.cdt import build_cdt, is_locally_delaunay

    tri = build_cdt(g)
    s_cdt = {e for e in g.edges if not is_locally_delaunay(tri, e)}
    assert s_cdt == set()
    assert gabriel_constraints(g).edges == ((0, 1),)
    assert verify_constraint_hierarchy(g).ok


def test_constraint_hierarchy_no_edges():
    g = random_plane_graph(12, seed=5, m=0)
    rep = verify_constraint_hierarchy(g)
    assert rep.ok
    assert gabriel_constraints(g).edges == ()
