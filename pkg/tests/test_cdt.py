import random

import pytest

from proxigraph.cdt import build_cdt, edge_weight_view, is_locally_delaunay
from proxigraph.errors import GeneralPositionError, GeometryError
from proxigraph.generators import figure2, random_plane_graph
from proxigraph.geometry import P, in_circumcircle
from proxigraph.planegraph import PlaneGraph, visibility_matrix

from conftest import forest


def test_square_delaunay_diagonal():
    # four points in convex position: the diagonal passing the incircle
    # test is the one in the unconstrained Delaunay triangulation
    g = PlaneGraph([(0, 0), (10, 0), (11, 9), (1, 10)], [])
    tri = build_cdt(g)
    assert len(tri.triangles) == 2
    diag = next(e for e in tri.edges() if not tri.is_hull_edge(e))
    pts = [P(p.x, p.y) for p in g.points]
    a, b = diag
    p, q = tri.apexes(diag)
    assert not in_circumcircle(pts[a], pts[b], pts[p], pts[q])


def test_figure2_cdt_is_unconstrained_dt():
    f = figure2()
    tri = build_cdt(f)
    assert len(tri.triangles) == 1
    assert sorted(tri.constrained) == [(0, 1), (1, 2)]
    # the same single triangle appears without any constraints
    bare = build_cdt(PlaneGraph(f.points, []))
    assert bare.triangles == tri.triangles


def test_input_triangulation_is_fixed_point():
    g = PlaneGraph(
        [(0, 0), (10, 0), (5, 8), (5, 3)],
        [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)],
    )
    tri = build_cdt(g)
    assert set(tri.edges()) == set(g.edges)


def test_every_unconstrained_edge_locally_delaunay():
    for seed in range(100):
        f = forest(seed, 3, 60)
        tri = build_cdt(f)
        for e in tri.edges():
            if tri.is_constrained(e):
                assert f.has_edge(*e)
            else:
                assert is_locally_delaunay(tri, e)


def test_euler_formula():
    for seed in range(30):
        f = forest(seed, 3, 50)
        tri = build_cdt(f)
        h = sum(1 for e in tri.edges() if tri.is_hull_edge(e))
        assert len(tri.triangles) == 2 * f.n - 2 - h
        assert len(tri.edges()) == 3 * f.n - 3 - h


def test_locally_delaunay_examples():
    # constrained edge uv with an apex inside the circumcircle of the
    # opposite triangle: not locally Delaunay, but kept by the constraint
    g = PlaneGraph([(0, 0), (4, 0), (2, "9/10"), (2, -3)], [(0, 1)])
    tri = build_cdt(g)
    assert tri.is_constrained((0, 1))
    assert not is_locally_delaunay(tri, (0, 1))
    for e in tri.edges():
        if e != (0, 1):
            assert is_locally_delaunay(tri, e)
    with pytest.raises(GeometryError):
        is_locally_delaunay(tri, (0, 99))


def test_visible_empty_circle_characterization():
    # for each non-input CDT edge, some adjacent-triangle circumcircle
    # contains no vertex visible to both endpoints
    for seed in range(12):
        g = random_plane_graph(random.Random(seed).randint(4, 12), seed=seed, m=5)
        tri = build_cdt(g)
        adj = visibility_matrix(g)
        pts = [P(p.x, p.y) for p in g.points]
        for a, b in tri.edges():
            if g.has_edge(a, b):
                continue
            ok = False
            for apex in tri.apexes((a, b)):
                empty = True
                for w in range(g.n):
                    if w in (a, b, apex):
                        continue
                    if (
                        in_circumcircle(pts[a], pts[b], pts[apex], pts[w])
                        and a in adj[w]
                        and b in adj[w]
                    ):
                        empty = False
                        break
                if empty:
                    ok = True
                    break
            assert ok, (seed, (a, b))


def test_edge_weight_view_modes():
    g = PlaneGraph([(0, 0), (10, 0), (5, 8)], [(0, 1)])
    tri = build_cdt(g)
    euc = edge_weight_view(tri, "euclidean")
    assert not any(e.zero for e in euc.edges)
    zon = edge_weight_view(tri, "zero-on-constraints")
    zeros = {(e.u, e.v) for e in zon.edges if e.zero}
    assert zeros == {(0, 1)}
    bare = build_cdt(PlaneGraph([(0, 0), (10, 0), (5, 8)], []))
    assert [
        (e.u, e.v, e.zero) for e in edge_weight_view(bare, "euclidean").edges
    ] == [(e.u, e.v, e.zero) for e in edge_weight_view(bare, "zero-on-constraints").edges]
    with pytest.raises(ValueError):
        edge_weight_view(tri, "bogus")


def test_degenerate_inputs_rejected():
    g = PlaneGraph([(0, 0), (1, 1), (2, 2), (0, 5)], [], validate="none")
    with pytest.raises(GeneralPositionError):
        build_cdt(g)
    # four cocircular points force a zero incircle determinant
    g = PlaneGraph([(1, 0), (0, 1), (-1, 0), (0, -1)], [], validate="none")
    with pytest.raises(GeneralPositionError):
        build_cdt(g)


def test_small_inputs():
    two = build_cdt(PlaneGraph([(0, 0), (3, 4)], []))
    assert two.edges() == [(0, 1)]
    one = build_cdt(PlaneGraph([(0, 0)], []))
    assert one.edges() == []


def test_deterministic_across_runs():
    f = forest(7, 10, 40)
    a = build_cdt(f)
    b = build_cdt(f)
    assert a.triangles == b.triangles
    assert a.neighbors == b.neighbors
    assert a.constrained == b.constrained


def test_unconstrained_cdt_is_globally_delaunay():
    # with no constraints, every triangle's circumcircle is empty of all
    # other vertices (the global Delaunay property)
    for seed in range(15):
        n = random.Random(seed).randint(4, 40)
        g = random_plane_graph(n, seed=seed, m=0)
        tri = build_cdt(g)
        pts = [P(p.x, p.y) for p in g.points]
        for a, b, c in tri.triangles:
            for w in range(n):
                if w in (a, b, c):
                    continue
                assert not in_circumcircle(pts[a], pts[b], pts[c], pts[w])
