"""Deterministic instance generators: canonical fixtures, the worst-case
zigzag, and seeded random plane forests/graphs."""

from __future__ import annotations

import random
from fractions import Fraction

from .cdt import build_cdt
from .errors import GeneralPositionError
from .geometry import segments_cross_sign
from .planegraph import PlaneGraph

GRID = 1 << 26  # random coordinates stay float-exact and filter-friendly


def figure2() -> PlaneGraph:
    """Three-vertex tent: the CDT needs no constraints but the constrained
    MST needs both input edges."""
    points = [(0, 0), (Fraction(1, 2), 2), (1, 0)]
    return PlaneGraph(points, [(0, 1), (1, 2)], validate="full")


def figure3() -> PlaneGraph:
    """Four-vertex zigzag path where every path edge is longer than the
    absent v1-v4 edge; forcing only the middle edge suffices because it
    blocks v1-v4 in the visibility graph."""
    points = [
        (0, 0),
        (Fraction(-1, 10), Fraction(11, 10)),
        (Fraction(11, 10), Fraction(-23, 20)),
        (1, 0),
    ]
    return PlaneGraph(points, [(0, 1), (1, 2), (2, 3)], validate="full")


def zigzag(n: int) -> PlaneGraph:
    """Worst case for the constrained MST: a zigzag path between two near
    rows whose Euclidean MST shares only row edges, so all n-1 path edges
    become constraints.  A tiny deterministic jitter keeps the rows out of
    collinearity."""
    if n < 2:
        raise ValueError("zigzag needs n >= 2")
    scale = 100_000
    rng = random.Random(0x5A1A)
    points = []
    for i in range(n):
        y = 2 * scale * (i % 2) + rng.randrange(97)
        points.append((i * scale, y))
    edges = [(i, i + 1) for i in range(n - 1)]
    return PlaneGraph(points, edges, validate="edges")


def _random_points(n, rng, grid=GRID):
    pts = set()
    while len(pts) < n:
        pts.add((rng.randrange(grid), rng.randrange(grid)))
    return sorted(pts)


def random_forest(n, seed, m=None, grid=GRID) -> PlaneGraph:
    """Random plane forest: points on a large integer grid, edges drawn as
    an acyclic subset of the Delaunay triangulation (plane by
    construction).  Works at any scale."""
    rng = random.Random(seed)
    for attempt in range(8):
        pts = _random_points(n, rng, grid)
        if m is None:
            target = rng.randint(max(0, n // 3), max(0, n - 1))
        else:
            target = m
        if n < 2 or target == 0:
            return PlaneGraph(pts, [], validate="none")
        if n == 2:
            return PlaneGraph(pts, [(0, 1)], validate="none")
        base = PlaneGraph(pts, [], validate="none")
        try:
            tri = build_cdt(base)
        except GeneralPositionError:
            continue  # resample; astronomically rare on the big grid
        cand = tri.edges()
        rng.shuffle(cand)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        chosen = []
        for a, b in cand:
            if len(chosen) == target:
                break
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                chosen.append((a, b))
        return PlaneGraph(pts, sorted(chosen), validate="none")
    raise GeneralPositionError("degenerate", (), "could not sample a forest")


def random_plane_graph(n, seed, m=None, grid=GRID, forest=False) -> PlaneGraph:
    """Random plane graph by rejection sampling over arbitrary vertex
    pairs (desk scale): accept an edge if it crosses nothing accepted so
    far (and keeps the graph acyclic when forest=True)."""
    rng = random.Random(seed)
    pts = _random_points(n, rng, grid)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if m is None:
        m = rng.randint(max(0, n // 3), max(1, (3 * n) // 2)) if n > 1 else 0
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    tries = 40 * (m + 1)
    while len(chosen) < m and tries > 0:
        tries -= 1
        a, b = rng.sample(range(n), 2)
        if a > b:
            a, b = b, a
        if (a, b) in chosen:
            continue
        if forest and find(a) == find(b):
            continue
        if any(
            segments_cross_sign(
                xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]
            )
            for c, d in chosen
            if a not in (c, d) and b not in (c, d)
        ):
            continue
        chosen.append((a, b))
        if forest:
            parent[find(a)] = find(b)
    return PlaneGraph(pts, sorted(chosen), validate="none")


def random_visible_forest(n, seed, m=None, grid=GRID) -> PlaneGraph:
    """Rejection-sampled plane forest; edges are not restricted to the
    Delaunay triangulation, which exercises the extraction paths harder."""
    return random_plane_graph(n, seed, m=m, grid=grid, forest=True)
