"""Validated plane graphs and the weighted visibility graphs built on them.

A PlaneGraph holds exact coordinates (int or Fraction).  On construction it
also derives a canonical integer coordinate frame (all coordinates times the
lcm of their denominators); every predicate in the package is scale
invariant, so algorithms run on the integer frame while I/O keeps the
original values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import GeneralPositionError, GeometryError, PlanarityError
from .geometry import (
    Point,
    as_coord,
    check_general_position,
    point_in_open_segment_sign,
    segments_cross_sign,
    sq_dist,
)


class PlaneGraph:
    """Plane straight-line graph: points in general position plus a set of
    pairwise non-crossing edges (min vertex id first, input order kept)."""

    __slots__ = ("points", "edges", "xs", "ys", "scale", "_edge_set", "gp_checked")

    def __init__(self, points, edges=(), validate="edges"):
        pts = []
        for i, p in enumerate(points):
            if isinstance(p, Point):
                x, y = p.x, p.y
            else:
                x, y = p
            pts.append(Point(as_coord(x), as_coord(y), i))
        self.points = tuple(pts)
        seen = set()
        norm = []
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise GeometryError(f"self-loop at vertex {a}")
            if not (0 <= a < len(pts) and 0 <= b < len(pts)):
                raise GeometryError(f"edge ({a}, {b}) out of range")
            if a > b:
                a, b = b, a
            if (a, b) in seen:
                raise GeometryError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
            norm.append((a, b))
        self.edges = tuple(norm)
        self._edge_set = seen
        self._scale_coords()
        self.gp_checked = False
        if validate not in ("none", "edges", "full"):
            raise ValueError(f"unknown validation level {validate!r}")
        if validate in ("edges", "full"):
            self._validate_planarity()
        if validate == "full":
            report = check_general_position(self.points)
            if not report:
                raise GeneralPositionError(report.kind, report.indices)
            self.gp_checked = True

    def _scale_coords(self):
        denom = 1
        for p in self.points:
            d = getattr(p.x, "denominator", 1)
            denom = denom * d // math.gcd(denom, d)
            d = getattr(p.y, "denominator", 1)
            denom = denom * d // math.gcd(denom, d)
        self.scale = denom
        self.xs = [int(p.x * denom) for p in self.points]
        self.ys = [int(p.y * denom) for p in self.points]
        if len({(x, y) for x, y in zip(self.xs, self.ys)}) != len(self.points):
            raise GeometryError("duplicate points")

    def _validate_planarity(self):
        """O(m^2) edge-pair crossing test plus vertex-on-edge scan."""
        xs, ys = self.xs, self.ys
        m = len(self.edges)
        for i in range(m):
            a, b = self.edges[i]
            for j in range(i + 1, m):
                c, d = self.edges[j]
                if a in (c, d) or b in (c, d):
                    continue
                if segments_cross_sign(
                    xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]
                ):
                    raise PlanarityError(
                        f"edges ({a}, {b}) and ({c}, {d}) cross"
                    )
            for v in range(len(self.points)):
                if v in (a, b):
                    continue
                if point_in_open_segment_sign(
                    xs[v], ys[v], xs[a], ys[a], xs[b], ys[b]
                ):
                    raise PlanarityError(f"vertex {v} lies inside edge ({a}, {b})")

    # -- basic queries ------------------------------------------------------

    @property
    def n(self):
        return len(self.points)

    @property
    def m(self):
        return len(self.edges)

    def has_edge(self, a, b):
        return ((a, b) if a < b else (b, a)) in self._edge_set

    def edge_sqlen(self, e):
        """Exact squared length in the original coordinate frame."""
        a, b = self.points[e[0]], self.points[e[1]]
        return sq_dist(a.x, a.y, b.x, b.y)

    def int_edge_sqlen(self, e):
        """Exact squared length in the canonical integer frame."""
        a, b = e
        return sq_dist(self.xs[a], self.ys[a], self.xs[b], self.ys[b])

    def float_exact(self):
        """True iff the integer frame fits exactly into float64."""
        bound = 1 << 53
        return all(-bound <= v <= bound for v in self.xs) and all(
            -bound <= v <= bound for v in self.ys
        )

    def __eq__(self, other):
        return (
            isinstance(other, PlaneGraph)
            and [(p.x, p.y) for p in self.points]
            == [(p.x, p.y) for p in other.points]
            and self.edges == other.edges
        )

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, m={self.m})"


def is_forest(g: PlaneGraph) -> bool:
    """True iff the edge set is acyclic."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


# ---------------------------------------------------------------------------
# Visibility
# ---------------------------------------------------------------------------

def visible(g: PlaneGraph, u: int, v: int) -> bool:
    """True iff u and v see each other with respect to the edges of g:
    (u, v) is an edge, or the open segment uv crosses no edge interior and
    contains no vertex."""
    if u == v:
        raise GeometryError("visible: u == v")
    if g.has_edge(u, v):
        return True
    xs, ys = g.xs, g.ys
    ux, uy, vx, vy = xs[u], ys[u], xs[v], ys[v]
    for a, b in g.edges:
        if u in (a, b) or v in (a, b):
            continue
        if segments_cross_sign(ux, uy, vx, vy, xs[a], ys[a], xs[b], ys[b]):
            return False
    for w in range(g.n):
        if w in (u, v):
            continue
        if point_in_open_segment_sign(xs[w], ys[w], ux, uy, vx, vy):
            return False
    return True


def visibility_matrix(g: PlaneGraph):
    """Adjacency sets of the visibility graph, computed pairwise."""
    n = g.n
    adj = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if visible(g, u, v):
                adj[u].add(v)
                adj[v].add(u)
    return adj


# ---------------------------------------------------------------------------
# Weighted graphs
# ---------------------------------------------------------------------------

class WeightedEdge(NamedTuple):
    u: int
    v: int
    sqlen: object  # exact squared Euclidean length (original frame)
    zero: bool     # constraint edges carry weight zero

    def key(self):
        """Total-order sort key: zero weights first, then squared length,
        ties by the (min, max) endpoint pair."""
        if self.zero:
            return (0, 0, self.u, self.v)
        return (1, self.sqlen, self.u, self.v)


@dataclass
class WeightedGraph:
    n: int
    edges: list
    kind: str  # "unweighted" | "euclidean" | "constrained"

    def edge_pairs(self):
        return {(e.u, e.v) for e in self.edges}


def visibility_graph(g: PlaneGraph) -> WeightedGraph:
    """Unweighted visibility graph; the input is always a subgraph."""
    adj = visibility_matrix(g)
    edges = []
    for u in range(g.n):
        for v in sorted(adj[u]):
            if v > u:
                edges.append(WeightedEdge(u, v, g.edge_sqlen((u, v)), False))
    return WeightedGraph(g.n, edges, "unweighted")


def evg(g: PlaneGraph) -> WeightedGraph:
    """Visibility graph with every edge weighted by Euclidean length."""
    wg = visibility_graph(g)
    return WeightedGraph(wg.n, wg.edges, "euclidean")


def cvg(g: PlaneGraph) -> WeightedGraph:
    """Visibility graph where input edges weigh zero, the rest Euclidean."""
    wg = visibility_graph(g)
    edges = [
        WeightedEdge(e.u, e.v, e.sqlen, g.has_edge(e.u, e.v)) for e in wg.edges
    ]
    return WeightedGraph(wg.n, edges, "constrained")
