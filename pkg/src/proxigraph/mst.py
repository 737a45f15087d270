"""Deterministic minimum spanning trees over weighted graphs.

Kruskal with union-find under the canonical total order (zero-weight
constraint edges first, then exact squared length, ties by lexicographic
endpoint pair).  The order is total, so every MST here is unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cdt import Triangulation, build_cdt, edge_weight_view
from .errors import DisconnectedError, GeometryError
from .planegraph import PlaneGraph, WeightedEdge, WeightedGraph, cvg, evg, is_forest


@dataclass
class SpanningTree:
    n: int
    edges: list           # WeightedEdge, in insertion (Kruskal) order
    parent: list          # parent vertex per vertex, -1 at the root
    total_weight: float   # sum of Euclidean lengths, for reporting only

    def edge_pairs(self):
        return {(e.u, e.v) for e in self.edges}

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj

    def path_vertices(self, u, v):
        """Vertex sequence of the tree path from u to v."""
        adj = self.adjacency()
        prev = {u: -1}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        if v not in prev:
            raise DisconnectedError(f"no tree path {u}..{v}")
        path = [v]
        while path[-1] != u:
            path.append(prev[path[-1]])
        path.reverse()
        return path

    def path_edges(self, u, v):
        vs = self.path_vertices(u, v)
        return [
            (vs[i], vs[i + 1]) if vs[i] < vs[i + 1] else (vs[i + 1], vs[i])
            for i in range(len(vs) - 1)
        ]


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _kruskal(n, weighted_edges):
    uf = _UnionFind(n)
    picked = []
    for e in sorted(weighted_edges, key=lambda e: e.key()):
        if uf.union(e.u, e.v):
            picked.append(e)
            if len(picked) == n - 1:
                break
    if len(picked) != max(n - 1, 0):
        raise DisconnectedError("graph is not connected")
    parent = [-1] * n
    adj = [[] for _ in range(n)]
    for e in picked:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    if n:
        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)
    total = math.fsum(0.0 if e.zero else math.sqrt(e.sqlen) for e in picked)
    return SpanningTree(n, picked, parent, total)


def mst(g: WeightedGraph) -> SpanningTree:
    """The unique minimum spanning tree of a connected weighted graph."""
    if g.kind == "unweighted":
        raise ValueError("mst needs a weighted graph (evg/cvg/edge view)")
    return _kruskal(g.n, g.edges)


def mst_of_cdt(t: Triangulation) -> SpanningTree:
    """Euclidean MST computed on the O(n)-size CDT edge set; equals
    mst(evg(F)) for plane forests because MST(EVG(F)) is a CDT subgraph."""
    return _kruskal(t.n, edge_weight_view(t, "euclidean").edges)


def _tree_from_pairs(g, pairs, zero_set):
    n = g.n
    picked = [
        WeightedEdge(a, b, g.edge_sqlen((a, b)), (a, b) in zero_set)
        for a, b in pairs
    ]
    parent = [-1] * n
    adj = [[] for _ in range(n)]
    for e in picked:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    total = math.fsum(0.0 if e.zero else math.sqrt(e.sqlen) for e in picked)
    return SpanningTree(n, picked, parent, total)


def spanning_trees_of_cdt(t: Triangulation):
    """(MST, constrained MST) of the CDT edge set, on integer-frame keys.

    One sort of the O(n) edge records serves both Kruskal passes; this is
    the hot path of the constraint extraction pipeline."""
    g = t.graph
    n = g.n
    xs, ys = g.xs, g.ys
    recs = []
    for a, b in t.edge_tri.keys():
        dx = xs[a] - xs[b]
        dy = ys[a] - ys[b]
        recs.append((dx * dx + dy * dy, a, b))
    recs.sort()

    def run(seq):
        parent = list(range(n))
        pairs = []
        for _, a, b in seq:
            ra, rb = a, b
            while parent[ra] != ra:
                parent[ra] = parent[parent[ra]]
                ra = parent[ra]
            while parent[rb] != rb:
                parent[rb] = parent[parent[rb]]
                rb = parent[rb]
            if ra != rb:
                parent[ra] = rb
                pairs.append((a, b))
                if len(pairs) == n - 1:
                    break
        if len(pairs) != max(n - 1, 0):
            raise DisconnectedError("CDT is not connected")
        return pairs

    t_prime = _tree_from_pairs(g, run(recs), frozenset())
    zero_set = frozenset(g.edges)
    zeros = [(0, a, b) for a, b in sorted(zero_set)]
    rest = (r for r in recs if (r[1], r[2]) not in zero_set)
    from itertools import chain

    c_tree = _tree_from_pairs(g, run(chain(zeros, rest)), zero_set)
    return t_prime, c_tree


def cmst(f: PlaneGraph, backend=None) -> SpanningTree:
    """Constrained MST of a plane forest: the MST of the CDT with input
    edges weighted zero.  Always contains the input forest."""
    if not is_forest(f):
        raise GeometryError("cmst: input is not a forest")
    t = build_cdt(f, backend=backend)
    if f.n < 3:
        # degenerate: the CDT edge list is the pair itself
        g = WeightedGraph(
            f.n,
            [
                _edge_of(f, e)
                for e in sorted(t.edge_tri.keys())
            ],
            "constrained",
        )
        return _kruskal(f.n, g.edges)
    return _kruskal(f.n, edge_weight_view(t, "zero-on-constraints").edges)


def _edge_of(f, e):
    return WeightedEdge(e[0], e[1], f.edge_sqlen(e), f.has_edge(*e))


def cmst_of_subset(f: PlaneGraph, subset, backend=None) -> SpanningTree:
    """CMST of (V, S) for a subset S of the input edges; used by
    containment checks."""
    sub = PlaneGraph(f.points, sorted(subset), validate="none")
    return cmst(sub, backend=backend)


def mst_visibility(f: PlaneGraph) -> SpanningTree:
    """Oracle-grade Euclidean MST over the full visibility graph."""
    return mst(evg(f))


def cmst_visibility(f: PlaneGraph) -> SpanningTree:
    """Oracle-grade constrained MST over the full visibility graph."""
    return mst(cvg(f))
