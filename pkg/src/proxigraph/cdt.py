"""Constrained Delaunay triangulations over plane graphs.

Construction runs in the selected kernel backend (incremental Delaunay with
Hilbert-ordered insertion, then constraint segments by channel
retriangulation); the result is canonically renumbered so both backends and
repeated runs produce identical structures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import backend as _backend
from .errors import GeometryError
from .geometry import incircle_det_sign, orient_sign
from .planegraph import PlaneGraph, WeightedEdge, WeightedGraph


@dataclass
class Triangulation:
    """Triangle mesh with adjacency and per-edge constrained flags.

    triangles[t] is a ccw vertex triple; neighbors[t][s] is the triangle
    across the edge opposite slot s (-1 on the hull).  edge_tri maps each
    undirected edge (a < b) to its one or two (triangle, slot) incidences.
    """

    graph: PlaneGraph
    triangles: tuple
    neighbors: tuple
    constrained: frozenset
    edge_tri: dict = field(repr=False)

    @property
    def n(self):
        return self.graph.n

    def edges(self):
        return sorted(self.edge_tri.keys())

    def contains_edge(self, e):
        a, b = e
        return ((a, b) if a < b else (b, a)) in self.edge_tri

    def is_constrained(self, e):
        a, b = e
        return ((a, b) if a < b else (b, a)) in self.constrained

    def apexes(self, e):
        """Vertices opposite edge e in its one or two adjacent triangles."""
        a, b = e
        key = (a, b) if a < b else (b, a)
        return tuple(self.triangles[t][s] for t, s in self.edge_tri[key])

    def is_hull_edge(self, e):
        a, b = e
        key = (a, b) if a < b else (b, a)
        return len(self.edge_tri[key]) == 1

    def triangle_across(self, e, side):
        """Triangle id adjacent to e whose apex lies on the given side of
        the directed line a->b (a < b), or None."""
        a, b = e if e[0] < e[1] else (e[1], e[0])
        xs, ys = self.graph.xs, self.graph.ys
        for t, s in self.edge_tri[(a, b)]:
            apex = self.triangles[t][s]
            if orient_sign(xs[a], ys[a], xs[b], ys[b], xs[apex], ys[apex]) == side:
                return t
        return None

    def triangle_edges(self, t):
        """The three undirected edges of triangle t."""
        a, b, c = self.triangles[t]
        return (
            (b, c) if b < c else (c, b),
            (c, a) if c < a else (a, c),
            (a, b) if a < b else (b, a),
        )

    def validate(self):
        """Structural invariants: ccw triangles, mutual adjacency, every
        input edge present and constrained.  Raises on violation."""
        xs, ys = self.graph.xs, self.graph.ys
        for t, (a, b, c) in enumerate(self.triangles):
            if orient_sign(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]) <= 0:
                raise GeometryError(f"triangle {t} not ccw")
            for s in range(3):
                nb = self.neighbors[t][s]
                if nb != -1 and t not in self.neighbors[nb]:
                    raise GeometryError(f"adjacency not mutual at {t}/{nb}")
        for e in self.graph.edges:
            if not self.contains_edge(e):
                raise GeometryError(f"input edge {e} missing from CDT")
            if not self.is_constrained(e):
                raise GeometryError(f"input edge {e} not flagged constrained")
        for e in self.constrained:
            if e not in self.graph._edge_set:
                raise GeometryError(f"spurious constrained edge {e}")


def _canonicalize(tris, nbrs, cons):
    """Rotate each triangle to put its smallest vertex first, then sort
    triangles by vertex triple and remap neighbor ids accordingly."""
    count = len(tris)
    rot_v = []
    rot_n = []
    rot_c = []
    for t in range(count):
        a, b, c = tris[t]
        if a < b and a < c:
            rot_v.append((a, b, c))
            rot_n.append(nbrs[t])
            rot_c.append(cons[t])
        elif b < c:
            n0, n1, n2 = nbrs[t]
            f0, f1, f2 = cons[t]
            rot_v.append((b, c, a))
            rot_n.append((n1, n2, n0))
            rot_c.append((f1, f2, f0))
        else:
            n0, n1, n2 = nbrs[t]
            f0, f1, f2 = cons[t]
            rot_v.append((c, a, b))
            rot_n.append((n2, n0, n1))
            rot_c.append((f2, f0, f1))
    order = sorted(range(count), key=rot_v.__getitem__)
    remap = [0] * (count + 1)
    remap[-1] = -1
    for new, old in enumerate(order):
        remap[old] = new
    out_t = tuple(rot_v[old] for old in order)
    out_c = tuple(rot_c[old] for old in order)
    out_n = []
    for old in order:
        n0, n1, n2 = rot_n[old]
        out_n.append((remap[n0], remap[n1], remap[n2]))
    return out_t, tuple(out_n), out_c


def build_cdt(g: PlaneGraph, backend=None) -> Triangulation:
    """The unique constrained Delaunay triangulation of a plane graph in
    general position: every edge is an input edge or locally Delaunay.
    Degenerate inputs (collinear triples, cocircular quadruples actually
    touched by the construction) are rejected."""
    kern = backend or _backend.get_backend()
    if g.n < 3:
        edge_tri = {}
        if g.n == 2:
            edge_tri[(0, 1)] = ()
        for e in g.edges:
            edge_tri[e] = ()
        return Triangulation(g, (), (), frozenset(g.edges), edge_tri)
    tris, nbrs, cons = kern.triangulate(g.xs, g.ys, g.edges)
    tris, nbrs, cons = _canonicalize(tris, nbrs, cons)
    edge_tri = {}
    constrained = set()
    setdefault = edge_tri.setdefault
    for t, (a, b, c) in enumerate(tris):
        flags = cons[t]
        for s, (u, v) in enumerate(((b, c), (c, a), (a, b))):
            key = (u, v) if u < v else (v, u)
            setdefault(key, []).append((t, s))
            if flags[s]:
                constrained.add(key)
    tri = Triangulation(g, tris, nbrs, frozenset(constrained), edge_tri)
    tri.validate()
    return tri


def is_locally_delaunay(t: Triangulation, e) -> bool:
    """Locally-Delaunay test for an edge of the triangulation: hull edges
    pass by convention, interior edges run the empty-circumcircle test on
    their two adjacent triangle apexes."""
    a, b = e
    if a > b:
        a, b = b, a
    if (a, b) not in t.edge_tri:
        raise GeometryError(f"edge ({a}, {b}) not in triangulation")
    apexes = t.apexes((a, b))
    if len(apexes) <= 1:
        return True
    p, q = apexes
    xs, ys = t.graph.xs, t.graph.ys
    s = orient_sign(xs[a], ys[a], xs[b], ys[b], xs[p], ys[p])
    det = incircle_det_sign(xs[a], ys[a], xs[b], ys[b], xs[p], ys[p], xs[q], ys[q])
    return s * det <= 0


def edge_weight_view(t: Triangulation, mode: str) -> WeightedGraph:
    """Weighted edge list over the triangulation's edges.

    mode 'euclidean' weighs everything by length; 'zero-on-constraints'
    gives constrained edges weight zero (the view driving the constrained
    MST).
    """
    if mode not in ("euclidean", "zero-on-constraints"):
        raise ValueError(f"unknown mode {mode!r}")
    zero_on = mode == "zero-on-constraints"
    g = t.graph
    edges = [
        WeightedEdge(a, b, g.edge_sqlen((a, b)), zero_on and t.is_constrained((a, b)))
        for a, b in t.edges()
    ]
    kind = "constrained" if zero_on else "euclidean"
    return WeightedGraph(g.n, edges, kind)
