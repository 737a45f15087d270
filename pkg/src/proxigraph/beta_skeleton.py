"""Minimum constraint set for constrained beta-skeletons, 1 <= beta <= 2.

Every vertex traces elimination paths through the CDT: starting from the
edge opposite the vertex in an adjacent triangle, the path appends edges
whose beta-neighbourhood contains the vertex, crossing one triangle per
step, and stops right after appending a non-locally-Delaunay edge.  Paths
never split, so they merge into a forest; contracting away nodes of
non-input edges leaves exactly the edges that some vertex eliminates, and
those are the constraints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cdt import Triangulation, build_cdt, is_locally_delaunay
from .constraints import ConstraintSet
from .errors import GeometryError
from .geometry import BetaParam, in_beta_disks, orient_sign
from .planegraph import PlaneGraph

_UNSET = object()


@dataclass
class EliminationPath:
    """Ordered edge list traced by one vertex from one starting triangle."""

    origin: int
    edges: list
    reason: str  # left-neighbourhood | hit-non-locally-delaunay | no-continuation


@dataclass
class ForestNode:
    edge: tuple
    side: int
    parent: object = _UNSET     # key of the next node, or None at a chain end
    starts: list = field(default_factory=list)
    ends: list = field(default_factory=list)

    def resolved_parent(self):
        return None if self.parent is _UNSET else self.parent


@dataclass
class Leaf:
    vertex: int
    start: tuple
    end: tuple = None


@dataclass
class EliminationForest:
    """Merged elimination paths over a CDT; nodes are keyed by
    (edge, side of the originating vertex)."""

    nodes: dict
    leaves: list
    beta: BetaParam
    cdt: Triangulation
    touches: int = 0
    contracted: bool = False

    def path_of(self, leaf):
        """Replay the node chain of one leaf, start to end inclusive."""
        out = []
        k = leaf.start
        while True:
            node = self.nodes[k]
            out.append(node.edge)
            if k == leaf.end:
                return out
            k = node.parent
            if k is _UNSET or k is None:
                raise AssertionError("leaf chain broke before its end node")


class _Walker:
    """Shared stepping logic for standalone paths and the forest builder."""

    def __init__(self, cdt, beta):
        self.cdt = cdt
        self.beta = BetaParam.of(beta)
        self.xs = cdt.graph.xs
        self.ys = cdt.graph.ys
        self._ld = {}

    def in_u(self, e, p):
        a, b = e
        xs, ys = self.xs, self.ys
        return in_beta_disks(
            xs[a], ys[a], xs[b], ys[b], xs[p], ys[p], self.beta.num, self.beta.den
        )

    def side_of(self, e, p):
        a, b = e
        s = orient_sign(
            self.xs[a], self.ys[a], self.xs[b], self.ys[b], self.xs[p], self.ys[p]
        )
        if s == 0:
            raise GeometryError(f"vertex {p} collinear with edge {e}")
        return s

    def locally_delaunay(self, e):
        v = self._ld.get(e)
        if v is None:
            v = self._ld[e] = is_locally_delaunay(self.cdt, e)
        return v

    def step(self, edge, side, p):
        """Continuation from a path node: ('next', (edge', side')) or a
        terminal status ('nonld' | 'hull' | 'dead')."""
        if not self.locally_delaunay(edge):
            return "nonld", None
        t2 = self.cdt.triangle_across(edge, -side)
        if t2 is None:
            return "hull", None
        cands = [
            e2
            for e2 in self.cdt.triangle_edges(t2)
            if e2 != edge and self.in_u(e2, p)
        ]
        if len(cands) > 1:
            raise AssertionError(
                "vertex inside the beta-neighbourhood of all three triangle edges"
            )
        if not cands:
            return "dead", None
        e2 = cands[0]
        return "next", (e2[0], e2[1], self.side_of(e2, p))


def _start_edge(cdt, p, t):
    verts = cdt.triangles[t]
    if p not in verts:
        raise GeometryError(f"triangle {t} does not contain vertex {p}")
    return cdt.triangle_edges(t)[verts.index(p)]


def elimination_path(p, t, beta, cdt: Triangulation) -> EliminationPath:
    """Elimination path of vertex p starting from adjacent triangle t."""
    walker = _Walker(cdt, beta)
    edge = _start_edge(cdt, p, t)
    if not walker.in_u(edge, p):
        return EliminationPath(p, [], "left-neighbourhood")
    side = walker.side_of(edge, p)
    edges = []
    guard = 2 * len(cdt.edge_tri) + 8
    while guard > 0:
        guard -= 1
        edges.append(edge)
        status, nxt = walker.step(edge, side, p)
        if status == "nonld":
            return EliminationPath(p, edges, "hit-non-locally-delaunay")
        if status in ("hull", "dead"):
            return EliminationPath(p, edges, "no-continuation")
        edge, side = (nxt[0], nxt[1]), nxt[2]
    raise AssertionError("elimination path did not terminate")


def build_elimination_forest(cdt: Triangulation, beta) -> EliminationForest:
    """Merged elimination paths of every (vertex, adjacent triangle) pair.

    Nodes carry the vertices whose paths start and end there; a runtime
    assertion enforces that paths arriving at a node via the same triangle
    continue to the same next node (they never split).
    """
    walker = _Walker(cdt, beta)
    nodes = {}
    leaves = []
    touches = 0
    for t in range(len(cdt.triangles)):
        verts = cdt.triangles[t]
        tedges = cdt.triangle_edges(t)
        for s in range(3):
            p = verts[s]
            edge = tedges[s]
            if not walker.in_u(edge, p):
                continue
            side = walker.side_of(edge, p)
            key = (edge[0], edge[1], side)
            leaf = Leaf(p, key)
            cur = key
            guard = 2 * len(cdt.edge_tri) + 8
            while guard > 0:
                guard -= 1
                touches += 1
                node = nodes.get(cur)
                if node is None:
                    node = nodes[cur] = ForestNode((cur[0], cur[1]), cur[2])
                status, nxt = walker.step(node.edge, node.side, p)
                if status != "next":
                    node.ends.append(p)
                    leaf.end = cur
                    break
                if node.parent is _UNSET:
                    node.parent = nxt
                elif node.parent != nxt:
                    raise AssertionError("elimination paths split")
                cur = nxt
            else:
                raise AssertionError("elimination path did not terminate")
            nodes[key].starts.append(p)
            leaves.append(leaf)
    return EliminationForest(nodes, leaves, BetaParam.of(beta), cdt, touches)


def contract_forest(forest: EliminationForest, e_set) -> EliminationForest:
    """Contract away nodes of edges outside e_set: children re-attach to
    the nearest surviving ancestor, and a leaf survives only if its path
    reaches an e_set edge, re-attaching there."""
    if forest.contracted:
        raise ValueError("forest already contracted")
    keep = {tuple(sorted(e)) for e in e_set}
    first_kept = {}  # key -> surviving node key at-or-above, or None

    def resolve(key):
        chain = []
        k = key
        while k is not None and k not in first_kept:
            node = forest.nodes[k]
            if node.edge in keep:
                first_kept[k] = k
                break
            chain.append(k)
            k = node.resolved_parent()
        hit = first_kept.get(k) if k is not None else None
        for c in chain:
            first_kept[c] = hit
        return first_kept[key]

    nodes = {}
    for key, node in forest.nodes.items():
        if node.edge not in keep:
            continue
        up = node.resolved_parent()
        parent = resolve(up) if up is not None else None
        nodes[key] = ForestNode(node.edge, node.side, parent)
    leaves = []
    for leaf in forest.leaves:
        k = leaf.start
        while True:
            node = forest.nodes[k]
            if node.edge in keep:
                new_leaf = Leaf(leaf.vertex, k, leaf.end)
                nodes[k].starts.append(leaf.vertex)
                leaves.append(new_leaf)
                break
            if k == leaf.end:
                break  # fully contracted path: leaf is deleted
            k = node.parent
            if k is _UNSET or k is None:
                raise AssertionError("leaf chain broke during contraction")
    return EliminationForest(
        nodes, leaves, forest.beta, forest.cdt, forest.touches, contracted=True
    )


def beta_constraints(i: PlaneGraph, beta, backend=None) -> ConstraintSet:
    """Minimum constraint set for the constrained beta-skeleton: the input
    edges whose contracted-forest node has a leaf attached, equivalently the
    input edges some vertex eliminates."""
    beta = BetaParam.of(beta)
    tri = build_cdt(i, backend=backend)
    if i.n < 3:
        return ConstraintSet.of((), "beta", beta)
    forest = build_elimination_forest(tri, beta)
    contracted = contract_forest(forest, i.edges)
    s = {node.edge for node in contracted.nodes.values() if node.starts}
    return ConstraintSet.of(s, "beta", beta)


def segment_sqdist(px, py, ax, ay, bx, by):
    """Exact squared distance from point p to segment ab (a Fraction)."""
    dx = bx - ax
    dy = by - ay
    tn = (px - ax) * dx + (py - ay) * dy
    td = dx * dx + dy * dy
    if td == 0:
        raise GeometryError("degenerate segment")
    if tn <= 0:
        return Fraction((px - ax) ** 2 + (py - ay) ** 2)
    if tn >= td:
        return Fraction((px - bx) ** 2 + (py - by) ** 2)
    cross = (px - ax) * dy - (py - ay) * dx
    return Fraction(cross * cross, td)


def closest_eliminator(i: PlaneGraph, e, beta, adjacency=None):
    """Definition-level search: the vertex closest to segment e that lies in
    the beta-neighbourhood of e and is visible to both endpoints, or None.
    Desk-scale oracle backing the correctness tests."""
    from .planegraph import visible

    beta = BetaParam.of(beta)
    a, b = e if e[0] < e[1] else (e[1], e[0])
    xs, ys = i.xs, i.ys
    best = None
    best_d = None
    for p in range(i.n):
        if p in (a, b):
            continue
        if not in_beta_disks(
            xs[a], ys[a], xs[b], ys[b], xs[p], ys[p], beta.num, beta.den
        ):
            continue
        if adjacency is not None:
            if a not in adjacency[p] or b not in adjacency[p]:
                continue
        elif not (visible(i, p, a) and visible(i, p, b)):
            continue
        d = segment_sqdist(xs[p], ys[p], xs[a], ys[a], xs[b], ys[b])
        if best is None or d < best_d:
            best, best_d = p, d
    return best
