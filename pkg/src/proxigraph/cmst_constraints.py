"""Minimum constraint set for the constrained MST of a plane forest.

Two routes compute the same set: a reference path over the full visibility
graph (cycle walks on the constrained MST), and an O(n log n) path that
works on the CDT edge set and extracts heavy cycle edges with a link/cut
tree.  The reference path is the oracle for the fast one.
"""

from __future__ import annotations

from . import backend as _backend
from .cdt import build_cdt
from .constraints import ConstraintSet
from .errors import GeometryError
from .mst import cmst_of_subset, cmst_visibility, mst_visibility, spanning_trees_of_cdt
from .planegraph import PlaneGraph, is_forest


def _int_key(g, a, b):
    """Total-order edge key packed into one integer: squared length in the
    canonical frame, then the (min, max) endpoint pair."""
    if a > b:
        a, b = b, a
    return (g.int_edge_sqlen((a, b)) << 64) | (a << 32) | b


def cmst_constraints_reference(f: PlaneGraph) -> ConstraintSet:
    """Cycle-walk extraction over the visibility graph.

    For every edge e' of MST(EVG(F)) missing from CMST(F), every input edge
    on the cycle e' closes in CMST(F) that is heavier than e' must be
    forced; the union over all such e' is minimal and minimum.
    """
    if not is_forest(f):
        raise GeometryError("cmst_constraints_reference: input is not a forest")
    t_prime = mst_visibility(f)
    c_tree = cmst_visibility(f)
    c_pairs = c_tree.edge_pairs()
    keys = {}

    def key(a, b):
        e = (a, b) if a < b else (b, a)
        k = keys.get(e)
        if k is None:
            k = keys[e] = (f.int_edge_sqlen(e), e[0], e[1])
        return k

    s = set()
    for e in sorted(t_prime.edges, key=lambda e: key(e.u, e.v)):
        if (e.u, e.v) in c_pairs:
            continue
        w_new = key(e.u, e.v)
        for a, b in c_tree.path_edges(e.u, e.v):
            if f.has_edge(a, b) and key(a, b) > w_new:
                s.add((a, b))
    return ConstraintSet.of(s, "cmst")


def cmst_constraints_fast(f: PlaneGraph, backend=None, with_audit=False):
    """Link/cut-tree extraction on the CDT edge set; identical output to
    the reference route.

    Builds T' = MST(CDT(F)) and CMST(F) = MST of the zero-weighted CDT,
    then for every T' edge absent from the CMST detaches the tree at the
    lca, repeatedly pulls the path maximum on both sides while it exceeds
    the new edge's weight, zeroes those edges and collects them, and
    finally keeps only collected edges that are input edges.  Non-input
    edges that were zeroed are reported as the audit trail.
    """
    if not is_forest(f):
        raise GeometryError("cmst_constraints_fast: input is not a forest")
    kern = backend or _backend.get_backend()
    n = f.n
    if n < 3:
        result = ConstraintSet.of((), "cmst")
        return (result, []) if with_audit else result
    tri = build_cdt(f, backend=kern)
    t_prime, c_tree = spanning_trees_of_cdt(tri)
    s, audit = extract_constraints(f, t_prime, c_tree, kern)
    result = ConstraintSet.of(s, "cmst")
    if with_audit:
        return result, audit
    return result


def extract_constraints(f: PlaneGraph, t_prime, c_tree, kern=None):
    """The link/cut extraction stage of the fast route, given the two
    spanning trees.  Returns (constraint edge set, zeroed non-input edges)."""
    kern = kern or _backend.get_backend()
    n = f.n
    c_pairs = c_tree.edge_pairs()

    # root the CMST at vertex 0 and link child -> parent with exact keys
    lct = kern.LinkCutTree(n)
    order = [0]
    seen = [False] * n
    seen[0] = True
    adj = c_tree.adjacency()
    parent_of = [-1] * n
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent_of[y] = x
                order.append(y)
    for v in order[1:]:
        lct.link(v, parent_of[v], _int_key(f, v, parent_of[v]))

    s = set()
    audit = []
    candidates = [e for e in t_prime.edges if (e.u, e.v) not in c_pairs]
    candidates.sort(key=lambda e: _int_key(f, e.u, e.v))
    for e in candidates:
        v1, v2 = e.u, e.v
        w_new = _int_key(f, v1, v2)
        u = lct.lca(v1, v2)
        if u is None:
            raise AssertionError("CMST spans V; lca cannot be null")
        p = lct.parent(u)
        y = lct.cut(u) if p is not None else None
        for end in (v1, v2):
            if lct.parent(end) is None:
                continue
            v = lct.maxcost(end)
            x = lct.cost(v)
            while w_new < x:
                lct.update_edge(v, -x)
                pv = lct.parent(v)
                edge = (v, pv) if v < pv else (pv, v)
                if f.has_edge(*edge):
                    s.add(edge)
                else:
                    audit.append(edge)
                v = lct.maxcost(end)
                x = lct.cost(v)
        if p is not None:
            lct.link(u, p, y)
    return s, audit


def verify_containment(f: PlaneGraph, s, backend=None) -> bool:
    """True iff F is a subgraph of CMST(V, S)."""
    tree = cmst_of_subset(f, list(s), backend=backend)
    pairs = tree.edge_pairs()
    return all(e in pairs for e in f.edges)
