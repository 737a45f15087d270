"""Definition-level brute-force oracles and hierarchy verifiers.

Everything here is deliberately naive: graphs are built straight from their
definitions with all-pairs visibility, and minimum constraint sets come from
exhaustive subset enumeration.  These are the package's ground truth at desk
scale; instance-size guards stop accidental blowups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .beta_skeleton import beta_constraints
from .cdt import build_cdt, is_locally_delaunay
from .cmst_constraints import cmst_constraints_fast
from .constraints import ConstraintSet
from .errors import OracleGuardError
from .gabriel import gabriel_constraints
from .geometry import BetaParam, diametral_sign, in_beta_disks, sq_dist
from .mst import cmst_visibility
from .planegraph import (
    PlaneGraph,
    is_forest,
    point_in_open_segment_sign,
    segments_cross_sign,
    visibility_matrix,
)

ORACLE_EDGE_GUARD = 16


def _member_gabriel(xs, ys, u, v, p):
    return diametral_sign(xs[u], ys[u], xs[v], ys[v], xs[p], ys[p]) < 0


def _member_rng(xs, ys, u, v, p):
    d2 = sq_dist(xs[u], ys[u], xs[v], ys[v])
    return (
        sq_dist(xs[u], ys[u], xs[p], ys[p]) < d2
        and sq_dist(xs[v], ys[v], xs[p], ys[p]) < d2
    )


def _member_beta(beta):
    beta = BetaParam.of(beta)

    def member(xs, ys, u, v, p):
        return in_beta_disks(
            xs[u], ys[u], xs[v], ys[v], xs[p], ys[p], beta.num, beta.den
        )

    return member


def _oracle_graph(i: PlaneGraph, member, adjacency=None):
    """Edges of the edge-constrained proximity graph defined by the region
    membership test: input edges plus visible pairs whose region is empty
    of vertices visible to both endpoints."""
    adj = visibility_matrix(i) if adjacency is None else adjacency
    xs, ys = i.xs, i.ys
    out = set(i.edges)
    for u in range(i.n):
        for v in adj[u]:
            if v <= u or (u, v) in out:
                continue
            empty = True
            for p in range(i.n):
                if p == u or p == v:
                    continue
                if member(xs, ys, u, v, p) and u in adj[p] and v in adj[p]:
                    empty = False
                    break
            if empty:
                out.add((u, v))
    return out


def oracle_cgg(i: PlaneGraph, adjacency=None):
    """Constrained Gabriel graph straight from the definition; O(n^3 |E|)."""
    return _oracle_graph(i, _member_gabriel, adjacency)


def oracle_crng(i: PlaneGraph, adjacency=None):
    """Constrained relative neighbourhood graph from the lune definition."""
    return _oracle_graph(i, _member_rng, adjacency)


def oracle_cbeta(i: PlaneGraph, beta, adjacency=None):
    """Constrained lune-based beta-skeleton from the definition."""
    return _oracle_graph(i, _member_beta(beta), adjacency)


# -- classical (unconstrained) counterparts, fully independent ---------------

def classical_graph(points_graph: PlaneGraph, member):
    xs, ys = points_graph.xs, points_graph.ys
    n = points_graph.n
    out = set()
    for u, v in combinations(range(n), 2):
        if not any(
            member(xs, ys, u, v, p) for p in range(n) if p not in (u, v)
        ):
            out.add((u, v))
    return out


def classical_gg(g):
    return classical_graph(g, _member_gabriel)


def classical_rng(g):
    return classical_graph(g, _member_rng)


def classical_gbeta(g, beta):
    return classical_graph(g, _member_beta(beta))


# ---------------------------------------------------------------------------
# Exhaustive minimum constraint sets
# ---------------------------------------------------------------------------

def _crossmasks(i: PlaneGraph, pairs):
    """For each requested vertex pair: bitmask of input edges properly
    crossed, plus a flag for a vertex sitting inside the open segment."""
    xs, ys = i.xs, i.ys
    masks = {}
    for u, v in pairs:
        mask = 0
        for j, (a, b) in enumerate(i.edges):
            if u in (a, b) or v in (a, b):
                continue
            if segments_cross_sign(
                xs[u], ys[u], xs[v], ys[v], xs[a], ys[a], xs[b], ys[b]
            ):
                mask |= 1 << j
        bad = any(
            point_in_open_segment_sign(xs[w], ys[w], xs[u], ys[u], xs[v], ys[v])
            for w in range(i.n)
            if w not in (u, v)
        )
        masks[(u, v)] = (mask, bad)
    return masks


def _min_constraints_cmst(i: PlaneGraph):
    n, m = i.n, i.m
    pairs = sorted(
        combinations(range(n), 2), key=lambda e: (i.int_edge_sqlen(e),) + e
    )
    masks = _crossmasks(i, pairs)
    edge_bit = {e: j for j, e in enumerate(i.edges)}
    target = set(i.edges)

    def valid(smask):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree = set()
        count = 0
        for j, e in enumerate(i.edges):
            if smask >> j & 1:
                ra, rb = find(e[0]), find(e[1])
                if ra == rb:
                    raise AssertionError("constraint subset has a cycle")
                parent[ra] = rb
                tree.add(e)
                count += 1
        for e in pairs:
            if count == n - 1:
                break
            if e in tree:
                continue
            mask, bad = masks[e]
            if bad or (mask & smask):
                continue
            ra, rb = find(e[0]), find(e[1])
            if ra != rb:
                parent[ra] = rb
                tree.add(e)
                count += 1
        return target <= tree

    return _enumerate_min(i, valid, "cmst", None)


def _min_constraints_region(i: PlaneGraph, member, family, beta):
    xs, ys = i.xs, i.ys
    needed_pairs = set()
    raw_witnesses = {}
    for e in i.edges:
        u, v = e
        ws = []
        for p in range(i.n):
            if p in (u, v) or not member(xs, ys, u, v, p):
                continue
            ws.append(p)
            needed_pairs.add((min(p, u), max(p, u)))
            needed_pairs.add((min(p, v), max(p, v)))
        raw_witnesses[e] = ws
    masks = _crossmasks(i, sorted(needed_pairs))
    witnesses = {}
    for e, ws in raw_witnesses.items():
        u, v = e
        entries = []
        for p in ws:
            mu, bu = masks[(min(p, u), max(p, u))]
            mv, bv = masks[(min(p, v), max(p, v))]
            if bu or bv:
                continue  # a vertex blocks the sight line regardless of S
            entries.append(mu | mv)
        witnesses[e] = entries

    def valid(smask):
        for j, e in enumerate(i.edges):
            if smask >> j & 1:
                continue
            for wmask in witnesses[e]:
                if wmask & smask == 0:
                    return False
        return True

    return _enumerate_min(i, valid, family, beta)


def _enumerate_min(i, valid, family, beta):
    m = i.m
    for k in range(m + 1):
        hits = []
        for combo in combinations(range(m), k):
            smask = 0
            for j in combo:
                smask |= 1 << j
            if valid(smask):
                hits.append(combo)
        if hits:
            if len(hits) != 1:
                raise AssertionError(
                    f"minimum constraint set is not unique: {hits}"
                )
            edges = [i.edges[j] for j in hits[0]]
            return ConstraintSet.of(edges, family, beta)
    raise AssertionError("no valid constraint subset found (S = E must work)")


def oracle_min_constraints(i: PlaneGraph, family, beta=None, guard=ORACLE_EDGE_GUARD):
    """Exhaustive search over all subsets of the input edges for the
    smallest S whose constrained graph contains the input.  Asserts the
    minimum is unique.  Guarded to |E| <= guard."""
    if i.m > guard:
        raise OracleGuardError(f"|E| = {i.m} exceeds oracle guard {guard}")
    if family == "cmst":
        if not is_forest(i):
            raise ValueError("cmst oracle needs a forest")
        return _min_constraints_cmst(i)
    if family == "gabriel":
        return _min_constraints_region(i, _member_gabriel, "gabriel", None)
    if family == "beta":
        if beta is None:
            raise ValueError("beta family needs a beta value")
        return _min_constraints_region(
            i, _member_beta(beta), "beta", BetaParam.of(beta)
        )
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Hierarchy verifiers
# ---------------------------------------------------------------------------

DEFAULT_BETAS = (1, "5/4", "3/2", 2)


@dataclass
class HierarchyReport:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _chain_check(named_sets):
    failures = []
    for (na, sa), (nb, sb) in zip(named_sets, named_sets[1:]):
        if not sa <= sb:
            extra = sorted(sa - sb)[:4]
            failures.append(f"{na} is not a subset of {nb}: extra {extra}")
    return failures


def verify_hierarchy(f: PlaneGraph, betas=DEFAULT_BETAS) -> HierarchyReport:
    """Nested-graph chain: CMST (forests) within CRNG within CG_beta within
    CGG within CDT, built entirely from the oracles."""
    adj = visibility_matrix(f)
    betas = sorted((BetaParam.of(b) for b in betas), key=lambda b: b.value)
    cdt_edges = set(build_cdt(f).edges())
    cgg = oracle_cgg(f, adj)
    crng = oracle_crng(f, adj)
    chain = [("CRNG", crng)]
    for b in reversed(betas):  # larger beta gives the smaller graph
        chain.append((f"CG_beta({b})", oracle_cbeta(f, b, adj)))
    chain.append(("CGG", cgg))
    chain.append(("CDT", cdt_edges))
    if is_forest(f):
        chain.insert(0, ("CMST", cmst_visibility(f).edge_pairs()))
    failures = _chain_check(chain)
    return HierarchyReport(not failures, failures)


def verify_constraint_hierarchy(i: PlaneGraph, betas=DEFAULT_BETAS) -> HierarchyReport:
    """Reverse-nested minimum constraint sets: S_CDT within S_CGG within
    S_CG_beta within S_CRNG (within S_CMST for forests)."""
    betas = sorted((BetaParam.of(b) for b in betas), key=lambda b: b.value)
    tri = build_cdt(i)
    if i.n < 3:
        s_cdt = set()
    else:
        s_cdt = {e for e in i.edges if not is_locally_delaunay(tri, e)}
    chain = [("S_CDT", s_cdt), ("S_CGG", set(gabriel_constraints(i).edges))]
    for b in betas:
        chain.append((f"S_CG_beta({b})", set(beta_constraints(i, b).edges)))
    chain.append(("S_CRNG", set(beta_constraints(i, 2).edges)))
    if is_forest(i):
        chain.append(("S_CMST", set(cmst_constraints_fast(i).edges)))
    failures = _chain_check(chain)
    return HierarchyReport(not failures, failures)
