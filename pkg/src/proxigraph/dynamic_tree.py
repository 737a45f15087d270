"""Link/Cut dynamic trees with real edge costs.

Re-exports the backend implementation (compiled when available).  The
structure maintains a forest of rooted trees; each operation is amortized
O(log n):

    parent(v), root(v), cost(v), maxcost(v), link(v, u, x), cut(v),
    update_edge(v, x), lca(v, u)

cost/maxcost/cut/update_edge require v not to be a tree root; link requires
v to be a root of a different tree than u.  maxcost returns the vertex u
closest to root(v) whose edge (u, parent(u)) attains the maximum cost on
the path from v to root(v).

Single-writer only: the splay trees rebalance on every query, so callers
must serialize access to one instance (distinct instances are independent).
"""

from __future__ import annotations

from .backend import LinkCutTree as DynamicTree

__all__ = ["DynamicTree"]
