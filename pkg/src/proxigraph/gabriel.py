"""Minimum constraint set for the constrained Gabriel graph.

An input edge must be forced iff it is not locally Gabriel, and that can be
read off the CDT in constant time: only the one or two triangle apexes of
the edge can witness a point inside its diametral circle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdt import Triangulation, build_cdt
from .constraints import ConstraintSet
from .errors import GeometryError
from .geometry import diametral_sign, orient_sign
from .planegraph import PlaneGraph


@dataclass(frozen=True)
class LocalGabrielWitness:
    """CDT-triangle apex lying strictly inside the diametral circle of an
    edge; side is its orientation sign against the directed edge."""

    edge: tuple
    vertex: int
    side: int


def gabriel_witness(t: Triangulation, e):
    """The apex witnessing that e is not locally Gabriel, or None."""
    a, b = e if e[0] < e[1] else (e[1], e[0])
    if not t.contains_edge((a, b)):
        raise GeometryError(f"edge ({a}, {b}) not in triangulation")
    xs, ys = t.graph.xs, t.graph.ys
    for p in t.apexes((a, b)):
        if diametral_sign(xs[a], ys[a], xs[b], ys[b], xs[p], ys[p]) < 0:
            side = orient_sign(xs[a], ys[a], xs[b], ys[b], xs[p], ys[p])
            return LocalGabrielWitness((a, b), p, side)
    return None


def is_locally_gabriel(t: Triangulation, e) -> bool:
    """Constant-time local Gabriel test on the CDT (exact for edges of the
    input graph: an apex outside the diametral circle shields its whole
    side)."""
    return gabriel_witness(t, e) is None


def gabriel_constraints(i: PlaneGraph, backend=None) -> ConstraintSet:
    """All input edges that are not locally Gabriel; the minimum set S with
    I a subgraph of the constrained Gabriel graph of (V, S)."""
    tri = build_cdt(i, backend=backend)
    if i.n < 3:
        return ConstraintSet.of((), "gabriel")
    s = [e for e in i.edges if not is_locally_gabriel(tri, e)]
    return ConstraintSet.of(s, "gabriel")
