"""proxigraph: minimum constraint sets for edge-constrained proximity graphs.

Given a plane graph (or forest) the package computes the smallest set of
input edges that must be forced as constraints so that the edge-constrained
minimum spanning tree, Gabriel graph, or lune-based beta-skeleton
(1 <= beta <= 2) contains the input, and ships definition-level brute-force
oracles to verify every output at desk scale.
"""

from .backend import BACKEND, available_backends
from .geometry import (
    BetaParam,
    Orientation,
    P,
    Point,
    check_general_position,
    in_beta_neighbourhood,
    in_circumcircle,
    in_diametral_circle,
    in_lune,
    orient2d,
    segments_properly_intersect,
)
from .planegraph import PlaneGraph, WeightedGraph, cvg, evg, is_forest, visibility_graph, visible
from .cdt import Triangulation, build_cdt, edge_weight_view, is_locally_delaunay
from .mst import SpanningTree, cmst, mst, mst_of_cdt
from .dynamic_tree import DynamicTree
from .constraints import ConstraintSet
from .cmst_constraints import (
    cmst_constraints_fast,
    cmst_constraints_reference,
    verify_containment,
)
from .gabriel import gabriel_constraints, is_locally_gabriel
from .beta_skeleton import beta_constraints, build_elimination_forest, elimination_path
from .oracle import (
    oracle_cbeta,
    oracle_cgg,
    oracle_crng,
    oracle_min_constraints,
    verify_constraint_hierarchy,
    verify_hierarchy,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BetaParam",
    "ConstraintSet",
    "DynamicTree",
    "Orientation",
    "P",
    "PlaneGraph",
    "Point",
    "SpanningTree",
    "Triangulation",
    "WeightedGraph",
    "available_backends",
    "beta_constraints",
    "build_cdt",
    "build_elimination_forest",
    "check_general_position",
    "cmst",
    "cmst_constraints_fast",
    "cmst_constraints_reference",
    "cvg",
    "edge_weight_view",
    "elimination_path",
    "evg",
    "gabriel_constraints",
    "in_beta_neighbourhood",
    "in_circumcircle",
    "in_diametral_circle",
    "in_lune",
    "is_forest",
    "is_locally_delaunay",
    "is_locally_gabriel",
    "mst",
    "mst_of_cdt",
    "oracle_cbeta",
    "oracle_cgg",
    "oracle_crng",
    "oracle_min_constraints",
    "orient2d",
    "segments_properly_intersect",
    "verify_constraint_hierarchy",
    "verify_containment",
    "verify_hierarchy",
    "visibility_graph",
    "visible",
]
