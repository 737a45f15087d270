"""Exact geometric primitives and region-membership predicates.

All predicates are evaluated exactly: coordinates are integers or
`fractions.Fraction` values and every test reduces to the sign of a
polynomial in the coordinates.  There are no epsilons anywhere.  All
neighbourhood regions (diametral circle, lune, beta-neighbourhood) are OPEN
disks, following D(x, r) = {y : dist(x, y) < r}; boundary points never count
as inside.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import GeometryError

Coord = "int | Fraction"


def as_coord(value):
    """Normalize a coordinate to an exact int or Fraction.

    Floats are interpreted through their shortest decimal representation
    (so 1.05 means 21/20, not the binary double nearest to it).
    """
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value if value.denominator != 1 else value.numerator
    if isinstance(value, float):
        value = Fraction(repr(value))
    else:
        value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class Point:
    """A point of the input set; `id` is its dense 0-based vertex index."""

    x: object
    y: object
    id: int = -1

    def __iter__(self):
        return iter((self.x, self.y))


def P(x, y, id=-1):
    """Point constructor that normalizes coordinate types."""
    return Point(as_coord(x), as_coord(y), id)


class Orientation(Enum):
    CLOCKWISE = -1
    COUNTERCLOCKWISE = 1
    COLLINEAR = 0


@dataclass(frozen=True)
class BetaParam:
    """Exact rational beta in [1, 2] for lune-based beta-neighbourhoods."""

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("beta denominator must be positive")
        if not (self.den <= self.num <= 2 * self.den):
            raise ValueError(f"beta = {self.num}/{self.den} outside [1, 2]")

    @classmethod
    def of(cls, value) -> "BetaParam":
        if isinstance(value, BetaParam):
            return value
        f = Fraction(repr(value)) if isinstance(value, float) else Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self):
        return f"{self.num}/{self.den}" if self.den != 1 else str(self.num)


# ---------------------------------------------------------------------------
# raw sign helpers on unpacked coordinates (used by inner loops and kernels)
# ---------------------------------------------------------------------------

def orient_sign(ax, ay, bx, by, cx, cy):
    """Sign of the signed area of triangle abc (+1 ccw, -1 cw, 0 collinear)."""
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def incircle_det_sign(ax, ay, bx, by, cx, cy, dx, dy):
    """Sign of the incircle determinant; positive means d is inside the
    circle through a, b, c when abc is counterclockwise."""
    adx = ax - dx
    ady = ay - dy
    bdx = bx - dx
    bdy = by - dy
    cdx = cx - dx
    cdy = cy - dy
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def diametral_sign(ux, uy, vx, vy, px, py):
    """Sign of (u-p).(v-p): negative iff p inside the open disk on uv."""
    dot = (ux - px) * (vx - px) + (uy - py) * (vy - py)
    if dot > 0:
        return 1
    if dot < 0:
        return -1
    return 0


def sq_dist(ax, ay, bx, by):
    dx = ax - bx
    dy = ay - by
    return dx * dx + dy * dy


def in_beta_disks(ux, uy, vx, vy, px, py, num, den):
    """Exact membership of p in U_{u,v}(beta) for beta = num/den.

    The two disk centers are (1 - beta/2)u + (beta/2)v and the symmetric
    point; scaling through by (2*den) turns both containment tests into
    polynomial sign tests.
    """
    t = 2 * den
    a = t - num
    d2 = sq_dist(ux, uy, vx, vy)
    rhs = num * num * d2
    ex = t * px - a * ux - num * vx
    ey = t * py - a * uy - num * vy
    if ex * ex + ey * ey >= rhs:
        return False
    fx = t * px - a * vx - num * ux
    fy = t * py - a * vy - num * uy
    return fx * fx + fy * fy < rhs


def segments_cross_sign(ax, ay, bx, by, cx, cy, dx, dy):
    """True iff open segments ab and cd properly cross (endpoint contact
    and collinear overlap do not count)."""
    d1 = orient_sign(cx, cy, dx, dy, ax, ay)
    d2 = orient_sign(cx, cy, dx, dy, bx, by)
    if d1 * d2 >= 0:
        return False
    d3 = orient_sign(ax, ay, bx, by, cx, cy)
    d4 = orient_sign(ax, ay, bx, by, dx, dy)
    return d3 * d4 < 0


def point_in_open_segment_sign(px, py, ax, ay, bx, by):
    """True iff p lies strictly inside segment ab."""
    if orient_sign(ax, ay, bx, by, px, py) != 0:
        return False
    if (px, py) == (ax, ay) or (px, py) == (bx, by):
        return False
    return (
        min(ax, bx) <= px <= max(ax, bx)
        and min(ay, by) <= py <= max(ay, by)
    )


# ---------------------------------------------------------------------------
# Point-level predicates
# ---------------------------------------------------------------------------

def orient2d(a: Point, b: Point, c: Point) -> Orientation:
    """Exact orientation of the triple (a, b, c)."""
    return Orientation(orient_sign(a.x, a.y, b.x, b.y, c.x, c.y))


def in_circumcircle(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff d lies strictly inside the circle through a, b, c.

    The result is independent of the winding of (a, b, c); a collinear
    triple is rejected.
    """
    s = orient_sign(a.x, a.y, b.x, b.y, c.x, c.y)
    if s == 0:
        raise GeometryError("in_circumcircle: a, b, c are collinear")
    det = incircle_det_sign(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y)
    return s * det > 0


def in_diametral_circle(u: Point, v: Point, p: Point) -> bool:
    """True iff p is strictly inside the open disk with diameter uv."""
    if (u.x, u.y) == (v.x, v.y):
        raise GeometryError("in_diametral_circle: u == v")
    return diametral_sign(u.x, u.y, v.x, v.y, p.x, p.y) < 0


def in_lune(u: Point, v: Point, p: Point) -> bool:
    """True iff p is strictly inside the lune of u and v (open disks)."""
    if (u.x, u.y) == (v.x, v.y):
        raise GeometryError("in_lune: u == v")
    d2 = sq_dist(u.x, u.y, v.x, v.y)
    return (
        sq_dist(u.x, u.y, p.x, p.y) < d2
        and sq_dist(v.x, v.y, p.x, p.y) < d2
    )


def in_beta_neighbourhood(u: Point, v: Point, p: Point, beta) -> bool:
    """True iff p is strictly inside U_{u,v}(beta), 1 <= beta <= 2."""
    if (u.x, u.y) == (v.x, v.y):
        raise GeometryError("in_beta_neighbourhood: u == v")
    beta = BetaParam.of(beta)
    return in_beta_disks(u.x, u.y, v.x, v.y, p.x, p.y, beta.num, beta.den)


def segments_properly_intersect(s1, s2) -> bool:
    """True iff the two segments cross in their interiors.

    Segments are (Point, Point) pairs; sharing an endpoint is not an
    intersection.
    """
    (a, b), (c, d) = s1, s2
    return segments_cross_sign(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y)


def point_in_open_segment(p: Point, a: Point, b: Point) -> bool:
    return point_in_open_segment_sign(p.x, p.y, a.x, a.y, b.x, b.y)


def squared_distance(a: Point, b: Point):
    return sq_dist(a.x, a.y, b.x, b.y)


# ---------------------------------------------------------------------------
# General position
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    kind: str = ""
    indices: tuple = ()

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.kind}: {', '.join(map(str, self.indices))}"


def check_general_position(points) -> GeneralPositionReport:
    """Report the first collinear triple or cocircular quadruple.

    Brute force (O(n^3) + O(n^4)); intended for desk-scale inputs, where it
    backs the uniqueness claims of every construction in the package.
    """
    pts = list(points)
    for i, j, k in combinations(range(len(pts)), 3):
        a, b, c = pts[i], pts[j], pts[k]
        if orient_sign(a.x, a.y, b.x, b.y, c.x, c.y) == 0:
            return GeneralPositionReport(False, "collinear", (i, j, k))
    for i, j, k, l in combinations(range(len(pts)), 4):
        a, b, c, d = pts[i], pts[j], pts[k], pts[l]
        if incircle_det_sign(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y) == 0:
            return GeneralPositionReport(False, "cocircular", (i, j, k, l))
    return GeneralPositionReport(True)


# ---------------------------------------------------------------------------
# Canonical edge ordering
# ---------------------------------------------------------------------------

def edge_key(points, e):
    """Total-order key of an edge: (squared length, min id, max id).

    Ties in length fall back to the lexicographic endpoint pair, which makes
    minimum spanning trees unique.
    """
    i, j = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    a, b = points[i], points[j]
    return (sq_dist(a.x, a.y, b.x, b.y), i, j)


def compare_edges(points, e1, e2) -> int:
    """-1, 0 or +1 according to the canonical total order on edges."""
    k1, k2 = edge_key(points, e1), edge_key(points, e2)
    return (k1 > k2) - (k1 < k2)
