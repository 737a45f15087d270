# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: triangulation engine and link/cut tree.

Mirror of `_purepy` (the reference twin); both must produce identical
results.  Hot paths run on C arrays and doubles; the exact fallback for an
inconclusive floating-point filter uses Python big-integer arithmetic on
the original coordinates.
"""

from libcpp.vector cimport vector

from .errors import GeneralPositionError, GeometryError, PlanarityError

BACKEND = "compiled"

cdef int GHOST = -1

cdef double EPS = 1.1102230246251565e-16
cdef double CCW_ERR_A = (3.0 + 16.0 * EPS) * EPS
cdef double ICC_ERR_A = (10.0 + 96.0 * EPS) * EPS

DEF HILBERT_BITS = 16

cdef long long FLOAT_SAFE = (<long long> 1) << 53


cdef unsigned long long _hilbert_d(unsigned long long x, unsigned long long y):
    cdef unsigned long long rx, ry, d = 0, t
    cdef unsigned long long s = (<unsigned long long> 1) << (HILBERT_BITS - 1)
    while s > 0:
        rx = 1 if (x & s) > 0 else 0
        ry = 1 if (y & s) > 0 else 0
        d += s * s * ((3 * rx) ^ ry)
        if ry == 0:
            if rx == 1:
                x = s - 1 - x
                y = s - 1 - y
            t = x
            x = y
            y = t
        s >>= 1
    return d


def hilbert_order(ex, ey):
    """Vertex ids sorted along a Hilbert curve (locality heuristic only;
    ties are broken by coordinates, then id)."""
    n = len(ex)
    if n == 0:
        return []
    minx, maxx = min(ex), max(ex)
    miny, maxy = min(ey), max(ey)
    spanx = max(maxx - minx, 1)
    spany = max(maxy - miny, 1)
    side = (1 << HILBERT_BITS) - 1
    keys = []
    for i in range(n):
        gx = ((ex[i] - minx) * side) // spanx
        gy = ((ey[i] - miny) * side) // spany
        keys.append((_hilbert_d(gx, gy), ex[i], ey[i], i))
    keys.sort()
    return [k[3] for k in keys]


cdef class _Tri:
    """Bowyer-Watson Delaunay triangulation with ghost triangles, plus
    constraint-segment insertion by channel retriangulation."""

    cdef list ex, ey
    cdef vector[double] fx, fy
    cdef bint filter_ok
    cdef int n, stamp
    cdef vector[int] tv, tn
    cdef vector[char] tc, alive
    cdef vector[int] mark, free_list, vtri

    def __init__(self, ex, ey):
        self.ex = list(ex)
        self.ey = list(ey)
        self.n = len(ex)
        self.stamp = 0
        cdef bint ok = True
        for v in self.ex:
            if not (-FLOAT_SAFE <= v <= FLOAT_SAFE):
                ok = False
                break
        if ok:
            for v in self.ey:
                if not (-FLOAT_SAFE <= v <= FLOAT_SAFE):
                    ok = False
                    break
        self.filter_ok = ok
        if ok:
            self.fx.reserve(self.n)
            self.fy.reserve(self.n)
            for v in self.ex:
                self.fx.push_back(<double> v)
            for v in self.ey:
                self.fy.push_back(<double> v)
        self.vtri.assign(self.n, -1)

    # -- predicates -----------------------------------------------------

    cdef int _orient_exact(self, int i, int j, int k):
        det = (self.ex[j] - self.ex[i]) * (self.ey[k] - self.ey[i]) - (
            self.ey[j] - self.ey[i]
        ) * (self.ex[k] - self.ex[i])
        if det > 0:
            return 1
        if det < 0:
            return -1
        return 0

    cdef int _orient(self, int i, int j, int k) except -9:
        cdef double ax, ay, detleft, detright, det, detsum, err
        if self.filter_ok:
            ax = self.fx[i]
            ay = self.fy[i]
            detleft = (self.fx[j] - ax) * (self.fy[k] - ay)
            detright = (self.fy[j] - ay) * (self.fx[k] - ax)
            det = detleft - detright
            if detleft > 0.0:
                if detright <= 0.0:
                    return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
                detsum = detleft + detright
            elif detleft < 0.0:
                if detright >= 0.0:
                    return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
                detsum = -detleft - detright
            else:
                return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
            err = CCW_ERR_A * detsum
            if det >= err:
                return 1
            if -det >= err:
                return -1
        return self._orient_exact(i, j, k)

    cdef int _incircle_exact(self, int i, int j, int k, int l):
        adx = self.ex[i] - self.ex[l]
        ady = self.ey[i] - self.ey[l]
        bdx = self.ex[j] - self.ex[l]
        bdy = self.ey[j] - self.ey[l]
        cdx = self.ex[k] - self.ex[l]
        cdy = self.ey[k] - self.ey[l]
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

    cdef int _incircle(self, int i, int j, int k, int l) except -9:
        cdef double adx, ady, bdx, bdy, cdx, cdy
        cdef double bdxcdy, cdxbdy, cdxady, adxcdy, adxbdy, bdxady
        cdef double alift, blift, clift, det, permanent, err
        if self.filter_ok:
            adx = self.fx[i] - self.fx[l]
            ady = self.fy[i] - self.fy[l]
            bdx = self.fx[j] - self.fx[l]
            bdy = self.fy[j] - self.fy[l]
            cdx = self.fx[k] - self.fx[l]
            cdy = self.fy[k] - self.fy[l]
            bdxcdy = bdx * cdy
            cdxbdy = cdx * bdy
            alift = adx * adx + ady * ady
            cdxady = cdx * ady
            adxcdy = adx * cdy
            blift = bdx * bdx + bdy * bdy
            adxbdy = adx * bdy
            bdxady = bdx * ady
            clift = cdx * cdx + cdy * cdy
            det = (
                alift * (bdxcdy - cdxbdy)
                + blift * (cdxady - adxcdy)
                + clift * (adxbdy - bdxady)
            )
            permanent = (
                ((bdxcdy if bdxcdy >= 0 else -bdxcdy)
                 + (cdxbdy if cdxbdy >= 0 else -cdxbdy)) * alift
                + ((cdxady if cdxady >= 0 else -cdxady)
                   + (adxcdy if adxcdy >= 0 else -adxcdy)) * blift
                + ((adxbdy if adxbdy >= 0 else -adxbdy)
                   + (bdxady if bdxady >= 0 else -bdxady)) * clift
            )
            err = ICC_ERR_A * permanent
            if det > err:
                return 1
            if -det > err:
                return -1
        return self._incircle_exact(i, j, k, l)

    cdef int _orient_or_raise(self, int i, int j, int k) except -9:
        cdef int s = self._orient(i, j, k)
        if s == 0:
            raise GeneralPositionError("collinear", sorted((i, j, k)))
        return s

    cdef int _incircle_or_raise(self, int i, int j, int k, int l) except -9:
        cdef int s = self._incircle(i, j, k, l)
        if s == 0:
            raise GeneralPositionError("cocircular", sorted((i, j, k, l)))
        return s

    # -- triangle bookkeeping --------------------------------------------

    cdef int _new_tri(self, int a, int b, int c):
        cdef int t, base
        if self.free_list.size() > 0:
            t = self.free_list.back()
            self.free_list.pop_back()
            self.alive[t] = 1
            base = 3 * t
            self.tv[base] = a
            self.tv[base + 1] = b
            self.tv[base + 2] = c
            self.tn[base] = -1
            self.tn[base + 1] = -1
            self.tn[base + 2] = -1
            self.tc[base] = 0
            self.tc[base + 1] = 0
            self.tc[base + 2] = 0
        else:
            t = <int> self.alive.size()
            self.tv.push_back(a)
            self.tv.push_back(b)
            self.tv.push_back(c)
            self.tn.push_back(-1)
            self.tn.push_back(-1)
            self.tn.push_back(-1)
            self.tc.push_back(0)
            self.tc.push_back(0)
            self.tc.push_back(0)
            self.alive.push_back(1)
            self.mark.push_back(0)
        if a != GHOST:
            self.vtri[a] = t
        if b != GHOST:
            self.vtri[b] = t
        if c != GHOST:
            self.vtri[c] = t
        return t

    cdef void _kill(self, int t):
        self.alive[t] = 0
        self.free_list.push_back(t)

    cdef int _slot(self, int t, int v) except -9:
        cdef int base = 3 * t
        if self.tv[base] == v:
            return 0
        if self.tv[base + 1] == v:
            return 1
        if self.tv[base + 2] == v:
            return 2
        raise AssertionError(f"vertex {v} not in triangle {t}")

    cdef void _link(self, int t1, int s1, int t2, int s2):
        self.tn[3 * t1 + s1] = t2
        self.tn[3 * t2 + s2] = t1

    cdef bint _is_ghost(self, int t):
        return self.tv[3 * t + 2] == GHOST

    cdef int _opposite_vertex(self, int t, int va, int vb) except -9:
        cdef int base = 3 * t
        cdef int s, v
        for s in range(3):
            v = self.tv[base + s]
            if v != va and v != vb:
                return v
        raise AssertionError("degenerate triangle")

    # -- initialization ----------------------------------------------------

    cdef int _init_first_triangle(self, order) except -9:
        cdef int i0 = order[0]
        cdef int i1 = order[1]
        cdef int i2 = order[2]
        cdef int s = self._orient(i0, i1, i2)
        cdef int t, g0, g1, g2
        if s == 0:
            raise GeneralPositionError("collinear", sorted((i0, i1, i2)))
        if s < 0:
            i1, i2 = i2, i1
        t = self._new_tri(i0, i1, i2)
        g0 = self._new_tri(i1, i0, GHOST)
        g1 = self._new_tri(i2, i1, GHOST)
        g2 = self._new_tri(i0, i2, GHOST)
        self._link(t, 2, g0, 2)
        self._link(t, 0, g1, 2)
        self._link(t, 1, g2, 2)
        self._link(g0, 0, g2, 1)
        self._link(g0, 1, g1, 0)
        self._link(g1, 1, g2, 0)
        return t

    # -- point location ------------------------------------------------------

    cdef bint _in_cavity(self, int t, int p) except? 99:
        cdef int base = 3 * t
        cdef int a = self.tv[base]
        cdef int b = self.tv[base + 1]
        if self.tv[base + 2] == GHOST:
            return self._orient_or_raise(a, b, p) > 0
        return self._incircle_or_raise(a, b, self.tv[base + 2], p) > 0

    cdef int _locate(self, int p, int hint) except -9:
        cdef int t = hint
        cdef int prev = -1
        cdef long long guard = 4 * <long long> self.alive.size() + 64
        cdef int base, a, b, c, nxt
        while guard > 0:
            guard -= 1
            base = 3 * t
            if self.tv[base + 2] == GHOST:
                if self._orient_or_raise(self.tv[base], self.tv[base + 1], p) > 0:
                    return t
                prev = t
                t = self.tn[base + 2]
                continue
            a = self.tv[base]
            b = self.tv[base + 1]
            c = self.tv[base + 2]
            nxt = -1
            if self.tn[base + 2] != prev and self._orient_or_raise(a, b, p) < 0:
                nxt = self.tn[base + 2]
            elif self.tn[base] != prev and self._orient_or_raise(b, c, p) < 0:
                nxt = self.tn[base]
            elif self.tn[base + 1] != prev and self._orient_or_raise(c, a, p) < 0:
                nxt = self.tn[base + 1]
            if nxt == -1:
                return t
            prev = t
            t = nxt
        raise GeometryError("point location did not terminate")

    # -- Bowyer-Watson insertion ---------------------------------------------

    cdef int _insert_point(self, int p, int hint) except -9:
        cdef int t0 = self._locate(p, hint)
        cdef vector[int] cavity, stack
        cdef vector[int] bva, bvb, bnb
        cdef vector[char] bfl
        cdef int t, base, s, nb, va, vb, first
        self.stamp += 1
        cdef int stamp = self.stamp
        self.mark[t0] = stamp
        cavity.push_back(t0)
        stack.push_back(t0)
        while stack.size() > 0:
            t = stack.back()
            stack.pop_back()
            base = 3 * t
            for s in range(3):
                nb = self.tn[base + s]
                if self.mark[nb] != stamp and self._in_cavity(nb, p):
                    self.mark[nb] = stamp
                    cavity.push_back(nb)
                    stack.push_back(nb)
        cdef size_t ci
        for ci in range(cavity.size()):
            t = cavity[ci]
            base = 3 * t
            for s in range(3):
                nb = self.tn[base + s]
                if self.mark[nb] == stamp:
                    continue
                bva.push_back(self.tv[base + (s + 1) % 3])
                bvb.push_back(self.tv[base + (s + 2) % 3])
                bnb.push_back(nb)
                bfl.push_back(self.tc[base + s])
        for ci in range(cavity.size()):
            self._kill(cavity[ci])
        cdef vector[int] created
        cdef int sp, sn
        cdef char flag
        first = -1
        for ci in range(bva.size()):
            va = bva[ci]
            vb = bvb[ci]
            nb = bnb[ci]
            flag = bfl[ci]
            if va == GHOST:
                t = self._new_tri(vb, p, GHOST)
                sp = 1
            elif vb == GHOST:
                t = self._new_tri(p, va, GHOST)
                sp = 0
            else:
                t = self._new_tri(p, va, vb)
                sp = 0
            sn = self._slot(nb, self._opposite_vertex(nb, va, vb))
            self._link(t, sp, nb, sn)
            self.tc[3 * t + sp] = flag
            self.tc[3 * nb + sn] = flag
            created.push_back(t)
            if first == -1:
                first = t
        self._stitch_pending(created, -2, -2)
        return first

    cdef void _stitch_pending(self, vector[int] & created, int ck1, int ck2) except *:
        """Link the not-yet-linked edges among new triangles; an edge equal
        to (ck1, ck2) is flagged constrained on both sides."""
        cdef vector[int] pv1, pv2, pt, ps
        cdef int t, base, s, v1, v2, w
        cdef size_t ci, k
        cdef bint found
        for ci in range(created.size()):
            t = created[ci]
            base = 3 * t
            for s in range(3):
                if self.tn[base + s] != -1:
                    continue
                v1 = self.tv[base + (s + 1) % 3]
                v2 = self.tv[base + (s + 2) % 3]
                if v1 > v2:
                    w = v1
                    v1 = v2
                    v2 = w
                found = False
                for k in range(pv1.size()):
                    if pv1[k] == v1 and pv2[k] == v2:
                        self._link(t, s, pt[k], ps[k])
                        if v1 == ck1 and v2 == ck2:
                            self.tc[base + s] = 1
                            self.tc[3 * pt[k] + ps[k]] = 1
                        pv1[k] = pv1.back()
                        pv2[k] = pv2.back()
                        pt[k] = pt.back()
                        ps[k] = ps.back()
                        pv1.pop_back()
                        pv2.pop_back()
                        pt.pop_back()
                        ps.pop_back()
                        found = True
                        break
                if not found:
                    pv1.push_back(v1)
                    pv2.push_back(v2)
                    pt.push_back(t)
                    ps.push_back(s)
        if pv1.size() > 0:
            raise AssertionError("unmatched edges while stitching")

    # -- constraint segments -------------------------------------------------

    cdef list _incident(self, int v):
        cdef int t0 = self.vtri[v]
        cdef list out = [t0]
        cdef int cur = t0
        cdef long long guard = 4 * <long long> self.alive.size() + 64
        cdef int s
        while guard > 0:
            guard -= 1
            s = self._slot(cur, v)
            cur = self.tn[3 * cur + (s + 2) % 3]
            if cur == t0:
                return out
            out.append(cur)
        raise AssertionError("vertex fan does not close")

    cdef void _mark_constrained(self, int t, int s) except *:
        cdef int nb, va, vb, sn
        self.tc[3 * t + s] = 1
        nb = self.tn[3 * t + s]
        va = self.tv[3 * t + (s + 1) % 3]
        vb = self.tv[3 * t + (s + 2) % 3]
        sn = self._slot(nb, self._opposite_vertex(nb, va, vb))
        self.tc[3 * nb + sn] = 1

    cdef void insert_segment(self, int a, int b) except *:
        cdef int t, base, s, entry, x, y, left, right, cur, sx, nxt, z
        for t in self._incident(a):
            base = 3 * t
            for s in range(3):
                if self.tv[base + s] == b:
                    self._mark_constrained(t, 3 - self._slot(t, a) - s)
                    return
        entry = -1
        for t in self._incident(a):
            if self._is_ghost(t):
                continue
            s = self._slot(t, a)
            x = self.tv[3 * t + (s + 1) % 3]
            y = self.tv[3 * t + (s + 2) % 3]
            if (
                self._orient_or_raise(a, x, b) > 0
                and self._orient_or_raise(a, y, b) < 0
            ):
                entry = t
                break
        if entry == -1:
            raise AssertionError("no entry triangle for constraint segment")
        s = self._slot(entry, a)
        left = self.tv[3 * entry + (s + 2) % 3]   # strictly left of a->b
        right = self.tv[3 * entry + (s + 1) % 3]  # strictly right of a->b
        upper = [left]
        lower = [right]
        crossed = [entry]
        cur = entry
        while True:
            sx = self._slot(cur, self._opposite_vertex(cur, left, right))
            if self.tc[3 * cur + sx]:
                raise PlanarityError(
                    f"constraint ({a}, {b}) crosses constrained edge "
                    f"({left}, {right})"
                )
            nxt = self.tn[3 * cur + sx]
            if self._is_ghost(nxt):
                raise AssertionError("constraint walk left the hull")
            z = self._opposite_vertex(nxt, left, right)
            crossed.append(nxt)
            if z == b:
                break
            if self._orient_or_raise(a, b, z) > 0:
                upper.append(z)
                left = z
            else:
                lower.append(z)
                right = z
            cur = nxt
        inset = set(crossed)
        boundary = {}
        cdef int v1, v2, nb2
        for t in crossed:
            base = 3 * t
            for s in range(3):
                nb2 = self.tn[base + s]
                if nb2 in inset:
                    continue
                v1 = self.tv[base + (s + 1) % 3]
                v2 = self.tv[base + (s + 2) % 3]
                key = (v1, v2) if v1 < v2 else (v2, v1)
                boundary[key] = (nb2, self.tc[base + s])
        for t in crossed:
            self._kill(t)
        cdef vector[int] created
        self._retriangulate(a, b, upper, created)
        lower.reverse()
        self._retriangulate(b, a, lower, created)
        cdef size_t ci
        cdef int sn
        cdef char flag
        for ci in range(created.size()):
            t = created[ci]
            base = 3 * t
            for s in range(3):
                v1 = self.tv[base + (s + 1) % 3]
                v2 = self.tv[base + (s + 2) % 3]
                key = (v1, v2) if v1 < v2 else (v2, v1)
                hit = boundary.get(key)
                if hit is None:
                    continue
                nb2 = hit[0]
                flag = hit[1]
                sn = self._slot(nb2, self._opposite_vertex(nb2, v1, v2))
                self._link(t, s, nb2, sn)
                self.tc[base + s] = flag
                self.tc[3 * nb2 + sn] = flag
        self._stitch_pending(created, min(a, b), max(a, b))

    cdef void _retriangulate(self, int u0, int w0, list chain0, vector[int] & created) except *:
        cdef list stack = [(u0, w0, chain0)]
        cdef int u, w, c, ci, k
        cdef list chain
        while stack:
            u, w, chain = stack.pop()
            if not chain:
                continue
            c = -1
            ci = -1
            for k in range(len(chain)):
                v = chain[k]
                if self._orient_or_raise(u, w, v) <= 0:
                    continue
                if c == -1 or self._incircle_or_raise(u, w, c, v) > 0:
                    c = v
                    ci = k
            if c == -1:
                raise AssertionError("channel chain has no ccw candidate")
            created.push_back(self._new_tri(u, w, c))
            stack.append((u, c, chain[:ci]))
            stack.append((c, w, chain[ci + 1 :]))

    # -- driver ---------------------------------------------------------------

    def run(self, segments):
        order = hilbert_order(self.ex, self.ey)
        cdef int hint = self._init_first_triangle(order)
        cdef int idx
        for idx in range(3, self.n):
            hint = self._insert_point(order[idx], hint)
        for a, b in segments:
            self.insert_segment(a, b)
        return self._export()

    def _export(self):
        cdef list tris = []
        cdef list cons = []
        cdef list nbrs = []
        cdef dict remap = {}
        cdef int t, base, s
        for t in range(<int> self.alive.size()):
            if self.alive[t] and not self._is_ghost(t):
                remap[t] = len(tris)
                base = 3 * t
                tris.append((self.tv[base], self.tv[base + 1], self.tv[base + 2]))
                cons.append(
                    (
                        self.tc[base] != 0,
                        self.tc[base + 1] != 0,
                        self.tc[base + 2] != 0,
                    )
                )
        for t in remap:
            base = 3 * t
            nbrs.append(
                tuple(remap.get(self.tn[base + s], -1) for s in range(3))
            )
        return tris, nbrs, cons


def triangulate(ex, ey, segments):
    """Constrained Delaunay triangulation of exact integer coordinates.

    Returns (triangles, neighbors, constrained); ghost triangles are
    stripped and -1 marks the hull.  Exact-zero predicate results raise
    GeneralPositionError, so degenerate inputs are rejected lazily.
    """
    if len(ex) < 3:
        raise ValueError("triangulate needs at least 3 points")
    return _Tri(ex, ey).run(segments)


# ---------------------------------------------------------------------------
# Link/cut tree (Sleator-Tarjan, splay-based, no evert)
# ---------------------------------------------------------------------------

cdef class LinkCutTree:
    """Rooted dynamic forest with a cost on each (vertex, parent) edge; the
    compiled twin of `_purepy.LinkCutTree` (same API and semantics)."""

    cdef int n
    cdef vector[int] left, right, par, bestv
    cdef list ecost, bestc

    def __init__(self, n):
        self.n = n
        self.left.assign(n, -1)
        self.right.assign(n, -1)
        self.par.assign(n, -1)
        self.bestv.assign(n, -1)
        self.ecost = [None] * n
        self.bestc = [None] * n

    # -- splay machinery ------------------------------------------------

    cdef bint _is_sroot(self, int x):
        cdef int p = self.par[x]
        return p == -1 or (self.left[p] != x and self.right[p] != x)

    cdef void _pull(self, int x) except *:
        cdef int l = self.left[x]
        cdef int r = self.right[x]
        cdef int bv = -1
        bc = None
        if l != -1:
            bc = self.bestc[l]
            bv = self.bestv[l]
        c = self.ecost[x]
        if c is not None and (bc is None or c > bc):
            bc = c
            bv = x
        if r != -1:
            rc = self.bestc[r]
            if rc is not None and (bc is None or rc > bc):
                bc = rc
                bv = self.bestv[r]
        self.bestc[x] = bc
        self.bestv[x] = bv

    cdef void _rotate(self, int x) except *:
        cdef int p = self.par[x]
        cdef int g = self.par[p]
        if not self._is_sroot(p):
            if self.left[g] == p:
                self.left[g] = x
            else:
                self.right[g] = x
        self.par[x] = g
        if self.left[p] == x:
            self.left[p] = self.right[x]
            if self.right[x] != -1:
                self.par[self.right[x]] = p
            self.right[x] = p
        else:
            self.right[p] = self.left[x]
            if self.left[x] != -1:
                self.par[self.left[x]] = p
            self.left[x] = p
        self.par[p] = x
        self._pull(p)
        self._pull(x)

    cdef void _splay(self, int x) except *:
        cdef int p, g
        while not self._is_sroot(x):
            p = self.par[x]
            if self._is_sroot(p):
                self._rotate(x)
            else:
                g = self.par[p]
                if (self.left[g] == p) == (self.left[p] == x):
                    self._rotate(p)
                    self._rotate(x)
                else:
                    self._rotate(x)
                    self._rotate(x)

    cdef int _access(self, int v) except -9:
        cdef int last, w
        self._splay(v)
        if self.right[v] != -1:
            self.right[v] = -1
            self._pull(v)
        last = v
        w = self.par[v]
        while w != -1:
            self._splay(w)
            self.right[w] = v
            self._pull(w)
            self._rotate(v)
            last = w
            w = self.par[v]
        return last

    # -- operations -------------------------------------------------------

    def parent(self, int v):
        cdef int x
        self._access(v)
        x = self.left[v]
        if x == -1:
            return None
        while self.right[x] != -1:
            x = self.right[x]
        self._splay(x)
        return x

    def root(self, int v):
        cdef int x
        self._access(v)
        x = v
        while self.left[x] != -1:
            x = self.left[x]
        self._splay(x)
        return x

    def cost(self, int v):
        self._access(v)
        if self.left[v] == -1:
            raise ValueError("cost: vertex is a tree root")
        return self.ecost[v]

    def maxcost(self, int v):
        cdef int u
        self._access(v)
        if self.left[v] == -1:
            raise ValueError("maxcost: vertex is a tree root")
        u = self.bestv[v]
        if u == -1:
            raise AssertionError("maxcost aggregate missing")
        return u

    def link(self, int v, int u, x):
        self._access(v)
        if self.left[v] != -1:
            raise ValueError("link: v is not a tree root")
        if self.root(u) == v:
            raise ValueError("link: u and v are already in the same tree")
        self._access(u)
        self.par[v] = u
        self.right[u] = v
        self.ecost[v] = x
        self._pull(v)
        self._pull(u)

    def cut(self, int v):
        cdef int l
        self._access(v)
        l = self.left[v]
        if l == -1:
            raise ValueError("cut: vertex is a tree root")
        self.par[l] = -1
        self.left[v] = -1
        y = self.ecost[v]
        self.ecost[v] = None
        self._pull(v)
        return y

    def update_edge(self, int v, x):
        self._access(v)
        if self.left[v] == -1:
            raise ValueError("update_edge: vertex is a tree root")
        self.ecost[v] = self.ecost[v] + x
        self._pull(v)

    def lca(self, int v, int u):
        if v == u:
            return v
        if self.root(v) != self.root(u):
            return None
        self._access(v)
        return self._access(u)
