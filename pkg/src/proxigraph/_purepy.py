"""Pure-Python kernels: triangulation engine and link/cut tree.

This module is the fallback twin of the compiled `_speedups` extension; both
expose the same API and must produce identical results.  Coordinates arrive
as exact integers.  Predicates run a floating-point filter first (enabled
only when every coordinate is exactly representable as a double) and fall
back to exact big-integer evaluation when the filter is inconclusive.
"""

from __future__ import annotations

from .errors import GeneralPositionError, GeometryError, PlanarityError

BACKEND = "python"

GHOST = -1

# Shewchuk's static filter constants (epsilon = 2^-53)
_EPS = 1.1102230246251565e-16
_CCW_ERR_A = (3.0 + 16.0 * _EPS) * _EPS
_ICC_ERR_A = (10.0 + 96.0 * _EPS) * _EPS

_FLOAT_SAFE = 1 << 53


# ---------------------------------------------------------------------------
# Hilbert-curve insertion order
# ---------------------------------------------------------------------------

_HILBERT_BITS = 16


def _hilbert_d(x, y):
    d = 0
    s = 1 << (_HILBERT_BITS - 1)
    while s > 0:
        rx = 1 if (x & s) > 0 else 0
        ry = 1 if (y & s) > 0 else 0
        d += s * s * ((3 * rx) ^ ry)
        if ry == 0:
            if rx == 1:
                x = s - 1 - x
                y = s - 1 - y
            x, y = y, x
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
    side = (1 << _HILBERT_BITS) - 1
    keys = []
    for i in range(n):
        gx = ((ex[i] - minx) * side) // spanx
        gy = ((ey[i] - miny) * side) // spany
        keys.append((_hilbert_d(gx, gy), ex[i], ey[i], i))
    keys.sort()
    return [k[3] for k in keys]


# ---------------------------------------------------------------------------
# Triangulation engine
# ---------------------------------------------------------------------------

class _Tri:
    """Bowyer-Watson Delaunay triangulation with ghost triangles, plus
    constraint-segment insertion by channel retriangulation.

    Triangles are flat parallel arrays: verts tv, neighbors tn (across the
    edge opposite each vertex slot), constrained flags tc.  Ghost triangles
    carry GHOST in slot 2 and hold the reversed hull edge in slots 0, 1.
    """

    def __init__(self, ex, ey):
        self.ex = ex
        self.ey = ey
        self.n = len(ex)
        self.filter_ok = all(
            -_FLOAT_SAFE <= v <= _FLOAT_SAFE for v in ex
        ) and all(-_FLOAT_SAFE <= v <= _FLOAT_SAFE for v in ey)
        if self.filter_ok:
            self.fx = [float(v) for v in ex]
            self.fy = [float(v) for v in ey]
        self.tv = []
        self.tn = []
        self.tc = []
        self.alive = []
        self.free = []
        self.vtri = [-1] * self.n
        self.mark = []
        self.stamp = 0

    # -- predicates -----------------------------------------------------

    def _orient(self, i, j, k):
        if self.filter_ok:
            fx, fy = self.fx, self.fy
            ax, ay = fx[i], fy[i]
            detleft = (fx[j] - ax) * (fy[k] - ay)
            detright = (fy[j] - ay) * (fx[k] - ax)
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
            err = _CCW_ERR_A * detsum
            if det >= err:
                return 1
            if -det >= err:
                return -1
        ex, ey = self.ex, self.ey
        det = (ex[j] - ex[i]) * (ey[k] - ey[i]) - (ey[j] - ey[i]) * (ex[k] - ex[i])
        return 1 if det > 0 else (-1 if det < 0 else 0)

    def _incircle(self, i, j, k, l):
        """Sign of the incircle determinant for ccw triangle (i, j, k)."""
        if self.filter_ok:
            fx, fy = self.fx, self.fy
            adx = fx[i] - fx[l]
            ady = fy[i] - fy[l]
            bdx = fx[j] - fx[l]
            bdy = fy[j] - fy[l]
            cdx = fx[k] - fx[l]
            cdy = fy[k] - fy[l]
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
                (abs(bdxcdy) + abs(cdxbdy)) * alift
                + (abs(cdxady) + abs(adxcdy)) * blift
                + (abs(adxbdy) + abs(bdxady)) * clift
            )
            err = _ICC_ERR_A * permanent
            if det > err:
                return 1
            if -det > err:
                return -1
        ex, ey = self.ex, self.ey
        adx = ex[i] - ex[l]
        ady = ey[i] - ey[l]
        bdx = ex[j] - ex[l]
        bdy = ey[j] - ey[l]
        cdx = ex[k] - ex[l]
        cdy = ey[k] - ey[l]
        det = (
            (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
            + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
            + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
        )
        return 1 if det > 0 else (-1 if det < 0 else 0)

    def _orient_or_raise(self, i, j, k):
        s = self._orient(i, j, k)
        if s == 0:
            raise GeneralPositionError("collinear", sorted((i, j, k)))
        return s

    def _incircle_or_raise(self, i, j, k, l):
        s = self._incircle(i, j, k, l)
        if s == 0:
            raise GeneralPositionError("cocircular", sorted((i, j, k, l)))
        return s

    # -- triangle bookkeeping --------------------------------------------

    def _new_tri(self, a, b, c):
        if self.free:
            t = self.free.pop()
            self.alive[t] = True
            base = 3 * t
            self.tv[base] = a
            self.tv[base + 1] = b
            self.tv[base + 2] = c
            self.tn[base] = self.tn[base + 1] = self.tn[base + 2] = -1
            self.tc[base] = self.tc[base + 1] = self.tc[base + 2] = False
        else:
            t = len(self.alive)
            self.tv.extend((a, b, c))
            self.tn.extend((-1, -1, -1))
            self.tc.extend((False, False, False))
            self.alive.append(True)
            self.mark.append(0)
        for v in (a, b, c):
            if v != GHOST:
                self.vtri[v] = t
        return t

    def _kill(self, t):
        self.alive[t] = False
        self.free.append(t)

    def _slot(self, t, v):
        base = 3 * t
        if self.tv[base] == v:
            return 0
        if self.tv[base + 1] == v:
            return 1
        if self.tv[base + 2] == v:
            return 2
        raise AssertionError(f"vertex {v} not in triangle {t}")

    def _link(self, t1, s1, t2, s2):
        self.tn[3 * t1 + s1] = t2
        self.tn[3 * t2 + s2] = t1

    def _is_ghost(self, t):
        return self.tv[3 * t + 2] == GHOST

    def _opposite_vertex(self, t, va, vb):
        base = 3 * t
        for s in range(3):
            v = self.tv[base + s]
            if v != va and v != vb:
                return v
        raise AssertionError("degenerate triangle")

    # -- initialization ----------------------------------------------------

    def _init_first_triangle(self, order):
        i0, i1, i2 = order[0], order[1], order[2]
        s = self._orient(i0, i1, i2)
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

    def _in_cavity(self, t, p):
        base = 3 * t
        a, b = self.tv[base], self.tv[base + 1]
        if self.tv[base + 2] == GHOST:
            return self._orient_or_raise(a, b, p) > 0
        return self._incircle_or_raise(a, b, self.tv[base + 2], p) > 0

    def _locate(self, p, hint):
        t = hint
        prev = -1
        guard = 4 * len(self.alive) + 64
        while guard > 0:
            guard -= 1
            base = 3 * t
            if self.tv[base + 2] == GHOST:
                if self._orient_or_raise(self.tv[base], self.tv[base + 1], p) > 0:
                    return t
                prev, t = t, self.tn[base + 2]
                continue
            a, b, c = self.tv[base], self.tv[base + 1], self.tv[base + 2]
            nxt = -1
            if self.tn[base + 2] != prev and self._orient_or_raise(a, b, p) < 0:
                nxt = self.tn[base + 2]
            elif self.tn[base] != prev and self._orient_or_raise(b, c, p) < 0:
                nxt = self.tn[base]
            elif self.tn[base + 1] != prev and self._orient_or_raise(c, a, p) < 0:
                nxt = self.tn[base + 1]
            if nxt == -1:
                return t
            prev, t = t, nxt
        raise GeometryError("point location did not terminate")

    # -- Bowyer-Watson insertion -----------------------------------------------

    def _insert_point(self, p, hint):
        t0 = self._locate(p, hint)
        self.stamp += 1
        stamp = self.stamp
        self.mark[t0] = stamp
        cavity = [t0]
        stack = [t0]
        while stack:
            t = stack.pop()
            base = 3 * t
            for s in range(3):
                nb = self.tn[base + s]
                if self.mark[nb] != stamp and self._in_cavity(nb, p):
                    self.mark[nb] = stamp
                    cavity.append(nb)
                    stack.append(nb)
        bedges = []
        for t in cavity:
            base = 3 * t
            for s in range(3):
                nb = self.tn[base + s]
                if self.mark[nb] == stamp:
                    continue
                va = self.tv[base + (s + 1) % 3]
                vb = self.tv[base + (s + 2) % 3]
                bedges.append((va, vb, nb, self.tc[base + s]))
        for t in cavity:
            self._kill(t)
        created = []
        for va, vb, nb, flag in bedges:
            # conceptual new triangle (p, va, vb); rotate GHOST into slot 2
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
            created.append(t)
        self._stitch_pending(created, None)
        return created[0]

    def _stitch_pending(self, created, constrained_key):
        """Link the not-yet-linked edges among new triangles; if an edge
        matches constrained_key, flag it constrained on both sides."""
        pending = {}
        for t in created:
            base = 3 * t
            for s in range(3):
                if self.tn[base + s] != -1:
                    continue
                v1 = self.tv[base + (s + 1) % 3]
                v2 = self.tv[base + (s + 2) % 3]
                key = (v1, v2) if v1 < v2 else (v2, v1)
                other = pending.pop(key, None)
                if other is None:
                    pending[key] = (t, s)
                else:
                    self._link(t, s, other[0], other[1])
                    if key == constrained_key:
                        self.tc[base + s] = True
                        self.tc[3 * other[0] + other[1]] = True
        if pending:
            raise AssertionError("unmatched edges while stitching")

    # -- constraint segments -------------------------------------------------

    def _incident(self, v):
        t0 = self.vtri[v]
        out = [t0]
        cur = t0
        guard = 4 * len(self.alive) + 64
        while guard > 0:
            guard -= 1
            s = self._slot(cur, v)
            cur = self.tn[3 * cur + (s + 2) % 3]
            if cur == t0:
                return out
            out.append(cur)
        raise AssertionError("vertex fan does not close")

    def _mark_constrained(self, t, s):
        self.tc[3 * t + s] = True
        nb = self.tn[3 * t + s]
        va = self.tv[3 * t + (s + 1) % 3]
        vb = self.tv[3 * t + (s + 2) % 3]
        sn = self._slot(nb, self._opposite_vertex(nb, va, vb))
        self.tc[3 * nb + sn] = True

    def insert_segment(self, a, b):
        for t in self._incident(a):
            base = 3 * t
            for s in range(3):
                if self.tv[base + s] == b:
                    se = 3 - self._slot(t, a) - s
                    self._mark_constrained(t, se)
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
        for t in crossed:
            base = 3 * t
            for s in range(3):
                nb = self.tn[base + s]
                if nb in inset:
                    continue
                v1 = self.tv[base + (s + 1) % 3]
                v2 = self.tv[base + (s + 2) % 3]
                key = (v1, v2) if v1 < v2 else (v2, v1)
                boundary[key] = (nb, self.tc[base + s])
        for t in crossed:
            self._kill(t)
        created = []
        self._retriangulate(a, b, upper, created)
        self._retriangulate(b, a, lower[::-1], created)
        # reconnect to the untouched outside first, then stitch new-new edges
        ckey = (a, b) if a < b else (b, a)
        for t in created:
            base = 3 * t
            for s in range(3):
                v1 = self.tv[base + (s + 1) % 3]
                v2 = self.tv[base + (s + 2) % 3]
                key = (v1, v2) if v1 < v2 else (v2, v1)
                hit = boundary.get(key)
                if hit is None:
                    continue
                nb, flag = hit
                sn = self._slot(nb, self._opposite_vertex(nb, v1, v2))
                self._link(t, s, nb, sn)
                self.tc[base + s] = flag
                self.tc[3 * nb + sn] = flag
        self._stitch_pending(created, ckey)

    def _retriangulate(self, u, w, chain, created):
        """Fill the channel side left of u->w bounded by the vertex chain.

        Candidate apexes are the chain vertices strictly left of the base;
        the apex whose circumcircle with the base is empty wins (same
        selection as Delaunay hole filling).
        """
        stack = [(u, w, chain)]
        while stack:
            u, w, chain = stack.pop()
            if not chain:
                continue
            c = -1
            ci = -1
            for k, v in enumerate(chain):
                if self._orient_or_raise(u, w, v) <= 0:
                    continue
                if c == -1 or self._incircle_or_raise(u, w, c, v) > 0:
                    c, ci = v, k
            if c == -1:
                raise AssertionError("channel chain has no ccw candidate")
            created.append(self._new_tri(u, w, c))
            stack.append((u, c, chain[:ci]))
            stack.append((c, w, chain[ci + 1 :]))

    # -- driver ---------------------------------------------------------------

    def run(self, segments):
        order = hilbert_order(self.ex, self.ey)
        hint = self._init_first_triangle(order)
        for idx in range(3, self.n):
            hint = self._insert_point(order[idx], hint)
        for a, b in segments:
            self.insert_segment(a, b)
        return self._export()

    def _export(self):
        tris = []
        cons = []
        remap = {}
        for t in range(len(self.alive)):
            if self.alive[t] and not self._is_ghost(t):
                remap[t] = len(tris)
                base = 3 * t
                tris.append((self.tv[base], self.tv[base + 1], self.tv[base + 2]))
                cons.append((self.tc[base], self.tc[base + 1], self.tc[base + 2]))
        nbrs = []
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

class LinkCutTree:
    """Rooted dynamic forest with a cost on each (vertex, parent) edge.

    parent/root/cost/maxcost/link/cut/update_edge/lca, each amortized
    O(log n).  The cost of an edge is stored at its child vertex; a root
    stores None.  maxcost breaks ties toward the vertex closest to the
    root.  Costs may be any mutually comparable values supporting `+`.
    """

    __slots__ = ("n", "left", "right", "par", "ecost", "bestc", "bestv")

    def __init__(self, n):
        self.n = n
        self.left = [-1] * n
        self.right = [-1] * n
        self.par = [-1] * n
        self.ecost = [None] * n
        self.bestc = [None] * n
        self.bestv = [-1] * n

    # -- splay machinery ------------------------------------------------

    def _is_sroot(self, x):
        p = self.par[x]
        return p == -1 or (self.left[p] != x and self.right[p] != x)

    def _pull(self, x):
        # subtree max, preferring the in-order leftmost vertex on ties
        bc = None
        bv = -1
        l = self.left[x]
        if l != -1:
            bc = self.bestc[l]
            bv = self.bestv[l]
        c = self.ecost[x]
        if c is not None and (bc is None or c > bc):
            bc = c
            bv = x
        r = self.right[x]
        if r != -1:
            rc = self.bestc[r]
            if rc is not None and (bc is None or rc > bc):
                bc = rc
                bv = self.bestv[r]
        self.bestc[x] = bc
        self.bestv[x] = bv

    def _rotate(self, x):
        p = self.par[x]
        g = self.par[p]
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

    def _splay(self, x):
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

    def _access(self, v):
        """Make root..v the preferred path; returns the last path-parent
        joint (the lca when called right after accessing the other vertex)."""
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

    def parent(self, v):
        self._access(v)
        x = self.left[v]
        if x == -1:
            return None
        while self.right[x] != -1:
            x = self.right[x]
        self._splay(x)
        return x

    def root(self, v):
        self._access(v)
        x = v
        while self.left[x] != -1:
            x = self.left[x]
        self._splay(x)
        return x

    def cost(self, v):
        self._access(v)
        if self.left[v] == -1:
            raise ValueError("cost: vertex is a tree root")
        return self.ecost[v]

    def maxcost(self, v):
        self._access(v)
        if self.left[v] == -1:
            raise ValueError("maxcost: vertex is a tree root")
        u = self.bestv[v]
        if u == -1:
            raise AssertionError("maxcost aggregate missing")
        return u

    def link(self, v, u, x):
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

    def cut(self, v):
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

    def update_edge(self, v, x):
        self._access(v)
        if self.left[v] == -1:
            raise ValueError("update_edge: vertex is a tree root")
        self.ecost[v] = self.ecost[v] + x
        self._pull(v)

    def lca(self, v, u):
        if v == u:
            return v
        if self.root(v) != self.root(u):
            return None
        self._access(v)
        return self._access(u)
