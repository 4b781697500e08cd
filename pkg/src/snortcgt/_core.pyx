# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and results as ``_corepy``.

Boards are held in fixed 64-vertex C structs; larger boards are delegated
to the pure-Python implementation.
"""

from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref

from snortcgt import _corepy

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 64

ctypedef unsigned long long u64


cdef class GameTable:
    cdef vector[vector[int]] _left
    cdef vector[vector[int]] _right
    cdef unordered_map[u64, char] _leq
    cdef vector[signed char] _lf
    cdef vector[signed char] _rf

    def add(self, left, right):
        cdef vector[int] lv
        cdef vector[int] rv
        for x in left:
            lv.push_back(x)
        for x in right:
            rv.push_back(x)
        self._left.push_back(lv)
        self._right.push_back(rv)
        self._lf.push_back(-1)
        self._rf.push_back(-1)
        return self._left.size() - 1

    def size(self):
        return self._left.size()

    def memo_size(self):
        return self._leq.size()

    def clear_memo(self):
        self._leq.clear()

    cdef bint _leq_c(self, int g, int h) noexcept:
        if g == h:
            return True
        cdef u64 key = (<u64>g << 32) | <u64>h
        cdef unordered_map[u64, char].iterator it = self._leq.find(key)
        if it != self._leq.end():
            return deref(it).second
        cdef bint res = True
        cdef size_t i
        cdef vector[int]* opts = &self._left[g]
        for i in range(opts.size()):
            if self._leq_c(h, opts[0][i]):
                res = False
                break
        if res:
            opts = &self._right[h]
            for i in range(opts.size()):
                if self._leq_c(opts[0][i], g):
                    res = False
                    break
        self._leq[key] = res
        return res

    def leq(self, int g, int h):
        return self._leq_c(g, h)

    cdef bint _lf_c(self, int g) noexcept:
        cdef signed char r = self._lf[g]
        if r >= 0:
            return r
        cdef bint res = False
        cdef size_t i
        cdef vector[int]* opts = &self._left[g]
        for i in range(opts.size()):
            if not self._rf_c(opts[0][i]):
                res = True
                break
        self._lf[g] = res
        return res

    cdef bint _rf_c(self, int g) noexcept:
        cdef signed char r = self._rf[g]
        if r >= 0:
            return r
        cdef bint res = False
        cdef size_t i
        cdef vector[int]* opts = &self._right[g]
        for i in range(opts.size()):
            if not self._lf_c(opts[0][i]):
                res = True
                break
        self._rf[g] = res
        return res

    def left_first(self, int g):
        return self._lf_c(g)

    def right_first(self, int g):
        return self._rf_c(g)


# --- boards ------------------------------------------------------------------

cdef struct Board:
    int n
    unsigned char t[MAXN]
    u64 a[MAXN]


cdef int load(tints, adj, Board* b) except -1:
    cdef int n = len(tints)
    if n > MAXN:
        raise OverflowError("board too large for compiled kernel")
    b.n = n
    cdef int i
    for i in range(n):
        b.t[i] = tints[i]
        b.a[i] = adj[i]
    return 0


cdef tuple board_tuples(const Board* b):
    cdef int i
    return (tuple([b.t[i] for i in range(b.n)]), tuple([b.a[i] for i in range(b.n)]))


cdef void c_induced(const Board* src, const int* keep, int k, Board* dst) noexcept nogil:
    cdef int idx[MAXN]
    cdef int i, u
    cdef u64 m, nm
    for i in range(src.n):
        idx[i] = -1
    for i in range(k):
        idx[keep[i]] = i
    dst.n = k
    for i in range(k):
        dst.t[i] = src.t[keep[i]]
        m = src.a[keep[i]]
        nm = 0
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            if idx[u] >= 0:
                nm |= (<u64>1) << idx[u]
        dst.a[i] = nm


cdef int c_normalize(const Board* src, Board* dst, int* keep) noexcept nogil:
    cdef int k = 0
    cdef int v
    for v in range(src.n):
        if src.t[v] != 3:
            keep[k] = v
            k += 1
    c_induced(src, keep, k, dst)
    cdef u64 blue = 0, red = 0
    for v in range(k):
        if dst.t[v] == 1:
            blue |= (<u64>1) << v
        elif dst.t[v] == 2:
            red |= (<u64>1) << v
    for v in range(k):
        if dst.t[v] == 1:
            dst.a[v] &= ~blue
        elif dst.t[v] == 2:
            dst.a[v] &= ~red
    return k


cdef int c_components(const Board* b, u64* comps) noexcept nogil:
    cdef u64 seen = 0, comp, frontier, nxt, f
    cdef int s, u, nc = 0
    for s in range(b.n):
        if (seen >> s) & 1:
            continue
        comp = (<u64>1) << s
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                u = __builtin_ctzll(f)
                f &= f - 1
                nxt |= b.a[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps[nc] = comp
        nc += 1
    return nc


cdef int mask_list(u64 m, int* out) noexcept nogil:
    cdef int k = 0
    while m:
        out[k] = __builtin_ctzll(m)
        m &= m - 1
        k += 1
    return k


cdef int c_twins(const Board* b, int* kind, int* start, int* members) noexcept nogil:
    """Twin classes in order of least member; returns the class count."""
    cdef int assigned[MAXN]
    cdef int v, w, nc = 0, pos = 0, size
    cdef u64 cv
    for v in range(b.n):
        assigned[v] = 0
    for v in range(b.n):
        if assigned[v]:
            continue
        start[nc] = pos
        members[pos] = v
        pos += 1
        assigned[v] = 1
        size = 1
        for w in range(v + 1, b.n):
            if not assigned[w] and b.t[w] == b.t[v] and b.a[w] == b.a[v]:
                members[pos] = w
                pos += 1
                assigned[w] = 1
                size += 1
        if size > 1:
            kind[nc] = 0
        else:
            cv = b.a[v] | ((<u64>1) << v)
            for w in range(v + 1, b.n):
                if not assigned[w] and b.t[w] == b.t[v] and (b.a[w] | ((<u64>1) << w)) == cv:
                    members[pos] = w
                    pos += 1
                    assigned[w] = 1
                    size += 1
            kind[nc] = 1 if size > 1 else 0
        nc += 1
    start[nc] = pos
    return nc


cdef int sig_cmp(const int* sa, int da, const int* sb, int db) noexcept nogil:
    # colour first, then neighbour colours lexicographically, shorter first
    cdef int i, m = da if da < db else db
    for i in range(m + 1):
        if sa[i] != sb[i]:
            return -1 if sa[i] < sb[i] else 1
    if da != db:
        return -1 if da < db else 1
    return 0


cdef int c_refine(const u64* adj, int n, int* cols) noexcept nogil:
    """Refine ``cols`` in place to an equitable partition; returns cell count."""
    cdef int sig[MAXN][MAXN + 1]
    cdef int deg[MAXN]
    cdef int order[MAXN]
    cdef int newc[MAXN]
    cdef int v, u, i, j, d, x, key, ncells, cur
    cdef u64 m
    ncells = 0
    for v in range(n):
        for u in range(v):
            if cols[u] == cols[v]:
                break
        else:
            ncells += 1
    while True:
        for v in range(n):
            sig[v][0] = cols[v]
            d = 0
            m = adj[v]
            while m:
                u = __builtin_ctzll(m)
                m &= m - 1
                x = cols[u]
                # insertion into sorted run sig[v][1..d]
                j = d
                while j > 0 and sig[v][j] > x:
                    sig[v][j + 1] = sig[v][j]
                    j -= 1
                sig[v][j + 1] = x
                d += 1
            deg[v] = d
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            key = order[i]
            j = i - 1
            while j >= 0 and sig_cmp(sig[order[j]], deg[order[j]], sig[key], deg[key]) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = key
        cur = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if sig_cmp(sig[order[i - 1]], deg[order[i - 1]], sig[order[i]], deg[order[i]]) != 0:
                cur += 1
            newc[order[i]] = cur
        for v in range(n):
            cols[v] = newc[v]
        if cur + 1 == ncells:
            return ncells
        ncells = cur + 1


cdef struct Search:
    int n
    const u64* adj
    const int* base
    int have_best
    int best_cols[MAXN]
    u64 best_rows[MAXN]
    int best_order[MAXN]


cdef void c_search(Search* s, int* cols_in) noexcept nogil:
    cdef int cols[MAXN]
    cdef int nxt[MAXN]
    cdef int sizes[MAXN]
    cdef int order[MAXN]
    cdef int pos[MAXN]
    cdef u64 rows[MAXN]
    cdef int n = s.n
    cdef int v, u, c, i, ncells, target, best_size, cmp
    cdef u64 m, r
    for v in range(n):
        cols[v] = cols_in[v]
    ncells = c_refine(s.adj, n, cols)
    if ncells == n:
        for v in range(n):
            order[cols[v]] = v
            pos[v] = cols[v]
        for i in range(n):
            m = s.adj[order[i]]
            r = 0
            while m:
                u = __builtin_ctzll(m)
                m &= m - 1
                r |= (<u64>1) << pos[u]
            rows[i] = r
        cmp = 0
        if s.have_best:
            for i in range(n):
                if s.base[order[i]] != s.best_cols[i]:
                    cmp = -1 if s.base[order[i]] < s.best_cols[i] else 1
                    break
            if cmp == 0:
                for i in range(n):
                    if rows[i] != s.best_rows[i]:
                        cmp = -1 if rows[i] < s.best_rows[i] else 1
                        break
        if not s.have_best or cmp < 0:
            s.have_best = 1
            for i in range(n):
                s.best_cols[i] = s.base[order[i]]
                s.best_rows[i] = rows[i]
                s.best_order[i] = order[i]
        return
    for c in range(n):
        sizes[c] = 0
    for v in range(n):
        sizes[cols[v]] += 1
    target = -1
    best_size = n + 1
    for c in range(ncells):
        if sizes[c] > 1 and sizes[c] < best_size:
            best_size = sizes[c]
            target = c
    for v in range(n):
        if cols[v] != target:
            continue
        for u in range(n):
            c = cols[u]
            nxt[u] = 2 * c + (1 if (c > target or (c == target and u != v)) else 0)
        c_search(s, nxt)


cdef void c_canonical_order(const u64* adj, int n, const int* colors, int* out) noexcept nogil:
    cdef Search s
    cdef int start[MAXN]
    cdef int i, j, r
    s.n = n
    s.adj = adj
    s.base = colors
    s.have_best = 0
    # rank of each colour among the distinct colours present
    for i in range(n):
        r = 0
        for j in range(n):
            if colors[j] < colors[i]:
                # count distinct smaller colours only
                if not _seen_before(colors, j):
                    r += 1
        start[i] = r
    c_search(&s, start)
    for i in range(n):
        out[i] = s.best_order[i]


cdef inline bint _seen_before(const int* colors, int j) noexcept nogil:
    cdef int k
    for k in range(j):
        if colors[k] == colors[j]:
            return True
    return False


def canonical_order(adj, colors):
    cdef int n = len(adj)
    if n == 0:
        return []
    if n > MAXN:
        return _corepy.canonical_order(adj, colors)
    cdef u64 a[MAXN]
    cdef int cs[MAXN]
    cdef int out[MAXN]
    cdef int i
    for i in range(n):
        a[i] = adj[i]
        cs[i] = colors[i]
    c_canonical_order(a, n, cs, out)
    return [out[i] for i in range(n)]


cdef tuple c_canonical_board(const Board* b):
    cdef int n = b.n
    if n == 0:
        return ((), (), b"\x00")
    cdef int kind[MAXN + 1]
    cdef int start[MAXN + 1]
    cdef int members[MAXN]
    cdef int reps[MAXN]
    cdef int colors[MAXN]
    cdef int order[MAXN]
    cdef int perm[MAXN]
    cdef Board q
    cdef Board c
    cdef int nc, i, j, k, width
    with nogil:
        nc = c_twins(b, kind, start, members)
        for i in range(nc):
            reps[i] = members[start[i]]
        c_induced(b, reps, nc, &q)
        for i in range(nc):
            colors[i] = ((start[i + 1] - start[i]) << 3) | (kind[i] << 2) | q.t[i]
        c_canonical_order(q.a, nc, colors, order)
        k = 0
        for i in range(nc):
            for j in range(start[order[i]], start[order[i] + 1]):
                perm[k] = members[j]
                k += 1
        c_induced(b, perm, n, &c)
    width = (n + 7) // 8
    buf = bytearray(1 + n + n * width)
    buf[0] = n
    for i in range(n):
        buf[1 + i] = c.t[i]
    cdef u64 m
    for i in range(n):
        m = c.a[i]
        for j in range(width):
            buf[1 + n + i * width + j] = (m >> (8 * j)) & 0xFF
    t, a = board_tuples(&c)
    return (t, a, bytes(buf))


def canonical_board(tints, adj):
    if len(tints) > MAXN:
        return _corepy.canonical_board(tints, adj)
    cdef Board b
    load(tints, adj, &b)
    return c_canonical_board(&b)


def induced(tints, adj, keep):
    if len(tints) > MAXN:
        return _corepy.induced(tints, adj, keep)
    cdef Board b, d
    cdef int ks[MAXN]
    cdef int i, k = len(keep)
    load(tints, adj, &b)
    for i in range(k):
        ks[i] = keep[i]
    c_induced(&b, ks, k, &d)
    return board_tuples(&d)


def normalize_board(tints, adj):
    if len(tints) > MAXN:
        return _corepy.normalize_board(tints, adj)
    cdef Board b, d
    cdef int keep[MAXN]
    cdef int i, k
    load(tints, adj, &b)
    k = c_normalize(&b, &d, keep)
    t, a = board_tuples(&d)
    return t, a, [keep[i] for i in range(k)]


def board_components(adj):
    cdef int n = len(adj)
    if n > MAXN:
        return _corepy.board_components(adj)
    cdef Board b
    cdef u64 comps[MAXN]
    cdef int vs[MAXN]
    cdef int i, j, k, nc
    b.n = n
    for i in range(n):
        b.t[i] = 0
        b.a[i] = adj[i]
    nc = c_components(&b, comps)
    out = []
    for i in range(nc):
        k = mask_list(comps[i], vs)
        out.append([vs[j] for j in range(k)])
    return out


def twin_classes(tints, adj):
    if len(tints) > MAXN:
        return _corepy.twin_classes(tints, adj)
    cdef Board b
    cdef int kind[MAXN + 1]
    cdef int start[MAXN + 1]
    cdef int members[MAXN]
    cdef int i, j, nc
    load(tints, adj, &b)
    nc = c_twins(&b, kind, start, members)
    return [(kind[i], [members[j] for j in range(start[i], start[i + 1])]) for i in range(nc)]


cdef list c_split(const Board* b):
    cdef Board norm, comp
    cdef int keep[MAXN]
    cdef int vs[MAXN]
    cdef u64 comps[MAXN]
    cdef int i, k, nc
    c_normalize(b, &norm, keep)
    nc = c_components(&norm, comps)
    out = []
    for i in range(nc):
        k = mask_list(comps[i], vs)
        c_induced(&norm, vs, k, &comp)
        out.append(c_canonical_board(&comp))
    return out


def split_canonical(tints, adj):
    if len(tints) > MAXN:
        return _corepy.split_canonical(tints, adj)
    cdef Board b
    load(tints, adj, &b)
    return c_split(&b)


def move_children(tints, adj):
    if len(tints) > MAXN:
        return _corepy.move_children(tints, adj)
    cdef Board b, child
    cdef int kind[MAXN + 1]
    cdef int start[MAXN + 1]
    cdef int members[MAXN]
    cdef int i, v, u, nc, p
    cdef unsigned char t, tint
    cdef u64 m
    load(tints, adj, &b)
    nc = c_twins(&b, kind, start, members)
    left = []
    right = []
    for i in range(nc):
        v = members[start[i]]
        t = b.t[v]
        for p in range(2):
            tint = 1 if p == 0 else 2
            if t != 0 and t != tint:
                continue
            child = b
            m = b.a[v]
            while m:
                u = __builtin_ctzll(m)
                m &= m - 1
                child.t[u] |= tint
            child.t[v] = 3
            (left if p == 0 else right).append(c_split(&child))
    return left, right
