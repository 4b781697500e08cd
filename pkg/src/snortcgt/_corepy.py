"""Pure-Python hot kernels.

Mirrors ``_core.pyx`` function for function; ``snortcgt.kernels`` picks the
compiled module when it imports and falls back to this one otherwise.
"""

from __future__ import annotations

import sys

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class GameTable:
    """Option lists of interned games, addressed by integer id.

    Deduplication is the caller's job: ``add`` always allocates a new id.
    Comparison and outcome results are memoized per id (pair).
    """

    def __init__(self):
        self._left: list[tuple[int, ...]] = []
        self._right: list[tuple[int, ...]] = []
        self._leq: dict[int, bool] = {}
        self._lf: dict[int, bool] = {}
        self._rf: dict[int, bool] = {}

    def add(self, left, right) -> int:
        self._left.append(tuple(left))
        self._right.append(tuple(right))
        return len(self._left) - 1

    def size(self) -> int:
        return len(self._left)

    def memo_size(self) -> int:
        return len(self._leq)

    def clear_memo(self) -> None:
        self._leq.clear()

    def leq(self, g: int, h: int) -> bool:
        if g == h:
            return True
        key = (g << 32) | h
        memo = self._leq
        res = memo.get(key)
        if res is not None:
            return res
        res = True
        leq = self.leq
        for gl in self._left[g]:
            if leq(h, gl):
                res = False
                break
        if res:
            for hr in self._right[h]:
                if leq(hr, g):
                    res = False
                    break
        memo[key] = res
        return res

    def left_first(self, g: int) -> bool:
        """True if Left, moving first in ``g``, wins."""
        res = self._lf.get(g)
        if res is None:
            res = any(not self.right_first(x) for x in self._left[g])
            self._lf[g] = res
        return res

    def right_first(self, g: int) -> bool:
        res = self._rf.get(g)
        if res is None:
            res = any(not self.left_first(x) for x in self._right[g])
            self._rf[g] = res
        return res


def _refine(adj, colors, n):
    """Equitable refinement; returns colours renumbered 0..k-1.

    A vertex's signature is its colour followed by the sorted colours of its
    neighbours; new colours are signature ranks.
    """
    ncells = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in _bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ordered = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(ordered)}
        colors = [rank[s] for s in sigs]
        if len(ordered) == ncells:
            return colors
        ncells = len(ordered)


def canonical_order(adj, colors):
    """Canonical vertex order of a vertex-coloured graph.

    ``adj`` is a list of neighbour bitmasks and ``colors`` a list of small
    non-negative ints. Returns ``order`` (canonical position -> original
    vertex) such that relabelling by it gives the same certificate for every
    isomorphic input. Colour refinement with individualization; all branches
    are explored and the least certificate wins.
    """
    n = len(adj)
    if n == 0:
        return []
    base = list(colors)
    # initial ranks by colour value so the starting partition is label-free
    rank = {c: i for i, c in enumerate(sorted(set(base)))}
    best = [None, None]

    def certificate(order):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = 0
            for u in _bits(adj[v]):
                m |= 1 << pos[u]
            rows.append(m)
        return tuple(base[v] for v in order), tuple(rows)

    def search(cols):
        cols = _refine(adj, cols, n)
        if max(cols) + 1 == n:
            order = sorted(range(n), key=cols.__getitem__)
            cert = certificate(order)
            if best[0] is None or cert < best[0]:
                best[0] = cert
                best[1] = order
            return
        # target cell: smallest non-singleton cell, ties by lowest colour
        sizes = [0] * n
        for c in cols:
            sizes[c] += 1
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        for v in range(n):
            if cols[v] == target:
                search([2 * c + (1 if c > target or (c == target and u != v) else 0)
                        for u, c in enumerate(cols)])

    search([rank[c] for c in base])
    return best[1]


# --- boards: (tints, adj) with tints in {0 none, 1 blue, 2 red, 3 dead} ---

def _bits(m):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def induced(tints, adj, keep):
    """Sub-board on the listed vertices, relabelled 0..k-1 in that order."""
    idx = {v: i for i, v in enumerate(keep)}
    new_adj = []
    for v in keep:
        m = 0
        for u in _bits(adj[v]):
            i = idx.get(u)
            if i is not None:
                m |= 1 << i
        new_adj.append(m)
    return tuple(tints[v] for v in keep), tuple(new_adj)


def normalize_board(tints, adj):
    """Drop dead vertices and same-tint edges; also returns the kept indices."""
    keep = [v for v, t in enumerate(tints) if t != 3]
    tints, adj = induced(tints, adj, keep)
    blue = red = 0
    for v, t in enumerate(tints):
        if t == 1:
            blue |= 1 << v
        elif t == 2:
            red |= 1 << v
    if blue or red:
        adj = tuple(m & ~blue if t == 1 else m & ~red if t == 2 else m
                    for m, t in zip(adj, tints))
    return tints, adj, keep


def board_components(adj):
    """Connected components as ascending vertex lists, by least vertex."""
    seen = 0
    comps = []
    for s in range(len(adj)):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def twin_classes(tints, adj):
    """``(kind, members)`` pairs: kind 1 for true twins (adjacent), else 0.

    False twins share tint and open neighbourhood; true twins share tint and
    closed neighbourhood. Classes come in order of their least member.
    """
    n = len(adj)
    groups = {}
    for v in range(n):
        groups.setdefault((tints[v], adj[v]), []).append(v)
    classes = []
    rest = []
    for members in groups.values():
        if len(members) > 1:
            classes.append((0, members))
        else:
            rest.append(members[0])
    closed = {}
    for v in rest:
        closed.setdefault((tints[v], adj[v] | 1 << v), []).append(v)
    for members in closed.values():
        classes.append((1 if len(members) > 1 else 0, members))
    classes.sort(key=lambda km: km[1][0])
    return classes


def canonical_board(tints, adj):
    """``(tints, adj, key)`` of the canonical relabelling of a board.

    Twin classes collapse to one coloured vertex before labelling, which
    keeps the individualization search small on star-like graphs.
    """
    n = len(tints)
    if n == 0:
        return (), (), b"\x00"
    classes = twin_classes(tints, adj)
    reps = [m[0] for _, m in classes]
    qt, qadj = induced(tints, adj, reps)
    colors = [(len(m) << 3) | (kind << 2) | t for (kind, m), t in zip(classes, qt)]
    order = canonical_order(list(qadj), colors)
    perm = [v for q in order for v in classes[q][1]]
    ct, cadj = induced(tints, adj, perm)
    width = (n + 7) // 8
    key = bytes([n]) + bytes(ct) + b"".join(m.to_bytes(width, "little") for m in cadj)
    return ct, cadj, key


def split_canonical(tints, adj):
    """Normalize, split into components and canonicalize each one."""
    tints, adj, _ = normalize_board(tints, adj)
    return [canonical_board(*induced(tints, adj, comp)) for comp in board_components(adj)]


def move_children(tints, adj):
    """Children of a normalized board, one per twin class and player.

    Returns ``(left, right)``; each child is the list of canonical component
    boards produced by ``split_canonical``.
    """
    left, right = [], []
    for _, members in twin_classes(tints, adj):
        v = members[0]
        t = tints[v]
        for tint, out in ((1, left), (2, right)):
            if t == 0 or t == tint:
                nt = list(tints)
                for u in _bits(adj[v]):
                    nt[u] |= tint
                nt[v] = 3
                out.append(split_canonical(nt, adj))
    return left, right
