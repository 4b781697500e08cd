"""Snort on simple graphs with tinted vertices.

Playing a vertex removes it and tints its neighbours in the mover's colour;
a vertex tinted both colours is dead and removed, and an edge between two
vertices of the same tint is irrelevant and dropped. Values are computed per
connected component and memoized on an isomorphism-invariant key.
"""

from __future__ import annotations

import enum
import os
from collections import OrderedDict
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional

from snortcgt.dyadic import Dyadic
from snortcgt.games import Game, canonicalize, make_game, sum_all
from snortcgt import kernels
from snortcgt.thermography import temperature


class Tint(enum.IntEnum):
    NONE = 0
    BLUE = 1
    RED = 2

    @classmethod
    def parse(cls, s) -> "Tint":
        if isinstance(s, Tint):
            return s
        try:
            return cls[str(s).upper()]
        except KeyError:
            raise ValueError(f"unknown tint {s!r}") from None


class Player(enum.Enum):
    LEFT = Tint.BLUE
    RIGHT = Tint.RED

    @property
    def tint(self) -> Tint:
        return self.value

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class IllegalMove(ValueError):
    pass


@dataclass(frozen=True)
class Position:
    """A Snort board: ordered ``(id, tint)`` pairs plus undirected edges."""

    vertices: tuple[tuple[Hashable, Tint], ...]
    edges: frozenset[frozenset]

    def __post_init__(self):
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex id")
        known = set(ids)
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"not a simple edge: {sorted(e, key=str)}")
            if not e <= known:
                raise ValueError(f"edge {sorted(e, key=str)} uses an unknown vertex")

    @classmethod
    def build(cls, vertices: Iterable = (), edges: Iterable = (),
              tints: Optional[dict] = None) -> "Position":
        """Convenience constructor; vertices named in ``edges`` are added."""
        tints = {k: Tint.parse(v) for k, v in (tints or {}).items()}
        order: dict = {}
        for v in vertices:
            order.setdefault(v, None)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            order.setdefault(u, None)
            order.setdefault(v, None)
            es.add(frozenset((u, v)))
        for v in tints:
            order.setdefault(v, None)
        return cls(tuple((v, tints.get(v, Tint.NONE)) for v in order), frozenset(es))

    @property
    def ids(self) -> list:
        return [v for v, _ in self.vertices]

    def tint(self, v) -> Tint:
        for u, t in self.vertices:
            if u == v:
                return t
        raise KeyError(v)

    def neighbours(self, v) -> set:
        return {u for e in self.edges if v in e for u in e if u != v}

    def __len__(self):
        return len(self.vertices)

    def sorted_edges(self) -> list[tuple]:
        pos = {v: i for i, v in enumerate(self.ids)}
        out = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))


# --- compact boards --------------------------------------------------------
# A board is (tints, adj): tuple of tint ints and tuple of neighbour bitmasks.

def to_board(p: Position) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(p.ids)}
    adj = [0] * len(pos)
    for e in p.edges:
        a, b = (pos[x] for x in e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return tuple(int(t) for _, t in p.vertices), tuple(adj)


def from_board(tints, adj, ids=None) -> Position:
    ids = list(ids) if ids is not None else [str(i) for i in range(len(tints))]
    edges = set()
    for i, m in enumerate(adj):
        j = 0
        while m:
            if m & 1 and i < j:
                edges.add(frozenset((ids[i], ids[j])))
            m >>= 1
            j += 1
    return Position(tuple((ids[i], Tint(t)) for i, t in enumerate(tints)), frozenset(edges))


class _Memo:
    """Dict with an optional LRU cap (``SNORT_MEMO_LIMIT``)."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit
        self._d: OrderedDict = OrderedDict()

    def get(self, key):
        v = self._d.get(key)
        if v is not None and self.limit:
            self._d.move_to_end(key)
        return v

    def put(self, key, value):
        self._d[key] = value
        if self.limit and len(self._d) > self.limit:
            self._d.popitem(last=False)

    def __len__(self):
        return len(self._d)

    def clear(self):
        self._d.clear()


def _memo_limit() -> Optional[int]:
    raw = os.environ.get("SNORT_MEMO_LIMIT")
    return int(raw) if raw else None


_values = _Memo(_memo_limit())


def _component_value(comp) -> Game:
    ct, cadj, key = comp
    g = _values.get(key)
    if g is None:
        left, right = kernels.move_children(ct, cadj)
        g = canonicalize(make_game([_child_value(c) for c in left],
                                   [_child_value(c) for c in right]))
        _values.put(key, g)
    return g


def _child_value(comps) -> Game:
    return sum_all(_component_value(c) for c in comps)


# --- public API ------------------------------------------------------------

def normalize(p: Position) -> Position:
    """Drop doubly-tinted vertices and edges joining equal tints."""
    ids = p.ids
    tints, adj = to_board(p)
    nt, nadj, keep = kernels.normalize_board(tints, adj)
    return from_board(nt, nadj, [ids[i] for i in keep])


def legal_moves(p: Position, who: Player) -> list:
    return [v for v, t in p.vertices if t == Tint.NONE or t == who.tint]


def play(p: Position, who: Player, v) -> Position:
    if v not in legal_moves(p, who):
        raise IllegalMove(f"{who.name} cannot play {v!r}")
    ids = p.ids
    tints, adj = to_board(p)
    t = list(tints)
    i = ids.index(v)
    for u, nb in enumerate(bin(adj[i])[:1:-1]):
        if nb == "1":
            t[u] |= int(who.tint)
    t[i] = 3
    nt, nadj, keep = kernels.normalize_board(t, adj)
    return from_board(nt, nadj, [ids[k] for k in keep])


def components(p: Position) -> list[Position]:
    """Connected components, ordered by canonical key then first id."""
    ids = p.ids
    tints, adj = to_board(p)
    out = []
    for comp in kernels.board_components(adj):
        ct, cadj = kernels.induced(tints, adj, comp)
        key = kernels.canonical_board(ct, cadj)[2]
        out.append((key, from_board(ct, cadj, [ids[i] for i in comp])))
    out.sort(key=lambda kp: kp[0])
    return [q for _, q in out]


def canonical_key(p: Position) -> bytes:
    """Key shared by exactly the tint-preserving isomorphs of ``p``."""
    return kernels.canonical_board(*to_board(p))[2]


def value(p: Position) -> Game:
    """Canonical game value; normalizes first and sums component values."""
    return _child_value(kernels.split_canonical(*to_board(p)))


def position_temperature(p: Position) -> Dyadic:
    return temperature(value(p))


def colour_swap(p: Position) -> Position:
    swap = {Tint.NONE: Tint.NONE, Tint.BLUE: Tint.RED, Tint.RED: Tint.BLUE}
    return Position(tuple((v, swap[t]) for v, t in p.vertices), p.edges)


def degree(p: Position) -> int:
    _, adj = to_board(p)
    return max((bin(m).count("1") for m in adj), default=0)


def second_degree(p: Position) -> int:
    """Max over vertices of the number of vertices at distance exactly 2."""
    _, adj = to_board(p)
    best = 0
    for v, m in enumerate(adj):
        two = 0
        for u in range(len(adj)):
            if m >> u & 1:
                two |= adj[u]
        two &= ~(m | 1 << v)
        best = max(best, bin(two).count("1"))
    return best


def memo_size() -> int:
    return len(_values)


def clear_memo() -> None:
    _values.clear()
