"""Short partizan games: interning, negation, sums, order, canonical forms.

Every ``Game`` is hash-consed: two games with the same option sets are the
same Python object, so ``is`` / ``==`` are structural equality and every memo
table below keys on the integer ``Game.id``. Value equality is ``eq``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Iterable, Optional

from snortcgt.dyadic import Dyadic
from snortcgt.kernels import GameTable

_lock = threading.RLock()
_table = GameTable()
_index: dict[tuple[tuple[int, ...], tuple[int, ...]], "Game"] = {}
_games: list["Game"] = []

_neg: dict[int, "Game"] = {}
_sum: dict[tuple[int, int], "Game"] = {}
_csum: dict[tuple[int, int], "Game"] = {}
_canon: dict[int, "Game"] = {}
_integers: dict[int, "Game"] = {}


class Game:
    """An interned game ``{left | right}``; construct with :func:`make_game`."""

    __slots__ = ("id", "left", "right", "__weakref__")

    def __init__(self, gid: int, left: tuple["Game", ...], right: tuple["Game", ...]):
        self.id = gid
        self.left = left
        self.right = right

    def __hash__(self):
        return self.id

    def __eq__(self, other):
        return self is other

    def __neg__(self) -> "Game":
        return negate(self)

    def __add__(self, other: "Game") -> "Game":
        return add(self, other)

    def __sub__(self, other: "Game") -> "Game":
        return add(self, negate(other))

    def __str__(self):
        from snortcgt.notation import format_game

        return format_game(canonicalize(self))

    def __repr__(self):
        return f"Game({self})"


def make_game(left: Iterable[Game] = (), right: Iterable[Game] = ()) -> Game:
    """Return the interned game with exactly these (deduplicated) options."""
    lids = tuple(sorted({g.id for g in left}))
    rids = tuple(sorted({g.id for g in right}))
    key = (lids, rids)
    g = _index.get(key)
    if g is not None:
        return g
    with _lock:
        g = _index.get(key)
        if g is None:
            gid = _table.add(lids, rids)
            g = Game(gid, tuple(_games[i] for i in lids), tuple(_games[i] for i in rids))
            _games.append(g)
            _index[key] = g
    return g


def game_count() -> int:
    return len(_games)


ZERO = make_game()
STAR = make_game([ZERO], [ZERO])
_integers[0] = ZERO


def integer(n: int) -> Game:
    g = _integers.get(n)
    if g is not None:
        return g
    step = 1 if n > 0 else -1
    k = 0
    g = ZERO
    while k != n:
        k += step
        nxt = _integers.get(k)
        if nxt is None:
            nxt = make_game([g], []) if step > 0 else make_game([], [g])
            _integers[k] = nxt
        g = nxt
    return g


def number(x) -> Game:
    """Canonical form of the dyadic ``x``."""
    x = Dyadic.coerce(x)
    if x.is_integer():
        return integer(x.numerator)
    lo = Dyadic(x.numerator - 1, x.exponent)
    hi = Dyadic(x.numerator + 1, x.exponent)
    return make_game([number(lo)], [number(hi)])


def switch(*options: Game) -> Game:
    """``±{options}``: Left's options as given, Right's their negatives."""
    return make_game(options, [negate(o) for o in options])


def negate(g: Game) -> Game:
    r = _neg.get(g.id)
    if r is None:
        r = make_game([negate(x) for x in g.right], [negate(x) for x in g.left])
        _neg[g.id] = r
        _neg[r.id] = g
    return r


def add(g: Game, h: Game) -> Game:
    """Disjunctive sum by literal expansion (no simplification)."""
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    key = (g.id, h.id) if g.id <= h.id else (h.id, g.id)
    r = _sum.get(key)
    if r is None:
        r = make_game(
            [add(x, h) for x in g.left] + [add(g, x) for x in h.left],
            [add(x, h) for x in g.right] + [add(g, x) for x in h.right],
        )
        _sum[key] = r
    return r


def canonical_sum(g: Game, h: Game) -> Game:
    """Canonical form of ``g + h``, simplifying at every level."""
    if g is ZERO:
        return canonicalize(h)
    if h is ZERO:
        return canonicalize(g)
    key = (g.id, h.id) if g.id <= h.id else (h.id, g.id)
    r = _csum.get(key)
    if r is None:
        g = canonicalize(g)
        h = canonicalize(h)
        r = canonicalize(make_game(
            [canonical_sum(x, h) for x in g.left] + [canonical_sum(g, x) for x in h.left],
            [canonical_sum(x, h) for x in g.right] + [canonical_sum(g, x) for x in h.right],
        ))
        _csum[key] = r
    return r


def sum_all(games: Iterable[Game]) -> Game:
    total = ZERO
    for g in games:
        total = canonical_sum(total, g)
    return total


def leq(g: Game, h: Game) -> bool:
    """``g <= h`` in the partial order of game values."""
    return _table.leq(g.id, h.id)


def geq(g: Game, h: Game) -> bool:
    return _table.leq(h.id, g.id)


def eq(g: Game, h: Game) -> bool:
    return g is h or (_table.leq(g.id, h.id) and _table.leq(h.id, g.id))


def fuzzy(g: Game, h: Game) -> bool:
    return not _table.leq(g.id, h.id) and not _table.leq(h.id, g.id)


class Outcome(enum.Enum):
    LEFT_WINS = "L"
    RIGHT_WINS = "R"
    FIRST_WINS = "N"
    SECOND_WINS = "P"


def outcome(g: Game) -> Outcome:
    lf = _table.left_first(g.id)
    rf = _table.right_first(g.id)
    if lf and rf:
        return Outcome.FIRST_WINS
    if lf:
        return Outcome.LEFT_WINS
    if rf:
        return Outcome.RIGHT_WINS
    return Outcome.SECOND_WINS


def _maximal(opts: list[Game], better) -> list[Game]:
    """Drop every option weakly dominated by a different sibling."""
    keep = []
    for a in opts:
        dominated = False
        for b in opts:
            if b is not a and better(a, b):
                # equal values (both directions): keep the lower id only
                if not better(b, a) or b.id < a.id:
                    dominated = True
                    break
        if not dominated:
            keep.append(a)
    return keep


def canonicalize(g: Game) -> Game:
    """Unique simplest game equal to ``g``.

    Options are canonicalized first, then dominated options are deleted and
    reversible options bypassed until neither rule applies.
    """
    r = _canon.get(g.id)
    if r is not None:
        return r
    left = list({canonicalize(x) for x in g.left})
    right = list({canonicalize(x) for x in g.right})
    current = make_game(left, right)
    while True:
        left = _maximal(left, leq)
        right = _maximal(right, geq)
        changed = False
        new_left: list[Game] = []
        for a in left:
            rev = next((ar for ar in a.right if leq(ar, current)), None)
            if rev is None:
                new_left.append(a)
            else:
                new_left.extend(rev.left)
                changed = True
        new_right: list[Game] = []
        for b in right:
            rev = next((bl for bl in b.left if leq(current, bl)), None)
            if rev is None:
                new_right.append(b)
            else:
                new_right.extend(rev.right)
                changed = True
        left = list(dict.fromkeys(new_left))
        right = list(dict.fromkeys(new_right))
        current = make_game(left, right)
        if not changed:
            break
    _canon[g.id] = current
    _canon[current.id] = current
    return current


def is_canonical(g: Game) -> bool:
    return canonicalize(g) is g


class Kind(enum.IntEnum):
    INTEGER = 0
    INTEGER_STAR = 1
    NUMBER = 2
    NUMBER_STAR = 3
    GENERAL = 4


@dataclass(frozen=True)
class GameKind:
    kind: Kind
    value: Optional[Dyadic] = None

    @property
    def is_number(self) -> bool:
        return self.kind in (Kind.INTEGER, Kind.NUMBER)


_kinds: dict[int, GameKind] = {}


def kind_of(g: Game) -> GameKind:
    """Classify a canonical game as integer, number, number+*, or general."""
    k = _kinds.get(g.id)
    if k is None:
        k = _classify(g)
        _kinds[g.id] = k
    return k


def _classify(g: Game) -> GameKind:
    general = GameKind(Kind.GENERAL)
    nl, nr = len(g.left), len(g.right)
    if nl == 0 and nr == 0:
        return GameKind(Kind.INTEGER, Dyadic(0))
    if nl == 1 and nr == 0:
        k = kind_of(g.left[0])
        if k.kind is Kind.INTEGER and k.value >= 0:
            return GameKind(Kind.INTEGER, k.value + 1)
        return general
    if nl == 0 and nr == 1:
        k = kind_of(g.right[0])
        if k.kind is Kind.INTEGER and k.value <= 0:
            return GameKind(Kind.INTEGER, k.value - 1)
        return general
    if nl == 1 and nr == 1:
        a, b = g.left[0], g.right[0]
        ka, kb = kind_of(a), kind_of(b)
        if not (ka.is_number and kb.is_number):
            return general
        if a is b:
            tag = Kind.INTEGER_STAR if ka.kind is Kind.INTEGER else Kind.NUMBER_STAR
            return GameKind(tag, ka.value)
        if ka.value < kb.value:
            mid = ka.value.average(kb.value)
            if not mid.is_integer() and number(mid) is g:
                return GameKind(Kind.NUMBER, mid)
    return general


def clear_caches() -> None:
    """Drop operation memos (interned games and their ids stay valid)."""
    with _lock:
        _sum.clear()
        _csum.clear()
        _table.clear_memo()
