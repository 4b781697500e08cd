"""Random games and graphs for property tests, plus a direct Snort solver."""

import random
from functools import lru_cache

from hypothesis import strategies as st

from snortcgt.games import STAR, ZERO, integer, make_game
from snortcgt.snort import Position, Tint

ATOMS = [ZERO, STAR, integer(1), integer(-1), integer(2)]


def random_game(rng: random.Random, depth: int = 3, branching: int = 3):
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(ATOMS)
    left = [random_game(rng, depth - 1, branching) for _ in range(rng.randint(0, branching))]
    right = [random_game(rng, depth - 1, branching) for _ in range(rng.randint(0, branching))]
    return make_game(left, right)


def games(depth: int = 3, branching: int = 3):
    if depth == 0:
        return st.sampled_from(ATOMS)
    sub = games(depth - 1, branching)
    opts = st.lists(sub, max_size=branching)
    return st.one_of(st.sampled_from(ATOMS), st.builds(make_game, opts, opts))


def random_graph(rng: random.Random, n: int, p: float = 0.4):
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def random_position(rng: random.Random, max_n: int = 8, tinted: bool = True) -> Position:
    n = rng.randint(0, max_n)
    edges = random_graph(rng, n, rng.uniform(0.15, 0.6))
    tints = {}
    if tinted:
        for v in range(n):
            r = rng.random()
            if r < 0.15:
                tints[v] = Tint.BLUE
            elif r < 0.3:
                tints[v] = Tint.RED
    return Position.build(range(n), edges, tints)


def relabel(p: Position, rng: random.Random) -> Position:
    ids = p.ids
    perm = ids[:]
    rng.shuffle(perm)
    m = {a: f"r{b}" for a, b in zip(ids, perm)}
    order = list(ids)
    rng.shuffle(order)
    return Position.build([m[v] for v in order], [tuple(m[x] for x in e) for e in p.edges],
                          {m[v]: t for v, t in p.vertices})


# --- direct play-out -------------------------------------------------------
# State: per vertex 0 (empty), 1 (Left's colour), 2 (Right's colour). A player
# may colour an empty vertex none of whose neighbours carries the opponent's
# colour. The player with no move loses.

def _moves(nbrs, state, who):
    other = 2 if who == 1 else 1
    return [v for v, c in enumerate(state)
            if c == 0 and all(state[u] != other for u in nbrs[v])]


def solver(n, edges, pre=None):
    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)

    @lru_cache(maxsize=None)
    def wins(state, who):
        """True if ``who`` to move wins."""
        for v in _moves(nbrs, state, who):
            nxt = state[:v] + (who,) + state[v + 1:]
            if not wins(nxt, 3 - who):
                return True
        return False

    start = tuple(pre) if pre is not None else (0,) * n
    left_first = wins(start, 1)
    right_first = wins(start, 2)
    if left_first and not right_first:
        return "L"
    if right_first and not left_first:
        return "R"
    return "N" if left_first else "P"
