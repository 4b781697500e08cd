import os
import random
import subprocess
import sys

import pytest

from _gen import random_position
from snortcgt import _corepy, kernels
from snortcgt.snort import to_board

core = pytest.importorskip("snortcgt._core") if kernels.BACKEND == "cython" else None
needs_ext = pytest.mark.skipif(core is None, reason="compiled extension not built")


def _boards(seed, count, max_n):
    rng = random.Random(seed)
    for _ in range(count):
        yield to_board(random_position(rng, max_n))


def test_backend_env_switch():
    code = "from snortcgt import kernels; print(kernels.BACKEND)"
    env = {**os.environ, "SNORTCGT_PURE": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_ext
@pytest.mark.parametrize("fn", ["normalize_board", "board_components", "twin_classes",
                                "canonical_board", "split_canonical", "move_children"])
def test_board_parity(fn):
    for tints, adj in _boards(3, 300, 12):
        args = (adj,) if fn == "board_components" else (tints, adj)
        assert getattr(core, fn)(*args) == getattr(_corepy, fn)(*args)


@needs_ext
def test_canonical_order_parity():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 10)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        colors = [rng.randint(0, 2) for _ in range(n)]
        assert list(core.canonical_order(adj, colors)) == list(_corepy.canonical_order(adj, colors))


@needs_ext
def test_large_board_falls_back():
    n = 70
    adj = tuple((1 << ((i + 1) % n)) | (1 << ((i - 1) % n)) for i in range(n))
    tints = (0,) * n
    assert core.canonical_board(tints, adj) == _corepy.canonical_board(tints, adj)


@needs_ext
def test_game_table_parity():
    rng = random.Random(9)
    tables = [core.GameTable(), _corepy.GameTable()]
    ids = []
    for i in range(120):
        left = tuple(rng.sample(ids, min(len(ids), rng.randint(0, 3))))
        right = tuple(rng.sample(ids, min(len(ids), rng.randint(0, 3))))
        got = {t.add(left, right) for t in tables}
        assert got == {i}
        ids.append(i)
    for _ in range(2000):
        g, h = rng.choice(ids), rng.choice(ids)
        a, b = tables
        assert a.leq(g, h) == b.leq(g, h)
        assert a.left_first(g) == b.left_first(g)
        assert a.right_first(g) == b.right_first(g)


def test_canonical_key_is_relabel_invariant():
    rng = random.Random(21)
    for tints, adj in _boards(21, 200, 10):
        n = len(tints)
        perm = list(range(n))
        rng.shuffle(perm)
        t2 = [0] * n
        a2 = [0] * n
        for i in range(n):
            t2[perm[i]] = tints[i]
            for j in range(n):
                if adj[i] >> j & 1:
                    a2[perm[i]] |= 1 << perm[j]
        assert kernels.canonical_board(tints, adj)[2] == kernels.canonical_board(tuple(t2), tuple(a2))[2]


def test_empty_board():
    assert kernels.canonical_board((), ()) == ((), (), b"\x00")
    assert kernels.split_canonical((), ()) == []


def test_keys_separate_non_isomorphic_graphs():
    import networkx as nx
    from snortcgt.snort import Position, canonical_key
    graphs = [g for g in nx.graph_atlas_g()[1:] if g.number_of_nodes() <= 6]
    keys = {canonical_key(Position.build(range(g.number_of_nodes()), g.edges())) for g in graphs}
    assert len(keys) == len(graphs)


def test_key_equality_matches_tinted_isomorphism():
    import networkx as nx
    from snortcgt.snort import Position, Tint, canonical_key
    rng = random.Random(33)

    def sample():
        n = rng.randint(3, 6)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        tints = {v: rng.choice([Tint.NONE, Tint.NONE, Tint.BLUE, Tint.RED]) for v in range(n)}
        g = nx.Graph()
        g.add_nodes_from((v, {"t": int(t)}) for v, t in tints.items())
        g.add_edges_from(edges)
        return g, Position.build(range(n), edges, tints)

    same = 0
    for _ in range(3000):
        (g1, p1), (g2, p2) = sample(), sample()
        iso = nx.is_isomorphic(g1, g2, node_match=lambda a, b: a["t"] == b["t"])
        assert iso == (canonical_key(p1) == canonical_key(p2))
        same += iso
    assert same > 0
