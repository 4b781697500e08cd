"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line PASS/FAIL status that is echoed in the pytest
terminal summary. Positions touched by criteria 1-8 are collected and fed to
the conjecture monitor in criterion 9.
"""

import random
import time
from contextlib import contextmanager

import networkx as nx
import pytest

from _gen import random_game, random_position, relabel, solver
from _report import record
from snortcgt.dyadic import Dyadic
from snortcgt.families import (
    witness_position,
    make_caterpillar,
    make_joined_stars,
    make_star,
    oracle_value,
    verify_family,
)
from snortcgt.games import STAR, ZERO, canonical_sum, canonicalize, eq, negate, outcome
from snortcgt.notation import format_game, parse_game
from snortcgt.search import SearchConfig, check_conjecture, evolve, fitness
from snortcgt.snort import Position, Tint, degree, position_temperature, value
from snortcgt.thermography import game_thermograph, thermograph, trajectories_agree_above

SEED = 20240607
CASES = 1000
SEEN: list[tuple[str, Position]] = []


def seen(name, p):
    SEEN.append((name, p))
    return p


@contextmanager
def criterion(num, title, budget=None):
    start = time.perf_counter()
    info = {}
    try:
        yield info
    except BaseException as exc:
        record(num, False, f"{title}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        record(num, False, f"{title}: took {elapsed:.1f}s, budget {budget}s")
        pytest.fail(f"criterion {num} exceeded its {budget}s budget ({elapsed:.1f}s)")
    extra = f" [{info['note']}]" if "note" in info else ""
    record(num, True, f"{title} ({elapsed:.1f}s){extra}")


CATERPILLAR_ROWS = [
    (1, "±{3*, {{5|4}|*}}", 3, 3, 0),
    (2, "±{5, {{8|6*}|0}}", 5, 4, 1),
    (3, "±{7*, {{11|8}|*}}", 7, 5, 2),
    (4, "±{9, {{14|10*}|0}}", 9, 6, 3),
]


def test_criterion_01_caterpillar_rows():
    with criterion(1, "caterpillar canonical forms, n = 1..4", budget=60):
        for n, text, t, d, diff in CATERPILLAR_ROWS:
            p = seen(f"C({n + 1},{n},{n + 1})", make_caterpillar(n))
            g = value(p)
            assert format_game(g) == text, (n, format_game(g))
            assert position_temperature(p) == t
            assert degree(p) == d
            assert position_temperature(p) - degree(p) == diff


def test_criterion_01_stretch_rows():
    # informational only: rows 5 and 6
    t0 = time.perf_counter()
    rows = verify_family("caterpillar", [5, 6])
    for r in rows:
        seen(f"C({r.n + 1},{r.n},{r.n + 1})", make_caterpillar(r.n))
    ok = all(r.passed for r in rows)
    print(f"criterion  1 stretch: n = 5, 6 {'match' if ok else 'MISMATCH'} ({time.perf_counter() - t0:.1f}s)")
    assert ok


def test_criterion_02_star_families():
    with criterion(2, "star, tinted star, joined star identities"):
        for n in range(1, 7):
            assert eq(value(seen(f"K1,{n}", make_star(n))), parse_game(f"±{n}"))
            want = parse_game("{%d|%s}" % (n, "*" if n % 2 == 0 else "0"))
            assert eq(value(seen(f"K1,{n} blue", make_star(n, Tint.BLUE))), want)
        for n in range(1, 5):
            want = parse_game(f"±{n}" if n % 2 == 0 else f"±({n}*)")
            assert eq(value(seen(f"J{n} opp", make_joined_stars(n, Tint.BLUE, Tint.RED))), want)
            joined = value(seen(f"J{n} same", make_joined_stars(n, Tint.BLUE, Tint.BLUE)))
            one = value(make_star(n, Tint.BLUE))
            apart = Position.build(
                [f"a{v}" for v in make_star(n).ids] + [f"b{v}" for v in make_star(n).ids],
                [(f"{s}c", f"{s}l{i}") for s in "ab" for i in range(1, n + 1)],
                {"ac": Tint.BLUE, "bc": Tint.BLUE},
            )
            assert eq(joined, value(apart))
            assert eq(joined, canonical_sum(one, one))


def test_criterion_03_caterpillar_formula():
    with criterion(3, "caterpillar value equals closed form, n = 1..4"):
        for n in range(1, 5):
            assert eq(value(make_caterpillar(n)), oracle_value("caterpillar", n))
            assert value(make_caterpillar(n)) is oracle_value("caterpillar", n)


def test_criterion_04_caterpillar_temperature():
    with criterion(4, "caterpillar temperature 2n+1, n = 1..4"):
        for n in range(1, 5):
            assert position_temperature(make_caterpillar(n)) == 2 * n + 1


def test_criterion_05_thermographs():
    cases = [("3", "-1", "3"), ("{2|-1}", "3/2", "1/2"),
             ("{{2|-1}|{-4|-10}}", "15/4", "-13/4"), ("{-1, {2|-2}|-8}", "4", "-4")]
    with criterion(5, "reference thermographs (temperature, mast)"):
        for text, t, m in cases:
            th = game_thermograph(parse_game(text))
            assert (th.temperature, th.mast) == (Dyadic.parse(t), Dyadic.parse(m)), text


def test_criterion_06_witness():
    with criterion(6, "14-vertex witness: t = 11/2, deg = 4, fitness 3/2", budget=120):
        p = seen("witness", witness_position())
        assert position_temperature(p) == Dyadic(11, 1)
        assert degree(p) == 4
        assert fitness(p) == Dyadic(3, 1)


def test_criterion_07_playout_oracle():
    with criterion(7, "outcome vs direct play-out, connected graphs on <= 5 vertices", budget=60) as info:
        count = 0
        for g in nx.graph_atlas_g():
            n = g.number_of_nodes()
            if n > 5:
                break
            if n == 0 or not nx.is_connected(g):
                continue
            p = seen(f"atlas{count}", Position.build(range(n), g.edges()))
            assert outcome(value(p)).value == solver(n, list(g.edges())), list(g.edges())
            count += 1
        assert count == 31
        info["note"] = f"{count} graphs"


def test_criterion_08_properties():
    rng = random.Random(SEED)
    with criterion(8, f"property suites, {CASES} cases each"):
        for _ in range(CASES):
            g = random_game(rng)
            assert negate(negate(g)) is g
        for _ in range(CASES):
            g = random_game(rng)
            assert eq(canonical_sum(g, negate(g)), ZERO)
        for _ in range(CASES):
            c = canonicalize(random_game(rng))
            assert canonicalize(c) is c
        for _ in range(CASES):
            c = canonicalize(random_game(rng))
            assert trajectories_agree_above(thermograph(c), thermograph(canonical_sum(c, STAR)), 0)
        for _ in range(CASES):
            th = thermograph(canonicalize(random_game(rng)))
            assert all(s in (-1, 0) for s in th.left.slopes())
            assert all(s in (0, 1) for s in th.right.slopes())
            for t, _ in th.left.points + th.right.points:
                assert th.left(t) >= th.right(t)
            assert th.left(th.temperature) == th.right(th.temperature) == th.mast
        for i in range(CASES):
            p = seen(f"random{i}", random_position(rng, 9))
            assert value(relabel(p, rng)) is value(p)


def test_criterion_09_conjecture_monitor():
    if not SEEN:
        pytest.skip("monitors positions from criteria 1-8; run the whole file")
    names = [n for n, _ in SEEN]
    rows = check_conjecture([p for _, p in SEEN], names)
    bad = [r for r in rows if not r.holds]
    tightest = min(rows, key=lambda r: r.margin) if rows else None
    if bad:
        detail = f"{len(bad)} of {len(rows)} positions exceed deg + deg2/2, first {bad[0].name}"
        record(9, False, detail, status="VIOLATION")
        # a violation is a finding to review, not a broken build
        print("!!! CONJECTURE VIOLATION:", [r.to_dict() for r in bad])
    else:
        record(9, True, f"t <= deg + deg2/2 on all {len(rows)} positions; "
                        f"tightest margin {tightest.margin} at {tightest.name}")
    assert len(rows) >= 1000


def test_criterion_10_search():
    with criterion(10, "search determinism and smoke run from K1,3", budget=600) as info:
        cfg = SearchConfig(rng_seed=SEED)
        assert cfg.generations == 30
        first = evolve(cfg, [make_star(3)])
        second = evolve(SearchConfig(rng_seed=SEED), [make_star(3)])
        assert first.to_json() == second.to_json()
        assert first.best.evaluation.fitness >= 1
        reached = next(i for i, f in enumerate(first.history) if Dyadic.parse(f) >= 1)
        info["note"] = f"fitness >= 1 at generation {reached}, best {first.best.evaluation.fitness}"
