import random

import pytest
from hypothesis import HealthCheck, given, settings

from _gen import games, random_game
from snortcgt.games import (
    STAR,
    ZERO,
    Kind,
    Outcome,
    add,
    canonical_sum,
    canonicalize,
    eq,
    fuzzy,
    integer,
    is_canonical,
    kind_of,
    leq,
    make_game,
    negate,
    number,
    outcome,
)
from snortcgt.dyadic import Dyadic
from snortcgt.notation import ParseError, format_game, parse_game

G = parse_game
prop = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def test_make_game_examples():
    assert make_game() is ZERO
    assert make_game([ZERO], [ZERO]) is STAR
    sw = make_game([integer(2)], [integer(-1)])
    assert format_game(sw) == "{2|-1}"


def test_interning():
    assert make_game([ZERO, ZERO], [ZERO]) is make_game([ZERO], [ZERO])
    assert make_game([STAR, ZERO], []) is make_game([ZERO, STAR], [])


def test_integers():
    assert integer(0) is ZERO
    assert integer(3) is make_game([integer(2)], [])
    assert integer(-2) is make_game([], [integer(-1)])


def test_negate_examples():
    assert negate(ZERO) is ZERO
    assert negate(G("{2|-1}")) is G("{1|-2}")


def test_sum_examples():
    assert canonical_sum(ZERO, G("{2|-1}")) is canonicalize(G("{2|-1}"))
    assert eq(add(integer(1), integer(1)), integer(2))
    s = canonicalize(G("{3|*}"))
    assert outcome(add(s, negate(s))) is Outcome.SECOND_WINS


def test_leq_examples():
    assert leq(integer(1), integer(2))
    assert not leq(ZERO, STAR) and not leq(STAR, ZERO)
    sw = G("{2|-1}")
    # a switch is confused with every number strictly inside its stops
    assert leq(integer(-2), sw) and leq(sw, integer(3))
    assert not leq(integer(-1), sw) and not leq(sw, integer(2))
    assert fuzzy(sw, integer(-1)) and fuzzy(sw, integer(2))


def test_eq_examples():
    g = G("{3|{1|-1}}")
    assert eq(g, g)
    assert eq(add(g, negate(g)), ZERO)
    assert not eq(STAR, ZERO)


def test_outcome_examples():
    assert outcome(ZERO) is Outcome.SECOND_WINS
    assert outcome(STAR) is Outcome.FIRST_WINS
    assert outcome(integer(3)) is Outcome.LEFT_WINS
    assert outcome(integer(-3)) is Outcome.RIGHT_WINS


def test_canonicalize_examples():
    assert canonicalize(make_game([integer(1), ZERO], [])) is integer(2)
    # {1|-5} reverses through -5, which has no left options
    assert canonicalize(G("{{1|-5}|}")) is ZERO
    assert canonicalize(G("{{2|0}|}")) is ZERO
    assert canonicalize(G("{1|1}")) is G("1*")
    assert canonicalize(G("{0|1}")) is number(Dyadic(1, 1))


def test_kinds():
    assert kind_of(integer(-4)).kind is Kind.INTEGER
    assert kind_of(canonicalize(G("6*"))).kind is Kind.INTEGER_STAR
    assert kind_of(number(Dyadic(-3, 2))).kind is Kind.NUMBER
    assert kind_of(canonicalize(G("1/2*"))).kind is Kind.NUMBER_STAR
    assert kind_of(canonicalize(G("{2|-1}"))).kind is Kind.GENERAL


@pytest.mark.parametrize("text", [
    "0", "*", "6*", "-3", "1/2", "-3/4*", "{2|-1}", "±4", "±{3*, {{5|4}|*}}",
    "±{5, {{8|6*}|0}}", "±{7*, {{11|8}|*}}", "±{9, {{14|10*}|0}}", "{-1, ±2|-8}",
])
def test_format_parse_roundtrip(text):
    g = canonicalize(G(text))
    assert format_game(g) == text
    assert parse_game(format_game(g)) is g


def test_format_int_star():
    assert format_game(canonicalize(add(integer(6), STAR))) == "6*"
    assert format_game(ZERO) == "0"


def test_parse_whitespace_and_ascii_pm():
    assert parse_game(" { 2 | - 1 } ") is G("{2|-1}")
    assert canonicalize(G("+-3")) is canonicalize(G("±3"))


@pytest.mark.parametrize("bad,pos", [("{1|", 3), ("{1|2}}", 5), ("1/3", 2), ("", 0), ("{a|b}", 1)])
def test_parse_errors_have_position(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_game(bad)
    assert info.value.pos == pos


# --- properties ------------------------------------------------------------

@prop
@given(games())
def test_negation_involution(g):
    assert negate(negate(g)) is g


@prop
@given(games())
def test_leq_reflexive_and_eq(g):
    assert leq(g, g)
    c = canonicalize(g)
    assert eq(g, c)


@prop
@given(games(), games(), games())
def test_leq_transitive(a, b, c):
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@prop
@given(games(), games())
def test_eq_iff_leq_both(a, b):
    assert eq(a, b) == (leq(a, b) and leq(b, a))
    # canonical forms are unique
    assert eq(a, b) == (canonicalize(a) is canonicalize(b))


@prop
@given(games())
def test_difference_is_zero(g):
    assert eq(add(g, negate(g)), ZERO)


@prop
@given(games())
def test_canonical_fixed_point(g):
    c = canonicalize(g)
    assert canonicalize(c) is c
    assert is_canonical(c)


@prop
@given(games())
def test_outcome_consistent_with_order(g):
    o = outcome(g)
    assert (o is Outcome.SECOND_WINS) == eq(g, ZERO)
    assert leq(ZERO, g) == (o in (Outcome.LEFT_WINS, Outcome.SECOND_WINS))
    assert leq(g, ZERO) == (o in (Outcome.RIGHT_WINS, Outcome.SECOND_WINS))


@prop
@given(games())
def test_roundtrip_random(g):
    c = canonicalize(g)
    assert parse_game(format_game(c)) is c


@prop
@given(games(2), games(2))
def test_sum_commutes_and_canonical_sum_agrees(a, b):
    assert add(a, b) is add(b, a)
    assert canonical_sum(a, b) is canonicalize(add(a, b))


def test_seeded_generator_sanity():
    rng = random.Random(1)
    seen = {canonicalize(random_game(rng)) for _ in range(200)}
    assert len(seen) > 20
