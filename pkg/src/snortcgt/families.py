"""Named Snort boards with closed-form values, and a harness that checks the
engine against those formulas.

The caterpillar ``C(n+1, n, n+1)`` is the path ``a - b - c`` with ``n + 1``
leaves on ``a`` and on ``c`` and ``n`` leaves on ``b``. Its canonical form is

    ±{2n+1+s(n), {{3n+2 | 2n+2+s(n-1)} | s(n)}}

with ``s(n)`` equal to ``0`` for even and ``*`` for odd ``n``; its temperature is
``2n + 1`` and its degree ``n + 2``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from importlib import resources
from typing import Iterable, Optional

from snortcgt.dyadic import Dyadic
from snortcgt.games import Game, canonical_sum, canonicalize, eq, negate
from snortcgt.graphio import loads_position
from snortcgt.notation import format_game, parse_game
from snortcgt.snort import Position, Tint, degree, value
from snortcgt.thermography import temperature

FAMILIES = ("isolated", "star", "tinted-star", "joined-stars", "joined-same", "caterpillar")


class UnsupportedFamily(ValueError):
    pass


@dataclass(frozen=True)
class CaterpillarSpec:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("caterpillar parameter n must be >= 1")


def make_isolated(n: int, tint: Tint = Tint.NONE) -> Position:
    return Position.build([f"v{i}" for i in range(1, n + 1)], (),
                          {f"v{i}": tint for i in range(1, n + 1)})


def make_star(n: int, centre_tint: Tint = Tint.NONE) -> Position:
    if n < 0:
        raise ValueError("n must be >= 0")
    return Position.build(["c"] + [f"l{i}" for i in range(1, n + 1)],
                          [("c", f"l{i}") for i in range(1, n + 1)],
                          {"c": centre_tint})


def make_joined_stars(n: int, tint_a: Tint = Tint.NONE, tint_b: Tint = Tint.NONE) -> Position:
    """Two ``K_{1,n}`` whose centres ``x`` and ``y`` are joined by an edge."""
    if n < 0:
        raise ValueError("n must be >= 0")
    edges = [("x", "y")]
    edges += [("x", f"x{i}") for i in range(1, n + 1)]
    edges += [("y", f"y{i}") for i in range(1, n + 1)]
    return Position.build(["x", "y"], edges, {"x": tint_a, "y": tint_b})


def make_caterpillar_general(p: int, q: int, r: int) -> Position:
    """Path ``a - b - c`` with ``p``, ``q`` and ``r`` leaves respectively."""
    edges = [("a", "b"), ("b", "c")]
    edges += [("a", f"a{i}") for i in range(1, p + 1)]
    edges += [("b", f"b{j}") for j in range(1, q + 1)]
    edges += [("c", f"c{i}") for i in range(1, r + 1)]
    return Position.build(["a", "b", "c"], edges)


def make_caterpillar(spec) -> Position:
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(int(spec))
    n = spec.n
    return make_caterpillar_general(n + 1, n, n + 1)


def witness_position() -> Position:
    """The 14-vertex position with ``t - deg = 3/2`` shipped as a fixture."""
    text = resources.files("snortcgt").joinpath("data/witness14.json").read_text()
    return loads_position(text)


def _starred(x: int, odd: bool) -> str:
    return f"{x}*" if odd else str(x)


def caterpillar_formula(n: int) -> str:
    s_n = n % 2 == 1
    s_prev = (n - 1) % 2 == 1
    return ("±{" + _starred(2 * n + 1, s_n) + ", {{" + str(3 * n + 2) + "|"
            + _starred(2 * n + 2, s_prev) + "}|" + ("*" if s_n else "0") + "}}")


def oracle_value(family: str, n: int, tint: Tint = Tint.BLUE) -> Game:
    """Closed-form value of a family member, canonicalized."""
    if family == "isolated":
        if tint is Tint.NONE:
            text = "*" if n % 2 else "0"
        else:
            text = str(n if tint is Tint.BLUE else -n)
        return canonicalize(parse_game(text))
    if n < 1:
        raise UnsupportedFamily(f"{family} needs n >= 1")
    if family == "star":
        return canonicalize(parse_game(f"±{n}"))
    if family == "tinted-star":
        g = canonicalize(parse_game("{%d|%s}" % (n, "*" if n % 2 == 0 else "0")))
        return g if tint is Tint.BLUE else negate(g)
    if family == "joined-stars":
        return canonicalize(parse_game(f"±{n}" if n % 2 == 0 else f"±({n}*)"))
    if family == "joined-same":
        one = oracle_value("tinted-star", n, tint)
        return canonical_sum(one, one)
    if family == "caterpillar":
        return canonicalize(parse_game(caterpillar_formula(n)))
    raise UnsupportedFamily(family)


def family_position(family: str, n: int, tint: Tint = Tint.BLUE) -> Position:
    if family == "isolated":
        return make_isolated(n, tint)
    if family == "star":
        return make_star(n)
    if family == "tinted-star":
        return make_star(n, tint)
    if family == "joined-stars":
        other = Tint.RED if tint is Tint.BLUE else Tint.BLUE
        return make_joined_stars(n, tint, other)
    if family == "joined-same":
        return make_joined_stars(n, tint, tint)
    if family == "caterpillar":
        return make_caterpillar(n)
    raise UnsupportedFamily(family)


def _expected_temperature(family: str, n: int) -> Optional[Dyadic]:
    if family == "caterpillar":
        return Dyadic(2 * n + 1)
    if family in ("star", "joined-stars"):
        return Dyadic(n)
    return None


def _expected_degree(family: str, n: int) -> Optional[int]:
    return {"caterpillar": n + 2, "star": n, "joined-stars": n + 1}.get(family)


@dataclass
class VerifyRow:
    family: str
    n: int
    computed: str
    expected: str
    value_eq: bool
    text_eq: bool
    temperature: str
    expected_temperature: Optional[str]
    degree: int
    expected_degree: Optional[int]
    t_minus_deg: str

    @property
    def passed(self) -> bool:
        return (self.value_eq and self.text_eq
                and (self.expected_temperature is None or self.temperature == self.expected_temperature)
                and (self.expected_degree is None or self.degree == self.expected_degree))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def verify_family(family: str, ns: Iterable[int], tint: Tint = Tint.BLUE) -> list[VerifyRow]:
    """Engine value versus closed form, one row per ``n``."""
    rows = []
    for n in ns:
        p = family_position(family, n, tint)
        g = value(p)
        want = oracle_value(family, n, tint)
        t = temperature(g)
        d = degree(p)
        et = _expected_temperature(family, n)
        rows.append(VerifyRow(
            family=family,
            n=n,
            computed=format_game(g),
            expected=format_game(want),
            value_eq=eq(g, want),
            text_eq=format_game(g) == format_game(want),
            temperature=str(t),
            expected_temperature=None if et is None else str(et),
            degree=d,
            expected_degree=_expected_degree(family, n),
            t_minus_deg=str(t - d),
        ))
    return rows


def format_report(rows: list[VerifyRow]) -> str:
    header = ("n", "canonical form", "t(G)", "deg(G)", "t(G)-deg(G)", "status")
    body = [(str(r.n), r.computed, r.temperature, str(r.degree), r.t_minus_deg,
             "pass" if r.passed else f"FAIL (expected {r.expected})") for r in rows]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = [" | ".join(x.ljust(w) for x, w in zip(header, widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for row in body:
        lines.append(" | ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def report_json(rows: list[VerifyRow]) -> str:
    return json.dumps({"rows": [r.to_dict() for r in rows],
                       "all_passed": all(r.passed for r in rows)}, indent=2)
