"""Text notation for games.

Grammar (whitespace-insensitive)::

    game   := ('±' | '+-') pmarg | unary
    pmarg  := '{' items '}' | unary
    unary  := '-' unary | atom
    atom   := NUMBER ['*'] | '*' | '{' items '|' items '}' | '(' game ')'
    items  := [game (',' game)*]
    NUMBER := digits ['/' digits]          # denominator a power of two

``x*`` is ``x + *``; ``±{a, b}`` is ``{a, b | -a, -b}`` and ``±x`` is ``±{x}``.
"""

from __future__ import annotations

from snortcgt.dyadic import Dyadic
from snortcgt.games import (
    STAR,
    Game,
    Kind,
    kind_of,
    make_game,
    negate,
    number,
    switch,
)

PM = "±"


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_fmt_memo: dict[int, str] = {}


def sort_key(g: Game):
    k = kind_of(g)
    value = k.value if k.value is not None else Dyadic(0)
    return (int(k.kind), value, format_game(g))


def format_game(g: Game) -> str:
    """Render a (canonical) game; options appear in a fixed total order."""
    s = _fmt_memo.get(g.id)
    if s is None:
        s = _format(g)
        _fmt_memo[g.id] = s
    return s


def _format(g: Game) -> str:
    k = kind_of(g)
    if k.kind in (Kind.INTEGER, Kind.NUMBER):
        return str(k.value)
    if k.kind in (Kind.INTEGER_STAR, Kind.NUMBER_STAR):
        return "*" if k.value == 0 else f"{k.value}*"
    left = sorted(g.left, key=sort_key)
    right = sorted(g.right, key=sort_key)
    if left and len(left) == len(right) and set(right) == {negate(x) for x in left}:
        if len(left) == 1:
            return PM + format_game(left[0])
        return PM + "{" + ", ".join(format_game(x) for x in left) + "}"
    return ("{" + ", ".join(format_game(x) for x in left) + "|"
            + ", ".join(format_game(x) for x in right) + "}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            self.error(f"expected {s!r}")

    def game(self) -> Game:
        if self.accept(PM) or self.accept("+-"):
            if self.accept("{"):
                items = self.items()
                if self.accept("|"):
                    right = self.items()
                    self.expect("}")
                    return switch(make_game(items, right))
                self.expect("}")
                if not items:
                    self.error("empty ± option list")
                return switch(*items)
            return switch(self.unary())
        return self.unary()

    def unary(self) -> Game:
        if self.accept("-"):
            self.skip()
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                return self.numeral(negative=True)
            return negate(self.unary())
        return self.atom()

    def atom(self) -> Game:
        self.skip()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        c = self.text[self.pos]
        if c.isdigit():
            return self.numeral(negative=False)
        if c == "*":
            self.pos += 1
            return STAR
        if c == "{":
            self.pos += 1
            left = self.items()
            self.expect("|")
            right = self.items()
            self.expect("}")
            return make_game(left, right)
        if c == "(":
            self.pos += 1
            g = self.game()
            self.expect(")")
            return g
        self.error(f"unexpected character {c!r}")

    def numeral(self, negative: bool) -> Game:
        t = self.text
        start = self.pos
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        num = int(t[start:self.pos])
        den = 1
        if self.accept("/"):
            self.skip()
            s2 = self.pos
            while self.pos < len(t) and t[self.pos].isdigit():
                self.pos += 1
            if s2 == self.pos:
                self.error("expected denominator")
            den = int(t[s2:self.pos])
            if den == 0 or den & (den - 1):
                self.pos = s2
                self.error("denominator must be a power of two")
        value = Dyadic(-num if negative else num, den.bit_length() - 1)
        x = number(value)
        # x* is {x | x}; the suffix binds tighter than unary minus
        if self.accept("*"):
            return make_game([x], [x])
        return x

    def items(self) -> list[Game]:
        if self.peek("|") or self.peek("}"):
            return []
        out = [self.game()]
        while self.accept(","):
            out.append(self.game())
        return out


def parse_game(text: str) -> Game:
    """Parse game notation; the result is literal (not canonicalized)."""
    p = _Parser(text)
    g = p.game()
    p.skip()
    if p.pos != len(text):
        p.error("trailing input")
    return g
