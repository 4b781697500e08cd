"""Exact thermographs over dyadic rationals.

Temperatures live on ``[-1, inf)``. A trajectory is a continuous piecewise
linear function given by breakpoints ``(t, v)``; past the last breakpoint it
is constant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from snortcgt.dyadic import MINUS_ONE, Dyadic
from snortcgt.games import Game, Kind, canonicalize, kind_of


class ThermographError(ValueError):
    pass


@dataclass(frozen=True)
class Trajectory:
    points: tuple[tuple[Dyadic, Dyadic], ...]

    def __post_init__(self):
        if not self.points or self.points[0][0] != MINUS_ONE:
            raise ThermographError("trajectory must start at t = -1")
        for (t0, _), (t1, _) in zip(self.points, self.points[1:]):
            if not t0 < t1:
                raise ThermographError("breakpoint temperatures must increase")

    @classmethod
    def constant(cls, v) -> "Trajectory":
        return cls(((MINUS_ONE, Dyadic.coerce(v)),))

    @property
    def final_value(self) -> Dyadic:
        return self.points[-1][1]

    def __call__(self, t) -> Dyadic:
        return trajectory_eval(self, t)

    def slopes(self) -> list[Dyadic]:
        return [_slope(p0, p1) for p0, p1 in zip(self.points, self.points[1:])]

    def negated(self) -> "Trajectory":
        return Trajectory(tuple((t, -v) for t, v in self.points))

    def to_json(self) -> list[list[str]]:
        return [[str(t), str(v)] for t, v in self.points]


def _slope(p0, p1) -> Dyadic:
    (t0, v0), (t1, v1) = p0, p1
    dt = t1 - t0
    dv = v1 - v0
    return Dyadic.from_fraction(dv.to_fraction() / dt.to_fraction())


def trajectory_eval(tr: Trajectory, t) -> Dyadic:
    t = Dyadic.coerce(t)
    if t < MINUS_ONE:
        raise ThermographError(f"temperature {t} below -1")
    pts = tr.points
    if t >= pts[-1][0]:
        return pts[-1][1]
    lo, hi = 0, len(pts) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pts[mid][0] <= t:
            lo = mid
        else:
            hi = mid
    (t0, v0), (t1, v1) = pts[lo], pts[hi]
    if t == t0:
        return v0
    return v0 + _interp(v0, v1, t0, t1, t)


def _interp(v0, v1, t0, t1, t) -> Dyadic:
    frac = (v1 - v0).to_fraction() * (t - t0).to_fraction() / (t1 - t0).to_fraction()
    return Dyadic.from_fraction(frac)


# --- piecewise-linear helpers on breakpoint lists -------------------------

def _dedupe(points):
    """Drop repeated and collinear interior breakpoints."""
    out = []
    for p in points:
        if out and out[-1][0] == p[0]:
            continue
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    return out


def _simplify(points) -> tuple[tuple[Dyadic, Dyadic], ...]:
    """As ``_dedupe``, also dropping a flat tail (implied past the end)."""
    out = _dedupe(points)
    while len(out) >= 2 and out[-1][1] == out[-2][1]:
        out.pop()
    return tuple(out)


def _collinear(a, b, c) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])


def _shear(tr: Trajectory, direction: int) -> list[tuple[Dyadic, Dyadic]]:
    """Breakpoints of ``tr(t) + direction * t`` (no flat tail any more)."""
    return [(t, v + t * direction) for t, v in tr.points]


class _PL:
    """Continuous PL function: breakpoints plus a tail slope past the last."""

    __slots__ = ("pts", "tail")

    def __init__(self, pts, tail: int):
        self.pts = list(pts)
        self.tail = tail

    def at(self, t: Dyadic) -> Dyadic:
        pts = self.pts
        if t >= pts[-1][0]:
            return pts[-1][1] + (t - pts[-1][0]) * self.tail
        for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
            if t0 <= t <= t1:
                if t == t0:
                    return v0
                return v0 + _interp(v0, v1, t0, t1, t)
        raise AssertionError("unreachable")


def _sheared(tr: Trajectory, direction: int) -> _PL:
    return _PL(_shear(tr, direction), direction)


def _crossing(t0, d0, t1, d1) -> Dyadic:
    """Zero of the linear function with value ``d0`` at ``t0``, ``d1`` at ``t1``."""
    frac = t0.to_fraction() + (t1 - t0).to_fraction() * d0.to_fraction() / (d0 - d1).to_fraction()
    return Dyadic.from_fraction(frac)


def _envelope(fs: Sequence[_PL], pick_max: bool) -> _PL:
    """Pointwise max (or min) of PL functions, exact."""
    ts = sorted({t for f in fs for t, _ in f.pts})
    # extend past the last breakpoint far enough to resolve tail crossings
    far = ts[-1]
    extra = [far]
    choose = max if pick_max else min
    tails = [(f.at(far), f.tail) for f in fs]
    for i in range(len(tails)):
        for j in range(i + 1, len(tails)):
            (a, sa), (b, sb) = tails[i], tails[j]
            if sa != sb:
                dt = Dyadic.from_fraction((b - a).to_fraction() / (sa - sb))
                if dt > Dyadic(0):
                    extra.append(far + dt)
    ts = sorted(set(ts) | set(extra))
    pts: list[tuple[Dyadic, Dyadic]] = []
    prev_t = None
    prev_vals = None
    for t in ts:
        vals = [f.at(t) for f in fs]
        if prev_t is not None:
            # insert crossings between the current leader and others
            cands = set()
            for i in range(len(fs)):
                for j in range(i + 1, len(fs)):
                    d0 = prev_vals[i] - prev_vals[j]
                    d1 = vals[i] - vals[j]
                    if (d0 < 0 < d1) or (d1 < 0 < d0):
                        cands.add(_crossing(prev_t, d0, t, d1))
            for c in sorted(cands):
                pts.append((c, choose(f.at(c) for f in fs)))
        pts.append((t, choose(vals)))
        prev_t, prev_vals = t, vals
    # tail slope of the envelope: winner far out
    probe = ts[-1] + 1
    winner = choose(range(len(fs)), key=lambda i: (fs[i].at(probe), fs[i].tail))
    return _PL(_dedupe(pts), fs[winner].tail)


def _first_meet(lam: _PL, rho: _PL) -> Dyadic:
    """Least ``t >= -1`` with ``lam(t) <= rho(t)``."""
    ts = sorted({t for t, _ in lam.pts} | {t for t, _ in rho.pts})
    prev_t = None
    prev_d = None
    for t in ts:
        d = lam.at(t) - rho.at(t)
        if d <= 0:
            if prev_t is None or prev_d <= 0:
                return t
            return _crossing(prev_t, prev_d, t, d)
        prev_t, prev_d = t, d
    # beyond all breakpoints both are linear
    slope = lam.tail - rho.tail
    if slope >= 0:
        raise ThermographError("scaffolds never meet")
    return ts[-1] + Dyadic.from_fraction(prev_d.to_fraction() / (-slope))


@dataclass(frozen=True)
class Thermograph:
    left: Trajectory
    right: Trajectory
    temperature: Dyadic
    mast: Dyadic

    def to_dict(self) -> dict:
        return {
            "temperature": str(self.temperature),
            "mast": str(self.mast),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


_thermo: dict[int, Thermograph] = {}


def _truncate(f: _PL, temp: Dyadic, mast: Dyadic) -> Trajectory:
    pts = [p for p in f.pts if p[0] < temp]
    pts.append((temp, mast))
    return Trajectory(_simplify(pts))


def thermograph(g: Game) -> Thermograph:
    """Thermograph of a canonical game; integers get a bare mast at ``t = -1``."""
    th = _thermo.get(g.id)
    if th is not None:
        return th
    k = kind_of(g)
    if not g.left or not g.right:
        if k.kind is not Kind.INTEGER:
            raise ThermographError("game with an empty option set is not a canonical integer")
        c = Trajectory.constant(k.value)
        th = Thermograph(c, c, MINUS_ONE, k.value)
    else:
        lam = _envelope([_sheared(thermograph(x).right, -1) for x in g.left], pick_max=True)
        rho = _envelope([_sheared(thermograph(x).left, +1) for x in g.right], pick_max=False)
        temp = _first_meet(lam, rho)
        mast = lam.at(temp)
        th = Thermograph(_truncate(lam, temp, mast), _truncate(rho, temp, mast), temp, mast)
    _thermo[g.id] = th
    return th


def temperature(g: Game) -> Dyadic:
    return thermograph(g).temperature


def mast_value(g: Game) -> Dyadic:
    return thermograph(g).mast


def game_thermograph(g: Game) -> Thermograph:
    """Thermograph of any game (canonicalized first)."""
    return thermograph(canonicalize(g))


def svg(th: Thermograph, scale: int = 40, margin: int = 30) -> str:
    """SVG drawing; temperature up, values increasing to the LEFT.

    The mast is drawn up to ``temperature + 1`` only.
    """
    top = th.temperature + 1
    if top < Dyadic(1):
        top = Dyadic(1)
    vals = [v for tr in (th.left, th.right) for _, v in tr.points] + [th.mast]
    vmin, vmax = min(vals), max(vals)
    width = float(vmax - vmin) * scale + 2 * margin
    height = float(top + 1) * scale + 2 * margin

    def xy(t, v):
        x = margin + float(vmax - v) * scale
        y = margin + float(top - t) * scale
        return f"{x:.2f},{y:.2f}"

    def poly(tr: Trajectory, cls: str) -> str:
        pts = list(tr.points) + [(th.temperature, th.mast)]
        pts = [p for p in pts if p[0] <= th.temperature]
        coords = " ".join(xy(t, v) for t, v in pts)
        return f'<polyline class="{cls}" points="{coords}" fill="none" stroke="black" stroke-width="2"/>'

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">',
        "<!-- mast truncated at temperature + 1 -->",
        f'<line x1="{margin}" x2="{width - margin:.2f}" y1="{xy(0, vmin).split(",")[1]}" '
        f'y2="{xy(0, vmin).split(",")[1]}" stroke="grey"/>',
        poly(th.left, "left"),
        poly(th.right, "right"),
        f'<polyline class="mast" points="{xy(th.temperature, th.mast)} {xy(top, th.mast)}" '
        'fill="none" stroke="black" stroke-width="2"/>',
        f'<text x="{margin}" y="{margin / 2:.0f}" font-size="12">t = {th.temperature}, mast = {th.mast}</text>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def trajectories_agree_above(a: Thermograph, b: Thermograph, t0=0) -> bool:
    """True if both boundaries coincide pointwise for all ``t >= t0``."""
    t0 = Dyadic.coerce(t0)
    ts = {t0}
    for th in (a, b):
        for tr in (th.left, th.right):
            ts.update(t for t, _ in tr.points if t >= t0)
    for t in ts:
        if a.left(t) != b.left(t) or a.right(t) != b.right(t):
            return False
    return True


__all__: Iterable[str] = [
    "Trajectory",
    "Thermograph",
    "ThermographError",
    "thermograph",
    "temperature",
    "mast_value",
    "trajectory_eval",
    "game_thermograph",
    "svg",
    "trajectories_agree_above",
]
