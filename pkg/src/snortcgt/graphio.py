"""Position file formats.

JSON::

    {"vertices": [{"id": "1", "tint": "none"}, ...], "edges": [["1", "2"], ...]}

Edge list: one ``u v`` pair per line, a lone ``u`` declares an isolated
vertex, and ``blue: u,v,...`` / ``red: ...`` set tints. ``#`` starts a comment.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from snortcgt.snort import Position, Tint


class PositionFormatError(ValueError):
    pass


def position_to_dict(p: Position) -> dict:
    return {
        "vertices": [{"id": str(v), "tint": t.name.lower()} for v, t in p.vertices],
        "edges": [[str(a), str(b)] for a, b in p.sorted_edges()],
    }


def position_from_dict(d: dict) -> Position:
    try:
        verts = d.get("vertices", [])
        ids = []
        tints = {}
        for item in verts:
            if isinstance(item, dict):
                vid = str(item["id"])
                tints[vid] = Tint.parse(item.get("tint", "none"))
            else:
                vid = str(item)
            ids.append(vid)
        edges = [(str(a), str(b)) for a, b in d.get("edges", [])]
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise PositionFormatError(f"bad position JSON: {exc}") from exc
    known = set(ids)
    for a, b in edges:
        if ids and (a not in known or b not in known):
            raise PositionFormatError(f"edge {a}-{b} names an undeclared vertex")
    try:
        return Position.build(ids, edges, tints)
    except ValueError as exc:
        raise PositionFormatError(str(exc)) from exc


def dumps_position(p: Position) -> str:
    return json.dumps(position_to_dict(p), indent=2)


def parse_edge_list(text: str) -> Position:
    ids: list[str] = []
    edges: list[tuple[str, str]] = []
    tints: dict[str, Tint] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if sep:
            key = head.strip().lower()
            if key not in ("blue", "red"):
                raise PositionFormatError(f"line {lineno}: unknown directive {head.strip()!r}")
            for vid in (x.strip() for x in rest.replace(" ", ",").split(",")):
                if vid:
                    tints[vid] = Tint.parse(key)
            continue
        parts = line.split()
        if len(parts) == 1:
            ids.append(parts[0])
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
        else:
            raise PositionFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
    try:
        return Position.build(ids, edges, tints)
    except ValueError as exc:
        raise PositionFormatError(str(exc)) from exc


def loads_position(text: str) -> Position:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PositionFormatError(f"invalid JSON: {exc}") from exc
        return position_from_dict(data)
    return parse_edge_list(text)


def load_position(path: Union[str, Path]) -> Position:
    return loads_position(Path(path).read_text())


def save_position(p: Position, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_position(p) + "\n")
