"""JSON documents for tilings and multicurves.

Document shape::

    {"kind": "tiling", "eps": {"length": 1e-9}, "tiles": [[edge, ...], ...]}
    {"kind": "multicurve", "members": [[edge, ...], ...]}

with edges ``{"type": "segment", "from": [x, y], "to": [x, y]}`` or
``{"type": "arc", "center": [x, y], "radius": r, "start_angle": a, "sweep": s}``.
Floats are written with ``repr``, the shortest string that reads back to
the same double, so parse(serialize(x)) reproduces every number exactly.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .errors import DocumentError, GeometryError
from .kernel import Arc, Chain, Edge, Point, Region, Segment
from .multicurve import Multicurve
from .tolerance import DEFAULT_TOL, Tolerance
from .validate import Tiling

_TOP_KEYS = {"tiling": {"kind", "eps", "tiles"}, "multicurve": {"kind", "eps", "members"}}
_EDGE_KEYS = {"segment": {"type", "from", "to"},
              "arc": {"type", "center", "radius", "start_angle", "sweep"}}
_EPS_KEYS = {"length", "angle", "area", "hausdorff"}


def _index_lines(text: str) -> dict[str, int]:
    """Best-effort line numbers for every array/object position in a JSON text.

    A small scanner over the raw text; it tracks container nesting and the
    current key or index, which is enough to point error messages at a line.
    """
    lines: dict[str, int] = {}
    stack: list[list] = []  # [path, is_array, index, pending_key]
    line = 1
    i, n = 0, len(text)

    def here() -> str:
        if not stack:
            return ""
        path, is_array, idx, key = stack[-1]
        if is_array:
            return f"{path}[{idx}]"
        if key is None:
            return path
        return f"{path}.{key}" if path else key

    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
        elif ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                j += 2 if text[j] == "\\" else 1
            s = text[i + 1:j]
            k = j + 1
            while k < n and text[k] in " \t\r\n":
                k += 1
            if stack and not stack[-1][1] and k < n and text[k] == ":":
                stack[-1][3] = s
                lines.setdefault(here(), line)
            i = j
        elif ch in "[{":
            p = here()
            lines.setdefault(p, line)
            stack.append([p, ch == "[", 0, None])
        elif ch in "]}":
            if stack:
                stack.pop()
        elif ch == "," and stack:
            if stack[-1][1]:
                stack[-1][2] += 1
                lines.setdefault(here(), line)
            else:
                stack[-1][3] = None
        elif stack and stack[-1][1] and not ch.isspace():
            lines.setdefault(here(), line)
        i += 1
    return lines


class _Reader:
    def __init__(self, text: str):
        self.lines = _index_lines(text)

    def fail(self, message: str, path: str):
        line = self.lines.get(path)
        if line is None:
            # Fall back to the closest enclosing container.
            p = path
            while p and line is None:
                cut = max(p.rfind("."), p.rfind("["))
                p = p[:cut] if cut > 0 else ""
                line = self.lines.get(p)
        raise DocumentError(message, path or "$", line)

    def number(self, v, path: str) -> float:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self.fail("expected a number", path)
        x = float(v)
        if not math.isfinite(x):
            self.fail("number must be finite", path)
        return x

    def point(self, v, path: str) -> Point:
        if not isinstance(v, list) or len(v) != 2:
            self.fail("expected a point [x, y]", path)
        return Point(self.number(v[0], f"{path}[0]"), self.number(v[1], f"{path}[1]"))

    def keys(self, obj, allowed: set, required: set, path: str) -> None:
        if not isinstance(obj, dict):
            self.fail("expected an object", path)
        for k in obj:
            if k not in allowed:
                self.fail(f"unknown field {k!r}", f"{path}.{k}" if path else k)
        for k in sorted(required):
            if k not in obj:
                self.fail(f"missing field {k!r}", path)

    def edge(self, obj, path: str) -> Edge:
        if not isinstance(obj, dict):
            self.fail("expected an edge object", path)
        kind = obj.get("type")
        if kind not in _EDGE_KEYS:
            self.fail(f"edge type must be 'segment' or 'arc', got {kind!r}", f"{path}.type")
        self.keys(obj, _EDGE_KEYS[kind], _EDGE_KEYS[kind], path)
        try:
            if kind == "segment":
                return Segment(self.point(obj["from"], f"{path}.from"),
                               self.point(obj["to"], f"{path}.to"))
            return Arc(self.point(obj["center"], f"{path}.center"),
                       self.number(obj["radius"], f"{path}.radius"),
                       self.number(obj["start_angle"], f"{path}.start_angle"),
                       self.number(obj["sweep"], f"{path}.sweep"))
        except GeometryError as exc:
            self.fail(f"degenerate edge: {exc}", path)

    def edges(self, seq, path: str) -> list[Edge]:
        if not isinstance(seq, list) or not seq:
            self.fail("expected a nonempty list of edges", path)
        return [self.edge(e, f"{path}[{i}]") for i, e in enumerate(seq)]

    def tolerance(self, obj, path: str) -> Tolerance:
        self.keys(obj, _EPS_KEYS, set(), path)
        vals = {}
        for k, v in obj.items():
            x = self.number(v, f"{path}.{k}")
            if not x > 0:
                self.fail("tolerance must be positive", f"{path}.{k}")
            vals[k] = x
        return Tolerance(**vals)


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc.msg}", None, exc.lineno) from exc


def parse_document(text: str) -> Tiling | Multicurve:
    """Parse a tiling or multicurve document, rejecting unknown fields."""
    doc = _load(text)
    r = _Reader(text)
    if not isinstance(doc, dict):
        r.fail("document must be a JSON object", "")
    kind = doc.get("kind")
    if kind not in _TOP_KEYS:
        r.fail(f"kind must be 'tiling' or 'multicurve', got {kind!r}", "kind")
    r.keys(doc, _TOP_KEYS[kind], _TOP_KEYS[kind] - {"eps"}, "")
    tol = r.tolerance(doc["eps"], "eps") if "eps" in doc else DEFAULT_TOL
    field = "tiles" if kind == "tiling" else "members"
    groups = doc[field]
    if not isinstance(groups, list) or not groups:
        r.fail(f"expected a nonempty list of {field}", field)
    if kind == "tiling":
        tiles = []
        for i, g in enumerate(groups):
            edges = r.edges(g, f"tiles[{i}]")
            try:
                tiles.append(Region.from_edges(edges))
            except GeometryError as exc:
                r.fail(f"tile is not a Jordan region: {exc}", f"tiles[{i}]")
        return Tiling(tuple(tiles), tol)
    members = []
    for i, g in enumerate(groups):
        edges = r.edges(g, f"members[{i}]")
        try:
            members.append(Chain(tuple(edges)))
        except GeometryError as exc:
            r.fail(f"member is not a simple open chain: {exc}", f"members[{i}]")
    try:
        return Multicurve(tuple(members))
    except GeometryError as exc:
        r.fail(f"not a multicurve: {exc}", "members")


def parse_tiling(text: str) -> Tiling:
    doc = parse_document(text)
    if not isinstance(doc, Tiling):
        raise DocumentError("expected a tiling document", "kind")
    return doc


def parse_multicurve(text: str) -> Multicurve:
    """Parse a multicurve document; a one-tile tiling document is read as that tile's boundary."""
    doc = parse_document(text)
    if isinstance(doc, Tiling):
        if len(doc) != 1:
            raise DocumentError("only a single-tile tiling can be read as a multicurve", "tiles")
        return Multicurve.from_chain(doc.tiles[0].boundary)
    return doc


def edge_to_json(e: Edge) -> dict:
    if isinstance(e, Segment):
        return {"type": "segment", "from": [e.start.x, e.start.y], "to": [e.end.x, e.end.y]}
    return {"type": "arc", "center": [e.center.x, e.center.y], "radius": e.radius,
            "start_angle": e.start_angle, "sweep": e.sweep}


def _tol_to_json(tol: Tolerance) -> dict:
    return {"length": tol.length, "angle": tol.angle, "area": tol.area, "hausdorff": tol.hausdorff}


def serialize(obj: Tiling | Multicurve) -> str:
    """Deterministic JSON text for a tiling or multicurve."""
    if isinstance(obj, Tiling):
        doc = {"kind": "tiling", "eps": _tol_to_json(obj.tol),
               "tiles": [[edge_to_json(e) for e in tile.edges] for tile in obj.tiles]}
    elif isinstance(obj, Multicurve):
        doc = {"kind": "multicurve", "members": [[edge_to_json(e) for e in m.edges]
                                                 for m in obj.members]}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(doc, indent=1) + "\n"


def read_document(path) -> Tiling | Multicurve:
    return parse_document(Path(path).read_text())


def write_document(obj, path) -> None:
    Path(path).write_text(serialize(obj))
