"""Text and JSON serialization for graphs and drawings.

Graph text format (line oriented, ``#`` starts a comment):

    n s t
    u: v_a v_b v_c ...      # successors of u, clockwise, one line per vertex

JSON mirror: ``{"n": ..., "s": ..., "t": ..., "succ": [[...], ...]}``.
Both formats round-trip bit-exactly through parse/emit.

Drawing text format: one ``v x y`` line per vertex, then ``bend u v x y``
lines for the bent edges.
"""

from __future__ import annotations

import json

from .errors import GraphFormatError
from .graph import EmbeddedStGraph, build_graph
from .layout import GridDrawing, PolylineDrawing


def graph_to_text(g: EmbeddedStGraph) -> str:
    lines = [f"{g.n} {g.s} {g.t}"]
    for u in range(g.n):
        row = " ".join(str(v) for v in g.succ[u])
        lines.append(f"{u}: {row}".rstrip())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> EmbeddedStGraph:
    header = None
    rows: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: header must be 'n s t'")
            try:
                header = tuple(int(p) for p in parts)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad header") from None
            continue
        if ":" not in line:
            raise GraphFormatError(f"line {lineno}: expected 'u: ...'")
        left, right = line.split(":", 1)
        try:
            u = int(left)
            row = [int(x) for x in right.split()]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex line") from None
        if u in rows:
            raise GraphFormatError(f"line {lineno}: duplicate vertex {u}")
        rows[u] = row
    if header is None:
        raise GraphFormatError("empty graph file")
    n, s, t = header
    if n < 0 or any(u < 0 or u >= n for u in rows):
        raise GraphFormatError("vertex id out of range")
    succ = [rows.get(u, []) for u in range(n)]
    return build_graph(n, s, t, succ)


def graph_to_json(g: EmbeddedStGraph) -> str:
    return json.dumps({"n": g.n, "s": g.s, "t": g.t,
                       "succ": [list(r) for r in g.succ]})


def graph_from_json(text: str) -> EmbeddedStGraph:
    try:
        obj = json.loads(text)
        return build_graph(int(obj["n"]), int(obj["s"]), int(obj["t"]),
                           [[int(v) for v in row] for row in obj["succ"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from None


def load_graph(path: str) -> EmbeddedStGraph:
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(text)
    return graph_from_text(text)


def drawing_to_text(g: EmbeddedStGraph, d: GridDrawing) -> str:
    lines = [f"{v} {x} {y}" for v, (x, y) in enumerate(d.coords[:g.n])]
    for e, (bx, by) in d.bend_points:
        lines.append(f"bend {g.tail[e]} {g.head[e]} {bx} {by}")
    return "\n".join(lines) + "\n"


def drawing_from_text(text: str, g: EmbeddedStGraph) -> GridDrawing:
    coords: dict[int, tuple[int, int]] = {}
    bends: dict[int, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "bend":
                u, v, x, y = (int(p) for p in parts[1:])
                bends[g.edge_id(u, v)] = (x, y)
            else:
                v, x, y = (int(p) for p in parts)
                coords[v] = (x, y)
        except (ValueError, KeyError):
            raise GraphFormatError(f"line {lineno}: bad drawing line") from None
    if sorted(coords) != list(range(g.n)):
        raise GraphFormatError("drawing must assign every vertex exactly once")
    cs = tuple(coords[v] for v in range(g.n))
    paths = []
    for e in range(g.m):
        a, c = cs[g.tail[e]], cs[g.head[e]]
        paths.append((a, bends[e], c) if e in bends else (a, c))
    if bends:
        return PolylineDrawing(coords=cs, edge_paths=tuple(paths),
                               shift=(0, 0))
    return GridDrawing(coords=cs, edge_paths=tuple(paths), shift=(0, 0))
