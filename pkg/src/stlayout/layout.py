"""Upward planar grid drawings driven by a bitonic st-ordering.

Straight-line drawing: incremental contour construction with two sentinel
vertices that stay left- and rightmost on every contour, relative x-offsets
along the contour, and a shift tree resolved by two final accumulation
passes.  Poly-line drawing: split conflicting edges first, draw the split
graph straight-line, then turn each dummy vertex into (at most) one bend.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonIntegerCoordinate, OrderingInvalid
from .graph import EmbeddedStGraph, compute_faces
from .ordering import (BitonicOrdering, RejectionWitness,
                       find_bitonic_ordering, verify_bitonic_ordering)
from .splitting import apply_splits, minimum_split_plan, transitive_split_plan

Point = tuple[int, int]


@dataclass(frozen=True)
class GridDrawing:
    """Integer coordinates of an upward planar straight-line drawing."""

    coords: tuple[Point, ...]
    edge_paths: tuple[tuple[Point, ...], ...]
    shift: Point  # translation applied to reach the non-negative quadrant

    @property
    def width(self) -> int:
        xs = [p[0] for p in self.coords]
        return max(xs) - min(xs) if xs else 0

    @property
    def height(self) -> int:
        ys = [p[1] for p in self.coords]
        return max(ys) - min(ys) if ys else 0

    @property
    def bend_points(self) -> list[tuple[int, Point]]:
        return [(e, path[1]) for e, path in enumerate(self.edge_paths)
                if len(path) == 3]


@dataclass(frozen=True)
class PolylineDrawing(GridDrawing):
    """Straight-line drawing of the split graph folded back onto the
    original edges; each formerly split edge carries one bend."""

    splits: tuple[tuple[int, int], ...] = ()

    def _all_points(self) -> list[Point]:
        return list(self.coords) + [p for path in self.edge_paths
                                    for p in path[1:-1]]

    @property
    def width(self) -> int:
        xs = [p[0] for p in self._all_points()]
        return max(xs) - min(xs) if xs else 0

    @property
    def height(self) -> int:
        ys = [p[1] for p in self._all_points()]
        return max(ys) - min(ys) if ys else 0


def draw_straightline(g: EmbeddedStGraph,
                      ord: BitonicOrdering) -> GridDrawing:
    """Run the contour shifting method for a verified bitonic ordering."""
    if not verify_bitonic_ordering(g, ord):
        raise OrderingInvalid("not a bitonic st-ordering for this graph")

    n = g.n
    pi = ord.pi
    order = ord.by_rank()
    VL, VR = n, n + 1

    xoff = [0] * (n + 2)
    yabs = [0] * (n + 2)
    nxt = [-1] * (n + 2)
    prv = [-1] * (n + 2)
    parent = [-1] * (n + 2)

    v1 = order[0]
    xoff[VL], yabs[VL] = 0, 0
    xoff[v1], yabs[v1] = 1, 1
    xoff[VR], yabs[VR] = 1, 0
    nxt[VL], nxt[v1], prv[v1], prv[VR] = v1, VR, VL, v1

    succ = g.succ
    out_ids = g.out_edge_ids
    in_ltr = g.in_edge_ids_ltr
    tail = g.tail

    for k in range(2, n + 1):
        vk = order[k - 1]
        preds = in_ltr[vk]
        wl = tail[preds[0]]
        wr = tail[preds[-1]]
        if wl == wr:
            w = wl
            pos = preds[0] - out_ids[w][0]
            row = succ[w]
            if pos == 0 or pi[row[pos - 1]] <= k:
                wl = prv[w]
            if pos == len(row) - 1 or pi[row[pos + 1]] <= k:
                wr = nxt[w]
            if wl == wr:
                raise OrderingInvalid(
                    f"vertex {vk} has neither left nor right support")

        d = 0
        node = nxt[wl]
        covered = []
        while node != wr:
            d += xoff[node]
            covered.append(node)
            node = nxt[node]
        d += xoff[wr] + 2

        num = d + yabs[wr] - yabs[wl]
        if num & 1:
            raise NonIntegerCoordinate(
                f"odd placement numerator at vertex {vk}")
        x_vk = num // 2
        yabs[vk] = (d + yabs[wr] + yabs[wl]) // 2

        acc = 1 - x_vk
        for w in covered:
            parent[w] = vk
            acc += xoff[w]
            xoff[w] = acc
        xoff[vk] = x_vk
        xoff[wr] = d - x_vk
        nxt[wl], prv[vk] = vk, wl
        nxt[vk], prv[wr] = wr, vk

    # resolve offsets: along the final contour, then down the shift tree
    xabs = [0] * (n + 2)
    node = VL
    run = 0
    while node != -1:
        run += xoff[node]
        xabs[node] = run
        node = nxt[node]
    for k in range(n, 0, -1):
        vk = order[k - 1]
        if parent[vk] != -1:
            xabs[vk] = xoff[vk] + xabs[parent[vk]]

    min_x = min(xabs[v] for v in range(n))
    min_y = min(yabs[v] for v in range(n))
    coords = tuple((xabs[v] - min_x, yabs[v] - min_y) for v in range(n))
    paths = tuple((coords[g.tail[e]], coords[g.head[e]])
                  for e in range(g.m))
    return GridDrawing(coords=coords, edge_paths=paths,
                       shift=(-min_x, -min_y))


def draw_polyline(g: EmbeddedStGraph, *, all_transitive: bool = False,
                  drop_collinear_bends: bool = True) -> PolylineDrawing:
    """Split, order, draw, and substitute dummies by bends."""
    fi = compute_faces(g)
    plan = (transitive_split_plan(g, fi) if all_transitive
            else minimum_split_plan(g, fi))
    if not plan.split_edges:
        ord = find_bitonic_ordering(g, fi)
        if isinstance(ord, RejectionWitness):
            raise AssertionError("graph without conflicts rejected")
        base = draw_straightline(g, ord)
        return PolylineDrawing(coords=base.coords,
                               edge_paths=base.edge_paths,
                               shift=base.shift, splits=())

    res = apply_splits(g, plan)
    ord = find_bitonic_ordering(res.graph)
    if isinstance(ord, RejectionWitness):
        raise AssertionError("split graph unexpectedly rejected")
    base = draw_straightline(res.graph, ord)

    coords = base.coords[:g.n]
    bend_at = {res.graph.edge_id(u, d): base.coords[d]
               for d, (u, v) in res.dummy_of.items()}

    paths = []
    for e in range(g.m):
        u, v = g.tail[e], g.head[e]
        se = res.graph.out_edge_ids[u][e - g.out_edge_ids[u][0]]
        if se in bend_at:
            a, b, c = coords[u], bend_at[se], coords[v]
            if drop_collinear_bends and _collinear(a, b, c):
                paths.append((a, c))
            else:
                paths.append((a, b, c))
        else:
            paths.append((coords[u], coords[v]))
    return PolylineDrawing(coords=coords, edge_paths=tuple(paths),
                           shift=base.shift,
                           splits=tuple(plan.split_edges))


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return (b[0] - a[0]) * (c[1] - a[1]) == (b[1] - a[1]) * (c[0] - a[0])


def emit_svg(d: GridDrawing, scale: int = 20) -> str:
    """Deterministic SVG: circles for vertices, squares for bends.

    The y axis is flipped so ranks grow upward on screen.
    """
    if scale < 1:
        raise ValueError("scale must be >= 1")
    pad = scale
    h = d.height * scale + 2 * pad

    def pt(p: Point) -> tuple[int, int]:
        return p[0] * scale + pad, h - (p[1] * scale + pad)

    lines = []
    w = d.width * scale + 2 * pad
    lines.append(f'<svg xmlns="http://www.w3.org/2000/svg" '
                 f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">')
    r = max(2, scale // 5)
    for path in d.edge_paths:
        pts = " ".join(f"{x},{y}" for x, y in map(pt, path))
        lines.append(f'<polyline points="{pts}" fill="none" '
                     f'stroke="black" stroke-width="1"/>')
    for path in d.edge_paths:
        if len(path) == 3:
            x, y = pt(path[1])
            lines.append(f'<rect x="{x - r}" y="{y - r}" width="{2 * r}" '
                         f'height="{2 * r}" fill="white" stroke="black"/>')
    for p in d.coords:
        x, y = pt(p)
        lines.append(f'<circle cx="{x}" cy="{y}" r="{r}" '
                     f'fill="white" stroke="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
