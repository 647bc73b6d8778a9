"""Minimum edge splitting to enable a bitonic st-ordering.

For each vertex independently, an apex position is chosen among its
successors so that the number of conflicting paths (those directed away
from the apex) is minimized; the conflicting out-edges are then split by
inserting one dummy vertex each.  Splitting never changes reachability
between original vertices, so the per-vertex choices are globally optimal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EdgeNotFound, TooLarge
from .graph import EmbeddedStGraph, FaceIndex, build_graph, compute_faces
from .ordering import BitonicOrdering, find_bitonic_ordering


@dataclass(frozen=True)
class SplitPlan:
    """Chosen apex per vertex and the edges to split.

    ``apex[u]`` is the 1-based successor position of the apex of ``S(u)``
    (0 for vertices without successors).  ``split_edges`` is ordered by
    tail vertex id, then successor position.
    """

    apex: tuple[int, ...]
    split_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SplitResult:
    """Graph with dummy vertices substituted for the split edges."""

    graph: EmbeddedStGraph
    dummy_of: dict[int, tuple[int, int]]
    origin: EmbeddedStGraph


def left_right_counts(g: EmbeddedStGraph, fi: FaceIndex, u: int):
    """Prefix path counts over the successor list of ``u``.

    Returns ``(L, R)`` with ``L[h-1]`` = number of right-to-left paths and
    ``R[h-1]`` = number of left-to-right paths between consecutive
    successors strictly before position ``h`` (``h`` in ``1..m``).
    """
    row = g.succ[u]
    m = len(row)
    edge_ids = g.out_edge_ids[u]
    L, R = [0] * m, [0] * m
    for i in range(1, m):
        w = fi.face_sink[fi.corner_face[edge_ids[i - 1]]]
        L[i] = L[i - 1] + (1 if w == row[i - 1] else 0)
        R[i] = R[i - 1] + (1 if w == row[i] else 0)
    return L, R


def minimum_split_plan(g: EmbeddedStGraph,
                       fi: FaceIndex | None = None) -> SplitPlan:
    """Smallest set of edges whose splitting admits a bitonic st-ordering.

    Per vertex, a running counter over the consecutive-successor path
    directions picks the apex (first position achieving the minimum), then
    the out-edges conflicting with that apex are collected.
    """
    if fi is None:
        fi = compute_faces(g)
    face_sink = fi.face_sink
    corner_face = fi.corner_face

    apex = [0] * g.n
    split: list[tuple[int, int]] = []
    for u in range(g.n):
        row = g.succ[u]
        m = len(row)
        if m == 0:
            continue
        edge_ids = g.out_edge_ids[u]
        sinks = [face_sink[corner_face[edge_ids[i]]] for i in range(m - 1)]
        h = 1
        c = c_min = 0
        for i in range(2, m + 1):
            w = sinks[i - 2]
            if w == row[i - 2]:
                c += 1
            elif w == row[i - 1]:
                c -= 1
            if c < c_min:
                c_min = c
                h = i
        apex[u] = h
        for i in range(1, h):
            if sinks[i - 1] == row[i - 1]:
                split.append((u, row[i - 1]))
        for i in range(h, m):
            if sinks[i - 1] == row[i]:
                split.append((u, row[i]))
    return SplitPlan(apex=tuple(apex), split_edges=tuple(split))


def transitive_split_plan(g: EmbeddedStGraph,
                          fi: FaceIndex | None = None) -> SplitPlan:
    """Baseline: split every transitive edge (reduced-graph strategy).

    An out-edge is transitive iff one of its neighbouring consecutive
    successors has a path into its head; bounded by 2n-5 splits.
    """
    if fi is None:
        fi = compute_faces(g)
    split = []
    for u in range(g.n):
        row = g.succ[u]
        m = len(row)
        edge_ids = g.out_edge_ids[u]
        sinks = [fi.face_sink[fi.corner_face[edge_ids[i]]]
                 for i in range(m - 1)]
        for i in range(m):
            left = i > 0 and sinks[i - 1] == row[i]
            right = i < m - 1 and sinks[i] == row[i]
            if left or right:
                split.append((u, row[i]))
    return SplitPlan(apex=tuple([0] * g.n), split_edges=tuple(split))


def apply_splits(g: EmbeddedStGraph, plan: SplitPlan) -> SplitResult:
    """Replace each planned edge (u,v) by (u,d),(d,v) with a fresh dummy.

    The dummy takes the split edge's position in the rotation at both
    endpoints, so the embedding carries over unchanged.
    """
    pos_of: dict[tuple[int, int], int] = {}
    for u, v in plan.split_edges:
        try:
            e = g.edge_id(u, v)
        except KeyError:
            raise EdgeNotFound(f"({u}, {v}) is not an edge") from None
        pos_of[(u, v)] = e - g.out_edge_ids[u][0]

    rows = [list(r) for r in g.succ]
    dummy_of: dict[int, tuple[int, int]] = {}
    next_id = g.n
    for u, v in sorted(pos_of, key=lambda uv: (uv[0], pos_of[uv])):
        d = next_id
        next_id += 1
        rows[u][pos_of[(u, v)]] = d
        rows.append([v])
        dummy_of[d] = (u, v)
    graph = build_graph(next_id, g.s, g.t, rows)
    return SplitResult(graph=graph, dummy_of=dummy_of, origin=g)


def minimum_splits_bruteforce(g: EmbeddedStGraph, budget: int,
                              max_edges: int = 14) -> int:
    """Smallest k <= budget of edge splits enabling a bitonic st-ordering.

    Exhaustive over k-subsets of edges; returns ``budget + 1`` if no subset
    within budget works.  Testing oracle only.
    """
    if g.m > max_edges:
        raise TooLarge(f"{g.m} edges exceeds the oracle bound {max_edges}")
    all_edges = g.edges
    for k in range(budget + 1):
        for subset in itertools.combinations(all_edges, k):
            res = apply_splits(g, SplitPlan(apex=tuple([0] * g.n),
                                            split_edges=subset))
            if isinstance(find_bitonic_ordering(res.graph), BitonicOrdering):
                return k
    return budget + 1


def plan_to_text(plan: SplitPlan) -> str:
    lines = [f"split {u} {v}" for u, v in plan.split_edges]
    lines.append(f"total {len(plan.split_edges)}")
    return "\n".join(lines) + "\n"


def split_result_to_text(res: SplitResult) -> str:
    from .io import graph_to_text
    lines = [graph_to_text(res.graph).rstrip("\n")]
    for d in sorted(res.dummy_of):
        u, v = res.dummy_of[d]
        lines.append(f"dummy {d} {u} {v}")
    return "\n".join(lines) + "\n"
