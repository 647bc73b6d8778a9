"""Recognition of bitonic st-orderings and their computation.

The recognition pass walks every successor list once, deciding the path
direction between consecutive successors from the sink of their common
face.  Gap edges are collected so that a plain topological sort of the
augmented graph yields an ordering under which every successor list is
bitonic.  A graph is rejected exactly when some successor list contains a
right-to-left path followed by a left-to-right path.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import TooLarge
from .graph import EmbeddedStGraph, FaceIndex, build_graph, compute_faces


@dataclass(frozen=True)
class BitonicOrdering:
    """A vertex ranking plus the gap edges that certified it.

    ``pi[v]`` is the rank of vertex ``v`` in ``1..n``.  ``augment_edges``
    are the edges added between consecutive successors; ``augment_faces``
    holds, per added edge, the inner face it was drawn into.
    """

    pi: tuple[int, ...]
    augment_edges: tuple[tuple[int, int], ...]
    augment_faces: tuple[int, ...]

    def by_rank(self) -> list[int]:
        """Vertices sorted by rank."""
        order = [0] * len(self.pi)
        for v, r in enumerate(self.pi):
            order[r - 1] = v
        return order


@dataclass(frozen=True)
class RejectionWitness:
    """A forbidden configuration at vertex ``u``.

    With ``S(u) = v_1..v_m`` and 1-based pair positions ``i < j``: there
    are paths ``v_{i+1} ~> v_i`` and ``v_j ~> v_{j+1}``.
    """

    u: int
    i: int
    j: int


def is_bitonic(seq) -> bool:
    """True iff ``seq`` strictly rises to an apex and strictly falls after.

    Elements must be pairwise distinct.  Equivalent formulation: no descent
    is ever followed by an ascent.
    """
    seq = list(seq)
    descended = False
    for a, b in zip(seq, seq[1:]):
        if a < b:
            if descended:
                return False
        else:
            descended = True
    return True


def find_bitonic_ordering(g: EmbeddedStGraph, fi: FaceIndex | None = None):
    """Recognize and order: returns a BitonicOrdering or RejectionWitness."""
    if fi is None:
        fi = compute_faces(g)
    face_sink = fi.face_sink
    corner_face = fi.corner_face

    aug: list[tuple[int, int]] = []
    aug_faces: list[int] = []
    for u in range(g.n):
        row = g.succ[u]
        m = len(row)
        if m < 2:
            continue
        edge_ids = g.out_edge_ids[u]
        decreasing = False
        first_desc = 0
        for i in range(m - 1):
            f = corner_face[edge_ids[i]]
            w = face_sink[f]
            vi, vnext = row[i], row[i + 1]
            if w == vnext:
                if decreasing:
                    return RejectionWitness(u=u, i=first_desc, j=i + 1)
            elif w == vi:
                if not decreasing:
                    decreasing = True
                    first_desc = i + 1
            else:
                if decreasing:
                    aug.append((vnext, vi))
                else:
                    aug.append((vi, vnext))
                aug_faces.append(f)

    pi = _topological_ranks(g, aug)
    return BitonicOrdering(pi=tuple(pi), augment_edges=tuple(aug),
                           augment_faces=tuple(aug_faces))


def _topological_ranks(g: EmbeddedStGraph, extra_edges) -> list[int]:
    """Deterministic (smallest-ready-vertex-first) ranks of G plus overlay."""
    n = g.n
    extra_succ: dict[int, list[int]] = {}
    in_deg = [0] * n
    for v in g.head:
        in_deg[v] += 1
    for a, b in extra_edges:
        extra_succ.setdefault(a, []).append(b)
        in_deg[b] += 1
    ready = [v for v in range(n) if in_deg[v] == 0]
    heapq.heapify(ready)
    pi = [0] * n
    rank = 0
    while ready:
        u = heapq.heappop(ready)
        rank += 1
        pi[u] = rank
        for v in g.succ[u]:
            in_deg[v] -= 1
            if in_deg[v] == 0:
                heapq.heappush(ready, v)
        for v in extra_succ.get(u, ()):
            in_deg[v] -= 1
            if in_deg[v] == 0:
                heapq.heappush(ready, v)
    if rank != n:
        raise AssertionError("augmented graph has a cycle")
    return pi


def verify_bitonic_ordering(g: EmbeddedStGraph, ord: BitonicOrdering) -> bool:
    """Independent check: st-ordering plus bitonic successor lists.

    Does not consult the augmentation edges.
    """
    pi = ord.pi
    if sorted(pi) != list(range(1, g.n + 1)):
        return False
    for e in range(g.m):
        if pi[g.tail[e]] >= pi[g.head[e]]:
            return False
    for u in range(g.n):
        if not is_bitonic([pi[v] for v in g.succ[u]]):
            return False
    return True


def exists_bitonic_bruteforce(g: EmbeddedStGraph, max_n: int = 10) -> bool:
    """Enumerate all topological orderings; True iff one is bitonic.

    Testing oracle only; guarded against factorial blowup.
    """
    if g.n > max_n:
        raise TooLarge(f"{g.n} vertices exceeds the oracle bound {max_n}")
    n = g.n
    in_deg = [0] * n
    for v in g.head:
        in_deg[v] += 1
    pi = [0] * n

    def rec(rank: int) -> bool:
        if rank > n:
            return all(is_bitonic([pi[v] for v in g.succ[u]])
                       for u in range(n))
        for u in range(n):
            if in_deg[u] == 0 and pi[u] == 0:
                pi[u] = rank
                for v in g.succ[u]:
                    in_deg[v] -= 1
                if rec(rank + 1):
                    return True
                for v in g.succ[u]:
                    in_deg[v] += 1
                pi[u] = 0
        return False

    return rec(1)


def augmented_graph(g: EmbeddedStGraph, ord: BitonicOrdering,
                    fi: FaceIndex | None = None) -> EmbeddedStGraph:
    """Materialize G plus the gap edges in the inherited embedding.

    Each gap edge is inserted into the successor rotation of its tail at
    the corner where its face touches the tail.  The result is validated
    by ``build_graph``, which checks st-planarity of the augmentation.
    """
    if fi is None:
        fi = compute_faces(g)
    inserts: dict[int, list[tuple[int, int]]] = {}
    for (x, y), f in zip(ord.augment_edges, ord.augment_faces):
        pos = _corner_pos_at(g, fi, f, x)
        inserts.setdefault(x, []).append((pos, y))
    rows = [list(r) for r in g.succ]
    for x, ins in inserts.items():
        for pos, y in sorted(ins, reverse=True):
            rows[x].insert(pos, y)
    return build_graph(g.n, g.s, g.t, rows)


def _corner_pos_at(g: EmbeddedStGraph, fi: FaceIndex, f: int, x: int) -> int:
    """Successor-list position where an edge leaving ``x`` into face ``f``
    must be inserted to preserve the embedding."""
    cycle = fi.faces[f]
    k = len(cycle)
    out_ids = g.out_edge_ids[x]
    for idx in range(k):
        d_in = cycle[idx]
        e_in = d_in >> 1
        w = g.head[e_in] if d_in & 1 == 0 else g.tail[e_in]
        if w != x:
            continue
        if g.tail[e_in] == x and d_in & 1 == 1:
            # arrived at x along one of its own out-edges: insert after it
            return out_ids.index(e_in) + 1
        d_out = cycle[(idx + 1) % k]
        e_out = d_out >> 1
        if g.tail[e_out] == x:
            # corner between an in-edge and the first out-edge
            pos = out_ids.index(e_out)
            if pos != 0:
                raise AssertionError("in-to-out corner must precede the "
                                     "first successor")
            return 0
    raise AssertionError(f"vertex {x} has no usable corner on face {f}")


def ordering_to_text(g: EmbeddedStGraph, ord: BitonicOrdering) -> str:
    """One line ``rank v`` per vertex; gap edges as comments."""
    lines = [f"{ord.pi[v]} {v}" for v in ord.by_rank()]
    for a, b in ord.augment_edges:
        lines.append(f"# aug {a} {b}")
    return "\n".join(lines) + "\n"


def witness_to_text(w: RejectionWitness) -> str:
    return f"reject {w.u} {w.i} {w.j}\n"
