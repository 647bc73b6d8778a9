"""Construction, validation errors, faces, and face-sink semantics."""

from __future__ import annotations

import pytest

from stlayout import (GraphFormatError, MultipleSourcesOrSinks, NotAcyclic,
                      NotPlanarEmbedding, ParallelEdge, build_graph,
                      compute_faces, face_sink, reachable)
from conftest import corpus


def test_triangle_structure(triangle):
    assert triangle.n == 3 and triangle.m == 3
    assert triangle.edges == [(0, 1), (0, 2), (1, 2)]
    assert triangle.pred_ltr(2) == [1, 0]


def test_single_edge(single_edge):
    fi = compute_faces(single_edge)
    assert len(fi.faces) == 1
    assert fi.outer_face == 0
    assert fi.inner_faces() == []


def test_f1_faces(f1):
    fi = compute_faces(f1)
    # n - m + f = 2  ->  f = 2 - 5 + 7 = 4 faces, 3 inner
    assert len(fi.faces) == 4
    assert len(fi.inner_faces()) == 3
    # corner (s, v1, v2) -> face with sink v1; corner (s, v2, v3) -> sink v3
    assert face_sink(fi, f1, 0, 1) == 1
    assert face_sink(fi, f1, 0, 2) == 3


def test_face_sink_decides_paths(f1):
    # sink == right successor iff left ~> right; == left iff right ~> left
    assert reachable(f1, 2, 1) and not reachable(f1, 1, 2)
    fi = compute_faces(f1)
    assert face_sink(fi, f1, 2, 1) in (1, 3, 4)


def test_face_sink_range_check(triangle):
    fi = compute_faces(triangle)
    with pytest.raises(IndexError):
        face_sink(fi, triangle, 0, 2)
    with pytest.raises(IndexError):
        face_sink(fi, triangle, 0, 0)


def test_inner_faces_have_unique_source_and_sink(sixteen):
    fi = compute_faces(sixteen)
    for f in fi.inner_faces():
        assert fi.face_source[f] >= 0
        assert fi.face_sink[f] >= 0


def test_rejects_cycle():
    with pytest.raises(NotAcyclic):
        build_graph(4, 0, 3, [[1], [2, 3], [1], []])


def test_rejects_parallel_and_loops():
    with pytest.raises(ParallelEdge):
        build_graph(3, 0, 2, [[1, 1], [2], []])
    with pytest.raises(ParallelEdge):
        build_graph(3, 0, 2, [[1, 0], [2], []])


def test_rejects_extra_source_or_sink():
    with pytest.raises(MultipleSourcesOrSinks):
        build_graph(4, 0, 3, [[3], [3], [3], []])  # 1 and 2 are sources
    with pytest.raises(MultipleSourcesOrSinks):
        build_graph(4, 0, 3, [[1, 2], [], [3], []])  # 1 is a second sink


def test_rejects_bad_header_values():
    with pytest.raises(GraphFormatError):
        build_graph(1, 0, 0, [[]])
    with pytest.raises(GraphFormatError):
        build_graph(3, 0, 0, [[1], [2], []])


def test_rejects_crossing_chords():
    # 1 -> {3,4} and 2 -> {4,3} cannot be embedded without a crossing:
    # the incoming edges of 3 (and 4) can never be consecutive
    with pytest.raises(NotPlanarEmbedding):
        build_graph(6, 0, 5, [[1, 2], [3, 4], [4, 3], [5], [5], []])


def test_mirrored_rotations_still_embed():
    # the incoming rotations are derived, so any consistent successor
    # order is accepted; [2,1] is the mirror image of the diamond
    g = build_graph(4, 0, 3, [[2, 1], [3], [3], []])
    assert len(compute_faces(g).inner_faces()) == 1


def test_topo_order_is_smallest_ready_first(sixteen):
    order = sixteen.topo_order
    pos = {v: i for i, v in enumerate(order)}
    for u, v in sixteen.edges:
        assert pos[u] < pos[v]
    assert order[0] == sixteen.s and order[-1] == sixteen.t


def test_in_rotation_reverses_pred_order(f1):
    assert f1.in_rotation(4) == list(reversed(f1.in_edge_ids_ltr[4]))


def test_generated_graphs_validate():
    for g in corpus(sizes=(5, 9, 17, 33), seeds=range(8)):
        fi = compute_faces(g)
        assert g.n - g.m + len(fi.faces) == 2
        for f in fi.inner_faces():
            assert fi.face_sink[f] >= 0 and fi.face_source[f] >= 0
