"""Text/JSON graph round-trips and drawing files."""

from __future__ import annotations

import pytest

from stlayout import (GraphFormatError, draw_polyline, drawing_from_text,
                      drawing_to_text, graph_from_json, graph_from_text,
                      graph_to_json, graph_to_text, load_graph)
from conftest import corpus


def test_text_roundtrip(f1):
    text = graph_to_text(f1)
    assert text.splitlines()[0] == "5 0 4"
    g2 = graph_from_text(text)
    assert g2.succ == f1.succ and (g2.s, g2.t) == (f1.s, f1.t)


def test_text_comments_and_blanks(triangle):
    text = "# a comment\n\n3 0 2\n0: 1 2\n1: 2   # chord\n2:\n"
    g = graph_from_text(text)
    assert g.succ == triangle.succ


def test_json_roundtrip(sixteen):
    g2 = graph_from_json(graph_to_json(sixteen))
    assert g2.succ == sixteen.succ


def test_roundtrip_corpus():
    for g in corpus(sizes=(5, 20), seeds=range(5)):
        assert graph_from_text(graph_to_text(g)).succ == g.succ
        assert graph_from_json(graph_to_json(g)).succ == g.succ


@pytest.mark.parametrize("bad", [
    "",
    "3 0\n0: 1\n",
    "3 0 2\n0 1 2\n",
    "3 0 2\n0: 1\n0: 2\n",
    "3 0 2\n0: 7\n",
    "x y z\n",
])
def test_malformed_text(bad):
    with pytest.raises(GraphFormatError):
        graph_from_text(bad)


def test_malformed_json():
    with pytest.raises(GraphFormatError):
        graph_from_json('{"n": 3}')


def test_load_graph_dispatch(tmp_path, triangle):
    t = tmp_path / "g.txt"
    t.write_text(graph_to_text(triangle))
    j = tmp_path / "g.json"
    j.write_text(graph_to_json(triangle))
    assert load_graph(str(t)).succ == triangle.succ
    assert load_graph(str(j)).succ == triangle.succ


def test_drawing_roundtrip(f1):
    d = draw_polyline(f1)
    text = drawing_to_text(f1, d)
    d2 = drawing_from_text(text, f1)
    assert d2.coords == d.coords
    assert d2.edge_paths == d.edge_paths


def test_drawing_requires_all_vertices(f1):
    with pytest.raises(GraphFormatError):
        drawing_from_text("0 0 0\n1 1 1\n", f1)
