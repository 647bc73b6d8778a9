"""Minimum split plans, the transitive baseline, and split application."""

from __future__ import annotations

import pytest

from stlayout import (BitonicOrdering, EdgeNotFound, apply_splits,
                      build_graph, compute_faces, find_bitonic_ordering,
                      minimum_split_plan, minimum_splits_bruteforce,
                      reachable, transitive_split_plan)
from stlayout.splitting import SplitPlan, left_right_counts, plan_to_text
from conftest import corpus, fan


def test_triangle_plan_empty(triangle):
    assert minimum_split_plan(triangle).split_edges == ()
    # the chord (s, t) is transitive, so the baseline does split it
    assert transitive_split_plan(triangle).split_edges == ((0, 2),)


def test_f1_plan(f1):
    plan = minimum_split_plan(f1)
    assert plan.split_edges == ((0, 3),)
    assert plan.apex[0] == 1


def test_f1_left_right_counts(f1):
    fi = compute_faces(f1)
    L, R = left_right_counts(f1, fi, 0)
    assert L == [0, 1, 1]
    assert R == [0, 0, 1]


def test_apply_splits_f1(f1):
    res = apply_splits(f1, minimum_split_plan(f1))
    assert res.graph.n == 6
    assert res.dummy_of == {5: (0, 3)}
    assert isinstance(find_bitonic_ordering(res.graph), BitonicOrdering)


def test_apply_splits_missing_edge(triangle):
    plan = SplitPlan(apex=(0, 0, 0), split_edges=((1, 0),))
    with pytest.raises(EdgeNotFound):
        apply_splits(triangle, plan)


def test_split_graph_always_accepted():
    for g in corpus(sizes=(8, 15, 30), seeds=range(12)):
        res = apply_splits(g, minimum_split_plan(g))
        assert isinstance(find_bitonic_ordering(res.graph), BitonicOrdering)


def test_split_count_bound():
    # at most |V| - 3 splits on every tested graph
    for g in corpus(sizes=(8, 15, 30, 60), seeds=range(12)):
        plan = minimum_split_plan(g)
        assert len(plan.split_edges) <= max(g.n - 3, 0)


def test_minimum_not_larger_than_transitive_baseline():
    for g in corpus(sizes=(8, 15, 30), seeds=range(12)):
        k_min = len(minimum_split_plan(g).split_edges)
        baseline = transitive_split_plan(g)
        assert k_min <= len(baseline.split_edges)
        res = apply_splits(g, baseline)
        assert isinstance(find_bitonic_ordering(res.graph), BitonicOrdering)


def test_transitive_baseline_splits_only_transitive_edges():
    for g in corpus(sizes=(8, 15), seeds=range(8)):
        for u, v in transitive_split_plan(g).split_edges:
            e = g.edge_id(u, v)
            others = [w for w in g.succ[u] if w != v]
            assert any(reachable(g, w, v) for w in others)


def test_fan_family_tight():
    for k in range(4, 13):
        g = fan(k)
        assert len(minimum_split_plan(g).split_edges) == k - 3


def test_bruteforce_agreement_small(f1, triangle):
    assert minimum_splits_bruteforce(f1, 2) == 1
    assert minimum_splits_bruteforce(triangle, 1) == 0
    g = fan(6)
    assert minimum_splits_bruteforce(g, 3) == 3


def test_reachability_preserved_by_splits():
    for g in corpus(sizes=(7, 10), seeds=range(8)):
        res = apply_splits(g, minimum_split_plan(g))
        for u in range(g.n):
            for v in range(g.n):
                assert reachable(g, u, v) == reachable(res.graph, u, v)


def test_plan_text(f1):
    assert plan_to_text(minimum_split_plan(f1)) == "split 0 3\ntotal 1\n"
