from __future__ import annotations

import pytest

from knitgraph import (
    CycleDetectedError,
    DuplicateEdgeError,
    EdgeColor,
    InconsistentPairError,
    IndexOutOfRangeError,
    MultiplicityTooHighError,
    SelfLoopError,
    YarnGraph,
    build_directed_graph,
    gen_stitch_fixture,
    reduce_yarn_to_directed,
    topological_sort,
    underlying_knitting_graph,
)

B, R, P, U = EdgeColor.BLUE, EdgeColor.RED, EdgeColor.PURPLE, EdgeColor.UNCOLORED


def test_build_minimal():
    g = build_directed_graph(2, [(0, 1, B)])
    assert g.m == 1


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_directed_graph(1, [(0, 0, B)])


def test_build_rejects_duplicate_and_antiparallel():
    with pytest.raises(DuplicateEdgeError):
        build_directed_graph(2, [(0, 1, B), (0, 1, R)])
    with pytest.raises(DuplicateEdgeError):
        build_directed_graph(2, [(0, 1, B), (1, 0, R)])


def test_build_rejects_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        build_directed_graph(2, [(0, 2, B)])


def test_build_kfb_fixture_edges_valid():
    kfb = gen_stitch_fixture("kfb")
    rebuilt = build_directed_graph(11, list(kfb.graph.edges))
    assert rebuilt == kfb.graph
    assert rebuilt.n == 11


def test_topological_sort_chain():
    g = build_directed_graph(3, [(0, 1, U), (1, 2, U)])
    assert topological_sort(g) == [0, 1, 2]


def test_topological_sort_tie_break():
    g = build_directed_graph(2, [])
    assert topological_sort(g) == [0, 1]


def test_topological_sort_cycle():
    g = build_directed_graph(3, [(0, 1, U), (1, 2, U), (2, 0, U)])
    with pytest.raises(CycleDetectedError) as exc:
        topological_sort(g)
    cycle = exc.value.cycle
    assert sorted(cycle) == [0, 1, 2]


def test_topological_sort_respects_arcs(rng):
    from conftest import random_dag

    for _ in range(200):
        g = random_dag(rng, rng.randint(1, 30), rng.random())
        order = topological_sort(g)
        pos = {v: i for i, v in enumerate(order)}
        assert all(pos[s] < pos[d] for s, d, _ in g.edges)


def test_underlying_single_edge():
    g = build_directed_graph(2, [(0, 1, B)])
    kg = underlying_knitting_graph(g)
    assert kg.edges == ((0, 1),)


def test_underlying_kfb_arc_count():
    kfb = gen_stitch_fixture("kfb")
    kg = underlying_knitting_graph(kfb.graph)
    assert kg.m == kfb.graph.m  # simplicity preserved, one edge per arc


def test_underlying_empty():
    g = build_directed_graph(0, [])
    assert underlying_knitting_graph(g).edges == ()


def test_reduce_single_strand():
    g = reduce_yarn_to_directed(YarnGraph(2, ((0, 1),)))
    assert g.edges == ((0, 1, B),)


def test_reduce_loop_pair_is_red():
    g = reduce_yarn_to_directed(YarnGraph(2, ((0, 1), (1, 0))))
    assert g.edges == ((0, 1, R),)


def test_reduce_same_direction_pair_inconsistent():
    with pytest.raises(InconsistentPairError):
        reduce_yarn_to_directed(YarnGraph(2, ((0, 1), (0, 1))))


def test_reduce_multiplicity_cap():
    with pytest.raises(MultiplicityTooHighError):
        reduce_yarn_to_directed(YarnGraph(2, ((0, 1), (1, 0), (0, 1), (1, 0))))


def test_reduce_purple_majority_direction():
    g = reduce_yarn_to_directed(YarnGraph(2, ((0, 1), (0, 1), (1, 0))))
    assert g.edges == ((0, 1, P),)
    g = reduce_yarn_to_directed(YarnGraph(2, ((1, 0), (0, 1), (1, 0))))
    assert g.edges == ((1, 0, P),)


def test_reduce_red_direction_follows_first_traversal():
    g = reduce_yarn_to_directed(YarnGraph(2, ((1, 0), (0, 1))))
    assert g.edges == ((1, 0, R),)


def test_reduce_red_direction_follows_supplied_order():
    # first-traversed arc points 1 -> 0, but the thread order says 0 before 1
    g = reduce_yarn_to_directed(YarnGraph(2, ((1, 0), (0, 1))), hamiltonian_order=[0, 1])
    assert g.edges == ((0, 1, R),)


def test_graph_equality_ignores_edge_order():
    a = build_directed_graph(3, [(1, 2, B), (0, 1, B)])
    b = build_directed_graph(3, [(0, 1, B), (1, 2, B)])
    assert a == b


def test_degrees():
    g = build_directed_graph(3, [(0, 1, B), (0, 2, R)])
    assert g.degrees() == [(0, 2), (1, 0), (1, 0)]
