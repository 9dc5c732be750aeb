from __future__ import annotations

from collections import Counter

import pytest

from knitgraph import (
    DirectedKnitGraph,
    EdgeColor,
    NoEulerianPathError,
    YarnGraph,
    all_fixtures,
    eulerian_path,
    gen_stockinette,
    is_yarn_graph_of_k_knittable,
    minimum_yarns,
    reduce_yarn_to_directed,
    yarn_from_threads,
)

B, R, P = EdgeColor.BLUE, EdgeColor.RED, EdgeColor.PURPLE


def test_eulerian_closed_triangle():
    t = eulerian_path(YarnGraph(3, ((0, 1), (1, 2), (2, 0))))
    assert t.vertices == (0, 1, 2, 0)
    assert t.closed
    assert sorted(t.arcs) == [0, 1, 2]


def test_eulerian_open_trail_round_stockinette():
    f = gen_stockinette(2, 3, round=True)
    t = eulerian_path(f.yarn)
    assert len(t.arcs) == f.yarn.m
    assert not t.closed


def test_eulerian_disconnected():
    with pytest.raises(NoEulerianPathError) as exc:
        eulerian_path(YarnGraph(4, ((0, 1), (2, 3))))
    assert exc.value.reason == "disconnected"


def test_eulerian_imbalance():
    with pytest.raises(NoEulerianPathError) as exc:
        eulerian_path(YarnGraph(3, ((0, 1), (0, 2))))
    assert exc.value.reason == "imbalance"


def test_minimum_yarns_cycle():
    k, trails = minimum_yarns(YarnGraph(3, ((0, 1), (1, 2), (2, 0))))
    assert k == 1
    assert trails[0].closed


def test_minimum_yarns_two_components():
    k, trails = minimum_yarns(YarnGraph(4, ((0, 1), (2, 3))))
    assert k == 2
    assert [t.vertices for t in trails] == [(0, 1), (2, 3)]


def test_minimum_yarns_fan():
    k, trails = minimum_yarns(YarnGraph(4, ((0, 1), (0, 2), (0, 3))))
    assert k == 3
    assert all(t.vertices[0] == 0 for t in trails)


def test_minimum_yarns_invariant_under_relabeling(rng):
    base = gen_stockinette(3, 4, round=True).yarn
    for _ in range(20):
        arcs = list(base.arcs)
        rng.shuffle(arcs)
        k, _ = minimum_yarns(YarnGraph(base.n, tuple(arcs)))
        assert k == 1


def test_yarn_from_threads_single_blue_arc():
    g = DirectedKnitGraph(2, ((0, 1, B),))
    y = yarn_from_threads(g, ((0, 1),))
    assert y.arcs == ((0, 1),)


def test_yarn_from_threads_arc_arithmetic():
    f = gen_stockinette(3, 3)  # flat: purple turns
    blue = sum(1 for _, _, c in f.graph.edges if c is B)
    red = sum(1 for _, _, c in f.graph.edges if c is R)
    purple = sum(1 for _, _, c in f.graph.edges if c is P)
    assert f.yarn.m == blue + 2 * red + 3 * purple


def test_yarn_from_threads_rejects_mismatched_cover():
    g = DirectedKnitGraph(2, ((0, 1, B),))
    with pytest.raises(ValueError):
        yarn_from_threads(g, ((1, 0),))


def test_reduce_round_trip_all_fixtures():
    for f in all_fixtures():
        assert reduce_yarn_to_directed(f.yarn) == f.graph, f.name


def test_trail_decomposition_is_exact_partition():
    for f in all_fixtures():
        k, trails = minimum_yarns(f.yarn)
        assert k == f.k, f.name
        used = sorted(i for t in trails for i in t.arcs)
        assert used == list(range(f.yarn.m)), f.name
        for t in trails:
            assert len(t.vertices) == len(t.arcs) + 1
            for idx, arc in enumerate(t.arcs):
                src, dst = f.yarn.arcs[arc]
                assert t.vertices[idx] == src and t.vertices[idx + 1] == dst


def test_trails_visit_thread_arcs_in_order():
    # restriction of each trail to multiplicity-1 arcs = its thread's
    # sequential arcs, in thread order
    for f in all_fixtures():
        pair_mult = Counter(frozenset(a) for a in f.yarn.arcs)
        threads = {t[0]: t for t in f.cover}
        _, trails = minimum_yarns(f.yarn)
        for trail in trails:
            singles = [
                f.yarn.arcs[i]
                for i in trail.arcs
                if pair_mult[frozenset(f.yarn.arcs[i])] == 1
            ]
            thread = threads[trail.vertices[0]]
            expected = [
                (u, v)
                for u, v in zip(thread, thread[1:])
                if pair_mult[frozenset((u, v))] == 1
            ]
            assert singles == expected, f.name


def test_is_yarn_graph_round_stockinette():
    f = gen_stockinette(3, 3, round=True)
    assert is_yarn_graph_of_k_knittable(f.yarn, 1).ok
    assert not is_yarn_graph_of_k_knittable(f.yarn, 0).ok


def test_is_yarn_graph_flat_with_turns():
    f = gen_stockinette(3, 3)
    assert is_yarn_graph_of_k_knittable(f.yarn, 1).ok


def test_is_yarn_graph_same_direction_pair():
    report = is_yarn_graph_of_k_knittable(YarnGraph(2, ((0, 1), (0, 1))), 1)
    assert not report.ok
    assert any("InconsistentPair" in r for r in report.reasons)


def test_is_yarn_graph_brioche_needs_four():
    from knitgraph import gen_brioche_maximal

    br = gen_brioche_maximal(6)
    assert minimum_yarns(br.yarn)[0] == 4
    assert not is_yarn_graph_of_k_knittable(br.yarn, 3).ok


def test_eulerian_with_explicit_component():
    y = YarnGraph(5, ((0, 1), (1, 0), (3, 4)))
    left = eulerian_path(y, component=[0, 1])
    assert left.vertices == (0, 1, 0)
    right = eulerian_path(y, component=[3, 4])
    assert right.vertices == (3, 4)
    with pytest.raises(NoEulerianPathError):
        eulerian_path(y, component=[0, 1, 3])  # the (3,4) arc leaves the component
