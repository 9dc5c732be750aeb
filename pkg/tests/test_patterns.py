from __future__ import annotations

import pytest

from knitgraph import (
    BadDimsError,
    ComplexityClass,
    DirectedKnitGraph,
    EdgeColor,
    Fixture,
    NotSingleThreadError,
    PatternSpec,
    RedRule,
    all_fixtures,
    check_coloring,
    decide_k_knittable,
    emit_instructions,
    gen_brioche_maximal,
    gen_stitch_fixture,
    gen_stockinette,
    reduce_yarn_to_directed,
    yarn_from_threads,
)

B, R, P = EdgeColor.BLUE, EdgeColor.RED, EdgeColor.PURPLE


def test_flat_3x3_reference_edge_set():
    f = gen_stockinette(3, 3)
    reds = {(s, d) for s, d, c in f.graph.edges if c is R}
    purples = {(s, d) for s, d, c in f.graph.edges if c is P}
    blues = {(s, d) for s, d, c in f.graph.edges if c is B}
    assert f.graph.n == 9
    assert f.cover == (tuple(range(9)),)
    assert reds == {(0, 5), (1, 4), (3, 8), (4, 7)}
    assert purples == {(2, 3), (5, 6)}
    assert blues == {(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)}


def test_single_row_has_no_loops():
    f = gen_stockinette(1, 5)
    assert all(c is B for _, _, c in f.graph.edges)
    assert f.graph.m == 4


def test_round_family_decides_feasible_with_generator_thread():
    for r in range(2, 7):
        for c in range(2, 7):
            f = gen_stockinette(r, c, round=True)
            assert not any(c_ is P for _, _, c_ in f.graph.edges)
            result = decide_k_knittable(f.graph, 1, RedRule.STRICT)
            assert result is not None, (r, c)
            _coloring, cover = result
            assert cover == f.cover, (r, c)


def test_bad_dims():
    with pytest.raises(BadDimsError):
        gen_stockinette(0, 3)
    with pytest.raises(BadDimsError):
        gen_stockinette(3, 1)
    with pytest.raises(BadDimsError):
        gen_brioche_maximal(3)
    with pytest.raises(BadDimsError):
        gen_brioche_maximal(5)


def test_kfb_fixture_shape():
    f = gen_stitch_fixture("kfb")
    assert f.graph.n == 11
    reds = {(s, d) for s, d, c in f.graph.edges if c is R}
    # the anchor stitch 1 loops up to both legs of the increase, 4 and 5
    assert (1, 4) in reds and (1, 5) in reds


def test_k2tog_fixture_shape():
    f = gen_stitch_fixture("k2tog")
    assert f.graph.n == 11
    reds = {(s, d) for s, d, c in f.graph.edges if c is R}
    # the decrease stitch 9 receives loops from 5 and 6
    assert (5, 9) in reds and (6, 9) in reds


def test_c1b_fixture_expected_class():
    assert gen_stitch_fixture("c1b").expected_class is ComplexityClass.CLASS2


def test_unknown_stitch_rejected():
    with pytest.raises(BadDimsError):
        gen_stitch_fixture("bobble")


def test_brioche_shape():
    f = gen_brioche_maximal(6)
    assert f.graph.n == 18
    assert f.k == 4
    assert len(f.cover) == 4
    assert sorted(v for t in f.cover for v in t) == list(range(18))


def test_fixtures_pass_check_coloring():
    for f in all_fixtures():
        if f.expected_class is not ComplexityClass.CLASS0:
            continue  # brioche and cables are beyond the class-0 scheme
        report = check_coloring(f.graph, f.k, f.rule, allow_purple=True)
        assert report.valid, (f.name, report.problems)


def test_fixture_yarn_is_derived_from_threads():
    for f in all_fixtures():
        assert f.yarn == yarn_from_threads(f.graph, f.cover), f.name
        assert reduce_yarn_to_directed(f.yarn) == f.graph, f.name


def test_pattern_spec_validation():
    PatternSpec(3, 4).validate()
    PatternSpec(3, 4, inserts=(((1, 2), "kfb"),)).validate()
    with pytest.raises(BadDimsError):
        PatternSpec(0, 4).validate()
    with pytest.raises(BadDimsError):
        PatternSpec(3, 4, inserts=(((3, 0), "k"),)).validate()
    with pytest.raises(BadDimsError):
        PatternSpec(3, 4, inserts=(((1, 1), "bobble"),)).validate()
    with pytest.raises(BadDimsError):
        PatternSpec(3, 4, inserts=(((1, 1), "k3tog"),)).validate(RedRule.STRICT)
    PatternSpec(3, 4, inserts=(((1, 1), "k3tog"),)).validate(RedRule.EXTENDED)


def test_emit_flat_2x3():
    text = emit_instructions(gen_stockinette(2, 3))
    assert text.splitlines() == ["row 1: yo yo yo", "row 2: k k k"]


def test_emit_kfb_annotates_second_leg():
    lines = emit_instructions(gen_stitch_fixture("kfb")).splitlines()
    assert len(lines) == 3
    assert "kfb-second-leg" in lines[1]
    assert sum(line.count("kfb-second-leg") for line in lines) == 1


def test_emit_k2tog():
    lines = emit_instructions(gen_stitch_fixture("k2tog")).splitlines()
    assert "k2tog" in lines[2]


def test_emit_single_vertex():
    g = DirectedKnitGraph(1, ())
    f = Fixture(
        "dot", g, ((0,),), None, yarn_from_threads(g, ((0,),)),
        ComplexityClass.CLASS0, 1, RedRule.STRICT,
    )
    assert emit_instructions(f) == "row 1: yo"


def test_emit_needs_single_thread():
    with pytest.raises(NotSingleThreadError):
        emit_instructions(gen_brioche_maximal(6))
