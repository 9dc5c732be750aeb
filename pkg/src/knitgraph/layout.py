"""Geometric and structural analysis over a drawing of the graph:
planarity, segment crossings, cable width, complexity classes, row
counting, and the zero-interleaving simplicity test.

A layout maps each vertex to (row, column); rows are integers and columns
exact rationals, so every intersection test below is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import networkx as nx

from .errors import (
    BlueCrossingError,
    DegenerateLayoutError,
    NotPlanarLayoutError,
    NotSingleThreadError,
)
from .feasibility import RedRule, _thread_paths, check_coloring
from .graphs import DirectedKnitGraph, EdgeColor, KnittingGraph, underlying_knitting_graph
from .serialize import Layout

Point = tuple[Fraction, Fraction]  # (x=col, y=row)


def is_planar(kg: KnittingGraph) -> bool:
    """Exact planarity; the Euler bound m <= 3n-6 prunes dense graphs first."""
    if kg.n >= 3 and kg.m > 3 * kg.n - 6:
        return False
    graph = nx.Graph()
    graph.add_nodes_from(range(kg.n))
    graph.add_edges_from(kg.edges)
    ok, _embedding = nx.check_planarity(graph, counterexample=False)
    return ok


@dataclass(frozen=True)
class CrossingGraph:
    """Edges of the drawing as nodes, proper segment crossings as links."""

    edge_pairs: tuple[tuple[int, int], ...]
    links: tuple[tuple[int, int], ...]  # index pairs into edge_pairs, i < j

    def components(self) -> list[tuple[set[int], int]]:
        """(node set, link count) per connected component."""
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.edge_pairs))}
        for i, j in self.links:
            adj[i].add(j)
            adj[j].add(i)
        seen: set[int] = set()
        out = []
        for i in range(len(self.edge_pairs)):
            if i in seen:
                continue
            comp = {i}
            stack = [i]
            seen.add(i)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            links = sum(1 for a, b in self.links if a in comp)
            out.append((comp, links))
        return out

    def max_component_links(self) -> int:
        return max((links for _c, links in self.components()), default=0)


def _point(layout: Layout, v: int) -> Point:
    row, col = layout[v]
    return (Fraction(col), Fraction(row))


def _orient(a: Point, b: Point, c: Point) -> int:
    val = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (val > 0) - (val < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p collinear with ab assumed; is p within the closed box of ab?"""
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _proper_crossing(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """Interior intersection point of segments ab and cd, or None.

    Collinear overlap raises; touching at a shared coordinate is handled by
    the callers' vertex checks.
    """
    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    if o1 == 0 and o2 == 0:
        # collinear: overlapping segments are a degenerate drawing
        if _on_segment(a, b, c) or _on_segment(a, b, d) or _on_segment(c, d, a):
            raise DegenerateLayoutError(c, "collinear overlapping edges")
        return None
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        # strict crossing; solve for the intersection point exactly
        denom = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
        t = ((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / denom
        return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
    return None


def crossing_graph(
    g: DirectedKnitGraph | KnittingGraph, layout: Layout
) -> CrossingGraph:
    """All proper pairwise crossings of the straight-line drawing.

    Degenerate drawings are rejected: duplicate vertex positions, a vertex
    in the interior of a non-incident edge, overlapping collinear edges, or
    three edges through one non-vertex point.
    """
    if isinstance(g, KnittingGraph):
        pairs = list(g.edges)
    else:
        pairs = [(s, d) for s, d, _ in g.edges]
    points: dict[int, Point] = {}
    seen_points: dict[Point, int] = {}
    vertices = {v for e in pairs for v in e} | set(range(g.n))
    for v in vertices:
        if v not in layout:
            raise DegenerateLayoutError(None, f"vertex {v} missing from layout")
        p = _point(layout, v)
        if p in seen_points:
            raise DegenerateLayoutError(p, "two vertices share a position")
        seen_points[p] = v
        points[v] = p

    # a vertex inside a non-incident edge makes sides ill-defined
    for u, w in pairs:
        a, b = points[u], points[w]
        for v, p in points.items():
            if v in (u, w):
                continue
            if _orient(a, b, p) == 0 and _on_segment(a, b, p) and p not in (a, b):
                raise DegenerateLayoutError(p, f"vertex {v} lies on edge {(u, w)}")

    links: list[tuple[int, int]] = []
    meeting: dict[Point, set[int]] = {}
    for i in range(len(pairs)):
        u1, w1 = pairs[i]
        a, b = points[u1], points[w1]
        for j in range(i + 1, len(pairs)):
            u2, w2 = pairs[j]
            if {u1, w1} & {u2, w2}:
                continue
            cross = _proper_crossing(a, b, points[u2], points[w2])
            if cross is not None:
                links.append((i, j))
                edges_here = meeting.setdefault(cross, set())
                edges_here.update((i, j))
                if len(edges_here) > 2:
                    raise DegenerateLayoutError(cross, "three edges concurrent")
    return CrossingGraph(tuple(pairs), tuple(links))


def cable_width(g: DirectedKnitGraph, layout: Layout) -> int:
    """Largest link count among crossing-graph components of the drawing.

    Sequential (blue) edges must be pairwise non-crossing.
    """
    cg = crossing_graph(g, layout)
    color_of = {(s, d): c for s, d, c in g.edges}
    for i, j in cg.links:
        if (
            color_of[cg.edge_pairs[i]] is EdgeColor.BLUE
            and color_of[cg.edge_pairs[j]] is EdgeColor.BLUE
        ):
            raise BlueCrossingError((i, j))
    return cg.max_component_links()


class ComplexityClass(Enum):
    CLASS0 = "class0"
    CLASS1 = "class1"
    CLASS2 = "class2"
    CLASS3 = "class3"


@dataclass(frozen=True)
class ComplexityReport:
    complexity: ComplexityClass
    planar: bool
    crossings_on_red: bool
    crossings_on_blue: bool


def classify_complexity(
    g: DirectedKnitGraph,
    layout: Layout | None = None,
    rule: RedRule = RedRule.STRICT,
    *,
    multi_orientation: bool = False,
) -> ComplexityReport:
    """Knitting complexity of a fully colored graph.

    Declared multi-layer orientation metadata forces class 3. A drawing
    with crossings is class 2 (cables, brioche), as is a non-planar graph.
    Otherwise the graph is class 0 when every stitch configuration is
    admissible for its thread position, and class 1 when only planarity
    holds.
    """
    planar = is_planar(underlying_knitting_graph(g))
    crossings_red = False
    crossings_blue = False
    if layout is not None:
        cg = crossing_graph(g, layout)
        color_of = {(s, d): c for s, d, c in g.edges}
        for i, j in cg.links:
            involved = {color_of[cg.edge_pairs[i]], color_of[cg.edge_pairs[j]]}
            if involved & {EdgeColor.RED, EdgeColor.PURPLE}:
                crossings_red = True
            if involved & {EdgeColor.BLUE, EdgeColor.PURPLE}:
                crossings_blue = True
        has_crossings = bool(cg.links)
    else:
        has_crossings = False

    if multi_orientation:
        cls = ComplexityClass.CLASS3
    elif has_crossings or not planar:
        cls = ComplexityClass.CLASS2
    elif _class0_configs_ok(g, rule):
        cls = ComplexityClass.CLASS0
    else:
        cls = ComplexityClass.CLASS1
    return ComplexityReport(cls, planar, crossings_red, crossings_blue)


def _class0_configs_ok(g: DirectedKnitGraph, rule: RedRule) -> bool:
    if EdgeColor.UNCOLORED in g.colors():
        return False
    paths, problems = _thread_paths(g, {EdgeColor.BLUE, EdgeColor.PURPLE})
    if problems:
        return False
    return check_coloring(g, len(paths), rule, allow_purple=True).valid


def _thread_of(cover) -> tuple[int, ...]:
    if len(cover) != 1:
        raise NotSingleThreadError(len(cover))
    return tuple(cover[0])


def _count_rows_by_sides(
    g: DirectedKnitGraph, thread: tuple[int, ...], layout: Layout
) -> int:
    """Side-switch row count: classify each outgoing loop edge as left or
    right of the local thread direction; every switch, including the very
    first signal after cast-on, opens a row."""
    points = {v: _point(layout, v) for v in range(g.n)}
    out_adj = g.out_adj()
    zero = (Fraction(0), Fraction(0))
    changes = 0
    side = 0
    for i, v in enumerate(thread):
        nxt = thread[i + 1] if i + 1 < len(thread) else None
        prev = thread[i - 1] if i > 0 else None
        if nxt is not None:
            direction = (points[nxt][0] - points[v][0], points[nxt][1] - points[v][1])
        elif prev is not None:
            direction = (points[v][0] - points[prev][0], points[v][1] - points[prev][1])
        else:
            continue  # one-stitch thread: no direction, one row
        for w, _color in sorted(out_adj[v], key=lambda e: e[0]):
            if w == nxt:
                continue  # thread edge, not a loop
            vec = (points[w][0] - points[v][0], points[w][1] - points[v][1])
            s = _orient(zero, direction, vec)
            if s == 0:
                continue  # ambiguous: keep the current row
            if s != side:
                changes += 1
                side = s
    return 1 + changes


def _row_layers(g: DirectedKnitGraph, thread: tuple[int, ...]) -> list[int]:
    """Row index per thread position: a stitch sits one row above the
    stitches it passes through, and rows never decrease along the thread."""
    loop_parents: dict[int, list[int]] = {v: [] for v in thread}
    for src, dst, color in g.edges:
        if color in (EdgeColor.RED, EdgeColor.PURPLE) and dst in loop_parents:
            loop_parents[dst].append(src)
    rows_by_vertex: dict[int, int] = {}
    rows: list[int] = []
    for v in thread:
        row = rows[-1] if rows else 0
        for u in loop_parents[v]:
            if u in rows_by_vertex:
                row = max(row, rows_by_vertex[u] + 1)
        rows_by_vertex[v] = row
        rows.append(row)
    return rows


def count_rows(
    g: DirectedKnitGraph, cover, layout: Layout | None = None
) -> int:
    """Number of knit rows of a single-thread planar piece.

    With a drawing, rows come from side switches of outgoing loop edges
    along the thread; without one, from the loop layering (each stitch one
    row above its loop parents). Stitches with no loop edges keep the
    current row in both schemes.
    """
    thread = _thread_of(cover)
    if not is_planar(underlying_knitting_graph(g)):
        raise NotPlanarLayoutError()
    if not thread:
        return 0
    if layout is not None:
        return _count_rows_by_sides(g, thread, layout)
    return _row_layers(g, thread)[-1] + 1


@dataclass(frozen=True)
class SimplicityReport:
    """Interleaving count of loop edges, plus the induced plane drawing
    when the count is zero."""

    swaps: int
    layout: Layout | None


def test_simple_knittable(g: DirectedKnitGraph, cover) -> SimplicityReport:
    """Zero-interleaving test along a single thread.

    Loop edges within one row band must be nested or parallel in thread
    order; each strictly interleaved pair (a < c < b < d) counts as one
    swap. With zero swaps the boustrophedon grid drawing is returned.
    """
    thread = _thread_of(cover)
    pos = {v: i for i, v in enumerate(thread)}
    rows = _row_layers(g, thread)
    row_of = {v: rows[i] for i, v in enumerate(thread)}

    chords: list[tuple[int, int, tuple[int, int]]] = []
    for src, dst, color in g.edges:
        if color is not EdgeColor.RED:
            continue
        a, b = sorted((pos[src], pos[dst]))
        band = (min(row_of[src], row_of[dst]), max(row_of[src], row_of[dst]))
        chords.append((a, b, band))
    chords.sort()

    swaps = 0
    for i in range(len(chords)):
        a, b, band = chords[i]
        for j in range(i + 1, len(chords)):
            c, d, band2 = chords[j]
            if band2 != band:
                continue
            if a < c < b < d:
                swaps += 1

    if swaps:
        return SimplicityReport(swaps, None)

    layout: Layout = {}
    members: dict[int, list[int]] = {}
    for i, v in enumerate(thread):
        members.setdefault(rows[i], []).append(v)
    for row, vs in members.items():
        for offset, v in enumerate(vs):
            col = offset if row % 2 == 0 else len(vs) - 1 - offset
            layout[v] = (row, Fraction(col))
    return SimplicityReport(0, layout)
