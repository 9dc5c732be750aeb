"""JSON and DOT serialization for graphs, layouts, and metadata.

Schema (UTF-8 JSON):

    {"n": int, "directed": bool, "multigraph": bool,
     "edges": [{"src": int, "dst": int, "color": "blue"|"red"|"purple"|null}],
     "layout": {"<id>": [row, col]}?,            # optional
     "meta": {"k": int?, "labels": {..}?, ...}}  # optional, open

A multigraph document parses to a YarnGraph (colors must be null); anything
else parses to a DirectedKnitGraph. External vertex labels, when present in
meta.labels, are preserved verbatim in the parsed document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import SchemaError
from .graphs import DirectedKnitGraph, EdgeColor, KnittingGraph, YarnGraph

Layout = dict[int, tuple[int, Fraction]]

_COLOR_FROM_JSON = {
    "blue": EdgeColor.BLUE,
    "red": EdgeColor.RED,
    "purple": EdgeColor.PURPLE,
    None: EdgeColor.UNCOLORED,
}
_COLOR_TO_JSON = {v: k for k, v in _COLOR_FROM_JSON.items()}


@dataclass(frozen=True, eq=True)
class GraphDocument:
    """A parsed file: the graph plus its optional layout and metadata."""

    graph: DirectedKnitGraph | YarnGraph
    layout: Layout | None = None
    meta: dict = field(default_factory=dict)


def _require(data: dict, key: str, kind, where: str):
    if key not in data:
        raise SchemaError(f"{where}: missing field '{key}'")
    value = data[key]
    if kind is int and isinstance(value, bool):
        raise SchemaError(f"{where}: field '{key}' must be {kind.__name__}")
    if not isinstance(value, kind):
        raise SchemaError(f"{where}: field '{key}' must be {kind.__name__}")
    return value


def _parse_col(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError("layout: column must be a number")
    # str round-trip keeps decimal literals exact ("0.6" -> 3/5)
    return Fraction(str(value))


def parse_document(data: bytes | str) -> GraphDocument:
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise SchemaError("top level: expected an object")

    n = _require(raw, "n", int, "top level")
    if n < 0:
        raise SchemaError("top level: n must be non-negative")
    directed = _require(raw, "directed", bool, "top level")
    multigraph = raw.get("multigraph", False)
    if not isinstance(multigraph, bool):
        raise SchemaError("top level: 'multigraph' must be a bool")
    edges_raw = _require(raw, "edges", list, "top level")

    edges = []
    for i, e in enumerate(edges_raw):
        if not isinstance(e, dict):
            raise SchemaError(f"edges[{i}]: expected an object")
        src = _require(e, "src", int, f"edges[{i}]")
        dst = _require(e, "dst", int, f"edges[{i}]")
        color = e.get("color")
        if color not in _COLOR_FROM_JSON:
            raise SchemaError(f"edges[{i}]: unknown color {color!r}")
        edges.append((src, dst, _COLOR_FROM_JSON[color]))

    layout: Layout | None = None
    if raw.get("layout") is not None:
        if not isinstance(raw["layout"], dict):
            raise SchemaError("layout: expected an object")
        layout = {}
        for key, pair in raw["layout"].items():
            try:
                vid = int(key)
            except ValueError:
                raise SchemaError(f"layout: non-integer vertex id {key!r}") from None
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError(f"layout[{key}]: expected [row, col]")
            row, col = pair
            if isinstance(row, bool) or not isinstance(row, int):
                raise SchemaError(f"layout[{key}]: row must be an integer")
            layout[vid] = (row, _parse_col(col))

    meta = raw.get("meta") or {}
    if not isinstance(meta, dict):
        raise SchemaError("meta: expected an object")

    if multigraph:
        if any(c is not EdgeColor.UNCOLORED for _, _, c in edges):
            raise SchemaError("multigraph edges must not carry colors")
        if not directed:
            raise SchemaError("yarn graphs are directed")
        hint = meta.get("k")
        graph: DirectedKnitGraph | YarnGraph = YarnGraph(
            n, tuple((s, d) for s, d, _ in edges), hint
        )
    else:
        graph = DirectedKnitGraph(n, tuple(edges))
    return GraphDocument(graph, layout, meta)


def parse_json(data: bytes | str) -> DirectedKnitGraph | YarnGraph:
    return parse_document(data).graph


def _col_to_json(col: Fraction):
    if col.denominator == 1:
        return int(col)
    return float(col)


def serialize_json(
    obj: GraphDocument | DirectedKnitGraph | YarnGraph,
    *,
    layout: Layout | None = None,
    meta: dict | None = None,
    indent: int | None = None,
) -> bytes:
    if isinstance(obj, GraphDocument):
        graph, layout, meta = obj.graph, obj.layout, obj.meta
    else:
        graph = obj
    doc: dict = {"n": graph.n, "directed": True}
    if isinstance(graph, YarnGraph):
        doc["multigraph"] = True
        doc["edges"] = [{"src": s, "dst": d, "color": None} for s, d in graph.arcs]
        if graph.yarn_count_hint is not None:
            meta = dict(meta or {})
            meta.setdefault("k", graph.yarn_count_hint)
    else:
        doc["multigraph"] = False
        doc["edges"] = [
            {"src": s, "dst": d, "color": _COLOR_TO_JSON[c]} for s, d, c in graph.edges
        ]
    if layout is not None:
        doc["layout"] = {
            str(v): [row, _col_to_json(col)] for v, (row, col) in sorted(layout.items())
        }
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, indent=indent).encode("utf-8")


def export_dot(graph: DirectedKnitGraph | YarnGraph | KnittingGraph) -> str:
    """GraphViz text; edge colors map to blue/red/purple, uncolored to gray."""
    lines: list[str] = []
    if isinstance(graph, KnittingGraph):
        lines.append("graph knitting {")
        for v in range(graph.n):
            lines.append(f"  {v};")
        for u, v in graph.edges:
            lines.append(f"  {u} -- {v} [color=gray];")
    else:
        lines.append("digraph knitting {")
        for v in range(graph.n):
            lines.append(f"  {v};")
        if isinstance(graph, YarnGraph):
            for s, d in graph.arcs:
                lines.append(f"  {s} -> {d} [color=gray];")
        else:
            for s, d, c in graph.edges:
                color = _COLOR_TO_JSON[c] or "gray"
                lines.append(f"  {s} -> {d} [color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
