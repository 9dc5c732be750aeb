"""Yarn-graph analysis: Eulerian trails, minimum yarn counts, and the
round trip between colored graphs and yarn multigraphs.

Loop edges contribute an antiparallel arc pair to the yarn graph, so only
thread (sequential) arcs unbalance vertices; the minimum yarn count of a
component is therefore its total positive out-excess, with one closed trail
for a balanced component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KnitError, NoEulerianPathError
from .graphs import DirectedKnitGraph, EdgeColor, YarnGraph, reduce_yarn_to_directed
from .feasibility import RedRule, check_coloring


@dataclass(frozen=True)
class Trail:
    """A directed trail: arc indices into the yarn graph plus the vertex walk."""

    arcs: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]


TrailDecomposition = tuple[Trail, ...]


def yarn_from_threads(g: DirectedKnitGraph, cover) -> YarnGraph:
    """Expand a colored witness into the physical strand multigraph.

    Blue edge (u,v) -> one arc u->v. Red edge -> the loop pair u->v, v->u.
    Purple edge -> the sequential strand first, then the loop pair, keeping
    trail extraction deterministic.
    """
    thread_pairs = {pair for thread in cover for pair in zip(thread, thread[1:])}
    declared = {
        (s, d) for s, d, c in g.edges if c in (EdgeColor.BLUE, EdgeColor.PURPLE)
    }
    if thread_pairs != declared:
        raise ValueError("cover does not match the sequential edges of the coloring")
    arcs: list[tuple[int, int]] = []
    for src, dst, color in g.edges:
        if color is EdgeColor.BLUE:
            arcs.append((src, dst))
        elif color is EdgeColor.RED:
            arcs.append((src, dst))
            arcs.append((dst, src))
        elif color is EdgeColor.PURPLE:
            arcs.append((src, dst))
            arcs.append((src, dst))
            arcs.append((dst, src))
        else:
            raise ValueError(f"edge {(src, dst)} is uncolored")
    return YarnGraph(g.n, tuple(arcs), yarn_count_hint=len(cover))


def _weak_components(y: YarnGraph) -> list[list[int]]:
    """Weakly-connected components restricted to arc-bearing vertices."""
    neighbors: dict[int, set[int]] = {}
    for src, dst in y.arcs:
        neighbors.setdefault(src, set()).add(dst)
        neighbors.setdefault(dst, set()).add(src)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for v in sorted(neighbors):
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


class _TrailWalker:
    """Greedy trail construction with loop-strand-first arc choice.

    At each step the walker prefers (1) the unused reversal of the arc it
    just traversed, then (2) arcs whose reversal is still unused (loop
    strands, consumed as atomic down-up detours), then (3) the lowest-index
    remaining arc. This keeps sequential arcs of a well-formed yarn graph in
    thread order inside each trail.
    """

    def __init__(self, y: YarnGraph, allowed: set[int] | None = None):
        self.y = y
        self.used = [False] * y.m
        self.out: dict[int, list[int]] = {}
        self.by_dir: dict[tuple[int, int], list[int]] = {}
        for i, (src, dst) in enumerate(y.arcs):
            if allowed is not None and src not in allowed:
                self.used[i] = True
                continue
            self.out.setdefault(src, []).append(i)
            self.by_dir.setdefault((src, dst), []).append(i)
        self.remaining = sum(1 for u in self.used if not u)

    def _first_unused(self, direction: tuple[int, int]) -> int | None:
        for i in self.by_dir.get(direction, ()):
            if not self.used[i]:
                return i
        return None

    def _choose(self, v: int, last_arc: int | None) -> int | None:
        if last_arc is not None:
            src, dst = self.y.arcs[last_arc]
            back = self._first_unused((dst, src))
            if back is not None:
                return back
        fallback = None
        for i in self.out.get(v, ()):
            if self.used[i]:
                continue
            if fallback is None:
                fallback = i
            src, dst = self.y.arcs[i]
            if self._first_unused((dst, src)) is not None:
                return i
        return fallback

    def walk(self, start: int) -> tuple[list[int], list[int]]:
        arcs: list[int] = []
        vertices = [start]
        v = start
        last: int | None = None
        while True:
            nxt = self._choose(v, last)
            if nxt is None:
                return arcs, vertices
            self.used[nxt] = True
            self.remaining -= 1
            v = self.y.arcs[nxt][1]
            arcs.append(nxt)
            vertices.append(v)
            last = nxt

    def splice_leftovers(self, trails: list[tuple[list[int], list[int]]]):
        """Insert leftover balanced circuits into existing trails in place."""
        while self.remaining:
            spliced = False
            for arcs, vertices in trails:
                for pos, v in enumerate(vertices):
                    if any(not self.used[i] for i in self.out.get(v, ())):
                        sub_arcs, sub_vertices = self.walk(v)
                        if sub_vertices[-1] != v:
                            raise NoEulerianPathError(
                                "imbalance", [(v, "stuck while splicing")]
                            )
                        arcs[pos:pos] = sub_arcs
                        vertices[pos + 1 : pos + 1] = sub_vertices[1:]
                        spliced = True
                        break
                if spliced:
                    break
            if not spliced:
                raise NoEulerianPathError("disconnected")


def _component_trails(y: YarnGraph, comp: list[int]) -> list[Trail]:
    comp_set = set(comp)
    walker = _TrailWalker(y, comp_set)
    outdeg: dict[int, int] = {v: 0 for v in comp}
    indeg: dict[int, int] = {v: 0 for v in comp}
    for src, dst in y.arcs:
        if src in comp_set:
            outdeg[src] += 1
            indeg[dst] += 1
    starts: list[int] = []
    for v in comp:
        starts.extend([v] * max(0, outdeg[v] - indeg[v]))
    if not starts:
        starts = [comp[0]]
    raw: list[tuple[list[int], list[int]]] = []
    for s in starts:
        raw.append(walker.walk(s))
    walker.splice_leftovers(raw)
    return [Trail(tuple(a), tuple(v)) for a, v in raw]


def minimum_yarns(y: YarnGraph) -> tuple[int, TrailDecomposition]:
    """Fewest yarns that can realize the strand multigraph, with a witness.

    Each arc-bearing weak component contributes max(1, total out-excess)
    trails; trail starts are forced at excess vertices, smallest id first.
    """
    trails: list[Trail] = []
    for comp in _weak_components(y):
        trails.extend(_component_trails(y, comp))
    return len(trails), tuple(trails)


def eulerian_path(y: YarnGraph, component: list[int] | None = None) -> Trail:
    """Single directed trail using every arc once (Hierholzer construction).

    Restricted to `component`'s vertices when given. Raises
    NoEulerianPathError with the imbalance list or a disconnection verdict.
    """
    if component is None:
        comps = _weak_components(y)
        if len(comps) > 1:
            raise NoEulerianPathError("disconnected")
        if not comps:
            return Trail((), ())
        comp = comps[0]
    else:
        comp = sorted(component)
        comp_set = set(comp)
        sub = [a for a in y.arcs if a[0] in comp_set or a[1] in comp_set]
        if any(a[0] not in comp_set or a[1] not in comp_set for a in sub):
            raise NoEulerianPathError("disconnected", "arcs leave the component")

    comp_set = set(comp)
    outdeg = {v: 0 for v in comp}
    indeg = {v: 0 for v in comp}
    has_arcs = False
    for src, dst in y.arcs:
        if src in comp_set:
            outdeg[src] += 1
            indeg[dst] += 1
            has_arcs = True
    if not has_arcs:
        return Trail((), ())

    imbalances = [(v, outdeg[v] - indeg[v]) for v in comp if outdeg[v] != indeg[v]]
    pos = [v for v, d in imbalances if d == 1]
    neg = [v for v, d in imbalances if d == -1]
    if any(abs(d) > 1 for _, d in imbalances) or len(pos) > 1 or len(neg) > 1:
        raise NoEulerianPathError("imbalance", imbalances)

    # connectivity among arc-bearing vertices of the component
    bearing = {v for v in comp if outdeg[v] or indeg[v]}
    neighbors: dict[int, set[int]] = {v: set() for v in bearing}
    for src, dst in y.arcs:
        if src in comp_set:
            neighbors[src].add(dst)
            neighbors[dst].add(src)
    seen = {min(bearing)}
    stack = [min(bearing)]
    while stack:
        u = stack.pop()
        for w in neighbors[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != bearing:
        raise NoEulerianPathError("disconnected")

    walker = _TrailWalker(y, comp_set)
    start = pos[0] if pos else min(bearing)
    raw = [walker.walk(start)]
    walker.splice_leftovers(raw)
    arcs, vertices = raw[0]
    return Trail(tuple(arcs), tuple(vertices))


@dataclass
class YarnCheckReport:
    ok: bool
    min_yarns: int
    thread_paths: int
    reasons: list[str]


def is_yarn_graph_of_k_knittable(
    y: YarnGraph, k: int, rule: RedRule = RedRule.STRICT
) -> YarnCheckReport:
    """Could this multigraph be the yarn trace of a k-yarn object?

    Requires the trail count to fit in k, a consistent strand-pair
    reduction, and a sequential skeleton that forms at most k paths covering
    all stitches with admissible loop configurations.
    """
    reasons: list[str] = []
    count, _trails = minimum_yarns(y)
    if count > k:
        reasons.append(f"needs at least {count} yarns, only {k} allowed")
    try:
        reduced = reduce_yarn_to_directed(y)
    except KnitError as exc:  # reduction errors are verdicts here, not crashes
        reasons.append(f"{type(exc).__name__}: {exc}")
        return YarnCheckReport(False, count, 0, reasons)
    paths = _sequential_path_count(reduced)
    if paths is None:
        reasons.append("sequential arcs do not form vertex-disjoint paths")
        return YarnCheckReport(False, count, 0, reasons)
    if paths > k:
        reasons.append(f"sequential skeleton forms {paths} threads, only {k} allowed")
    report = check_coloring(reduced, paths, rule, allow_purple=True)
    if not report.valid:
        reasons.extend(report.problems)
    return YarnCheckReport(not reasons, count, paths, reasons)


def _sequential_path_count(g: DirectedKnitGraph) -> int | None:
    from .feasibility import _thread_paths

    paths, problems = _thread_paths(g, {EdgeColor.BLUE, EdgeColor.PURPLE})
    if problems:
        return None
    return len(paths)
