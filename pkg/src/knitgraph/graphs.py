"""Core graph data model: colored directed knit graphs, yarn multigraphs,
and the reductions between them.

Vertices are dense 0-based integers. A directed knit graph is simple in the
strong sense: at most one edge per unordered vertex pair, so dropping
directions always yields a simple undirected graph.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from .errors import (
    CycleDetectedError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    InconsistentPairError,
    MultiplicityTooHighError,
    SelfLoopError,
)


class EdgeColor(Enum):
    """Edge role in the colored model.

    BLUE marks yarn-sequential edges, RED marks loop (pass-through) edges,
    PURPLE marks edges that are both at once (row turns in flat knitting).
    UNCOLORED appears only in decision-problem inputs.
    """

    BLUE = "blue"
    RED = "red"
    PURPLE = "purple"
    UNCOLORED = "uncolored"


ColoredEdge = tuple[int, int, EdgeColor]


@dataclass(frozen=True)
class DirectedKnitGraph:
    """Simple directed graph with an edge coloring.

    Edges are canonically sorted by (src, dst) so structural equality is
    independent of input order. Immutable after construction.
    """

    n: int
    edges: tuple[ColoredEdge, ...]

    def __post_init__(self):
        seen_pairs: set[frozenset[int]] = set()
        for src, dst, _color in self.edges:
            if src == dst:
                raise SelfLoopError(src)
            if not (0 <= src < self.n) or not (0 <= dst < self.n):
                raise IndexOutOfRangeError(src if src >= self.n or src < 0 else dst, self.n)
            pair = frozenset((src, dst))
            if pair in seen_pairs:
                raise DuplicateEdgeError(src, dst)
            seen_pairs.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: (e[0], e[1]))))

    @property
    def m(self) -> int:
        return len(self.edges)

    def colors(self) -> set[EdgeColor]:
        return {c for _, _, c in self.edges}

    def out_adj(self) -> list[list[tuple[int, EdgeColor]]]:
        adj: list[list[tuple[int, EdgeColor]]] = [[] for _ in range(self.n)]
        for src, dst, color in self.edges:
            adj[src].append((dst, color))
        return adj

    def in_adj(self) -> list[list[tuple[int, EdgeColor]]]:
        adj: list[list[tuple[int, EdgeColor]]] = [[] for _ in range(self.n)]
        for src, dst, color in self.edges:
            adj[dst].append((src, color))
        return adj

    def degrees(self) -> list[tuple[int, int]]:
        """Total (indegree, outdegree) per vertex, colors ignored."""
        indeg = [0] * self.n
        outdeg = [0] * self.n
        for src, dst, _ in self.edges:
            outdeg[src] += 1
            indeg[dst] += 1
        return list(zip(indeg, outdeg))

    def recolored(self, coloring: dict[tuple[int, int], EdgeColor]) -> "DirectedKnitGraph":
        """New graph with the same arcs and colors taken from `coloring`."""
        return DirectedKnitGraph(
            self.n,
            tuple((s, d, coloring.get((s, d), c)) for s, d, c in self.edges),
        )


@dataclass(frozen=True)
class KnittingGraph:
    """Simple undirected graph; edges stored as sorted (min, max) pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: set[tuple[int, int]] = set()
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(u)
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise IndexOutOfRangeError(u if u >= self.n or u < 0 else v, self.n)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(u, v)
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class YarnGraph:
    """Directed multigraph tracing the physical yarn.

    Arc order is significant: reduction uses first-traversal order to direct
    loop edges when no thread order is supplied.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    yarn_count_hint: int | None = None

    def __post_init__(self):
        for src, dst in self.arcs:
            if src == dst:
                raise SelfLoopError(src)
            if not (0 <= src < self.n) or not (0 <= dst < self.n):
                raise IndexOutOfRangeError(src if src >= self.n or src < 0 else dst, self.n)
        object.__setattr__(self, "arcs", tuple(self.arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def degrees(self) -> list[tuple[int, int]]:
        indeg = [0] * self.n
        outdeg = [0] * self.n
        for src, dst in self.arcs:
            outdeg[src] += 1
            indeg[dst] += 1
        return list(zip(indeg, outdeg))


def build_directed_graph(n: int, edges: list[tuple[int, int, EdgeColor]]) -> DirectedKnitGraph:
    """Validate and normalize an edge list into a DirectedKnitGraph."""
    return DirectedKnitGraph(n, tuple(edges))


def build_yarn_graph(
    n: int, arcs: list[tuple[int, int]], yarn_count_hint: int | None = None
) -> YarnGraph:
    return YarnGraph(n, tuple(arcs), yarn_count_hint)


def topological_sort(g: DirectedKnitGraph) -> list[int]:
    """Kahn's algorithm with a min-heap so ties break toward smaller ids.

    Raises CycleDetectedError carrying one concrete cycle.
    """
    indeg = [0] * g.n
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for src, dst, _ in g.edges:
        adj[src].append(dst)
        indeg[dst] += 1
    heap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) < g.n:
        raise CycleDetectedError(_find_cycle(g, set(range(g.n)) - set(order)))
    return order


def _find_cycle(g: DirectedKnitGraph, candidates: set[int]) -> list[int]:
    # Trim vertices that cannot reach back into the live set, then walk the
    # remaining sub-DAG-free core until a vertex repeats.
    adj: dict[int, list[int]] = {v: [] for v in candidates}
    for src, dst, _ in g.edges:
        if src in candidates and dst in candidates:
            adj[src].append(dst)
    live = set(candidates)
    changed = True
    while changed:
        changed = False
        for v in list(live):
            if not any(w in live for w in adj[v]):
                live.discard(v)
                changed = True
    v = min(live)
    path: list[int] = []
    pos: dict[int, int] = {}
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = min(w for w in adj[v] if w in live)
    return path[pos[v]:]


def is_dag(g: DirectedKnitGraph) -> bool:
    try:
        topological_sort(g)
        return True
    except CycleDetectedError:
        return False


def underlying_knitting_graph(g: DirectedKnitGraph) -> KnittingGraph:
    """Drop directions and colors; simplicity is preserved by construction."""
    return KnittingGraph(g.n, tuple((s, d) for s, d, _ in g.edges))


def reduce_yarn_to_directed(
    y: YarnGraph, hamiltonian_order: list[int] | None = None
) -> DirectedKnitGraph:
    """Compress a yarn multigraph into one colored edge per vertex pair.

    Multiplicity 1 maps to a blue edge along the arc. Multiplicity 2 must be
    one arc each way (a loop) and maps to red; the red direction follows the
    supplied order, lower position to higher, or else the first-traversed
    arc. Multiplicity 3 must split two-one and maps to purple along the
    majority (sequential) direction.
    """
    pos: dict[int, int] = {}
    if hamiltonian_order is not None:
        pos = {v: i for i, v in enumerate(hamiltonian_order)}

    first_index: dict[frozenset[int], int] = {}
    counts: dict[frozenset[int], dict[tuple[int, int], int]] = {}
    for i, (src, dst) in enumerate(y.arcs):
        pair = frozenset((src, dst))
        if pair not in counts:
            counts[pair] = {}
            first_index[pair] = i
        counts[pair][(src, dst)] = counts[pair].get((src, dst), 0) + 1

    edges: list[ColoredEdge] = []
    for pair, by_dir in sorted(counts.items(), key=lambda kv: first_index[kv[0]]):
        total = sum(by_dir.values())
        a, b = sorted(pair)
        if total > 3:
            raise MultiplicityTooHighError((a, b), total)
        if total == 1:
            (src, dst), _ = next(iter(by_dir.items()))
            edges.append((src, dst, EdgeColor.BLUE))
        elif total == 2:
            if len(by_dir) != 2:
                raise InconsistentPairError((a, b), "loop strands must run in opposite directions")
            if pos:
                src, dst = (a, b) if pos.get(a, a) < pos.get(b, b) else (b, a)
            else:
                src, dst = y.arcs[first_index[pair]]
            edges.append((src, dst, EdgeColor.RED))
        else:  # total == 3: one loop pair plus the sequential strand
            majority = [d for d, c in by_dir.items() if c == 2]
            if len(by_dir) != 2 or not majority:
                raise InconsistentPairError(
                    (a, b), "mixed edge needs a loop pair plus one sequential strand"
                )
            src, dst = majority[0]
            edges.append((src, dst, EdgeColor.PURPLE))
    return DirectedKnitGraph(y.n, tuple(edges))
