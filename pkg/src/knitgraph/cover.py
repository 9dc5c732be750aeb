"""Thread-cover decisions: Hamiltonian check, the exact-k flow decision,
minimum path cover, and exhaustive oracles for small graphs.

A thread cover is an ordered tuple of vertex-disjoint directed paths whose
union is the whole vertex set; threads are reported sorted by their first
vertex, and the flow solver processes arcs in normalized order, so every
returned witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CycleDetectedError,
    InfeasibleVertexError,
    NotADagError,
    PurplePresentError,
    TooLargeError,
)
from .feasibility import RedRule, Role, check_coloring, classify_vertex
from .flows import (
    ORIGINAL,
    SINK,
    SOURCE,
    SPLIT,
    SUPER,
    FlowNetwork,
    solve_flow_with_bounds,
    solve_minimum_flow,
)
from .graphs import DirectedKnitGraph, EdgeColor, KnittingGraph, topological_sort

ThreadCover = tuple[tuple[int, ...], ...]
EdgeColoring = dict[tuple[int, int], EdgeColor]


def has_hamiltonian_path_dag(g: DirectedKnitGraph) -> list[int] | None:
    """Topological order if consecutive vertices are joined by arcs, else None."""
    try:
        order = topological_sort(g)
    except CycleDetectedError as exc:
        raise NotADagError(exc.cycle) from exc
    arcs = {(s, d) for s, d, _ in g.edges}
    for u, v in zip(order, order[1:]):
        if (u, v) not in arcs:
            return None
    return order


def build_flow_network(
    g: DirectedKnitGraph, k: int, rule: RedRule = RedRule.STRICT
) -> FlowNetwork:
    """Split-vertex network whose value-k circulations are k-thread covers.

    Every vertex carries a mandatory [1,1] split arc. An original arc can
    carry thread flow only if its tail may host a thread start-or-middle and
    its head a middle-or-end. Start/end capability wires the vertex to the
    super source/sink, which themselves carry exactly k units.
    """
    if EdgeColor.PURPLE in g.colors():
        raise PurplePresentError()
    roles = []
    for v, (indeg, outdeg) in enumerate(g.degrees()):
        role = classify_vertex(indeg, outdeg, rule)
        if not role:
            raise InfeasibleVertexError(v, indeg, outdeg)
        roles.append(role)
    return _assemble_network(g, k, roles, exact=True)


def _assemble_network(
    g: DirectedKnitGraph, k: int, roles: list[frozenset], *, exact: bool
) -> FlowNetwork:
    net = FlowNetwork(g.n, k)
    for v in range(g.n):
        net.add(2 * v, 2 * v + 1, 1, 1, SPLIT, v)
    for src, dst, _color in g.edges:
        if (Role.S in roles[src] or Role.M in roles[src]) and (
            Role.M in roles[dst] or Role.T in roles[dst]
        ):
            net.add(2 * src + 1, 2 * dst, 0, 1, ORIGINAL, (src, dst))
    for v in range(g.n):
        if Role.S in roles[v]:
            net.add(net.s_out, 2 * v, 0, 1, SOURCE, v)
    for v in range(g.n):
        if Role.T in roles[v]:
            net.add(2 * v + 1, net.t_in, 0, 1, SINK, v)
    upper = k if exact else g.n
    lower = k if exact else 0
    net.add(net.s_in, net.s_out, lower, upper, SUPER, None)
    net.add(net.t_in, net.t_out, lower, upper, SUPER, None)
    return net


def extract_threads(net: FlowNetwork, flows: list[int]) -> ThreadCover:
    """Read the k threads off a feasible flow, ordered by start vertex."""
    starts: list[int] = []
    nxt: dict[int, int] = {}
    for arc, flow in zip(net.arcs, flows):
        if flow != 1:
            continue
        kind = arc[4]
        if kind == SOURCE:
            starts.append(arc[5])
        elif kind == ORIGINAL:
            src, dst = arc[5]
            nxt[src] = dst
    threads = []
    for v in sorted(starts):
        path = [v]
        while v in nxt:
            v = nxt[v]
            path.append(v)
        threads.append(tuple(path))
    return tuple(threads)


def _color_by_cover(g: DirectedKnitGraph, cover: ThreadCover) -> EdgeColoring:
    blue_pairs = {pair for thread in cover for pair in zip(thread, thread[1:])}
    return {
        (s, d): (EdgeColor.BLUE if (s, d) in blue_pairs else EdgeColor.RED)
        for s, d, _ in g.edges
    }


def decide_k_knittable(
    g: DirectedKnitGraph, k: int, rule: RedRule = RedRule.STRICT
) -> tuple[EdgeColoring, ThreadCover] | None:
    """Decide exact-k thread feasibility of a DAG under the degree rule.

    Returns a coloring (thread arcs blue, the rest red) plus the thread
    cover, or None when infeasible. Input colors are ignored; purple edges
    are rejected.
    """
    try:
        topological_sort(g)
    except CycleDetectedError as exc:
        raise NotADagError(exc.cycle) from exc
    if EdgeColor.PURPLE in g.colors():
        raise PurplePresentError()
    if k < 0:
        return None
    try:
        net = build_flow_network(g, k, rule)
    except InfeasibleVertexError:
        return None
    flows = solve_flow_with_bounds(net)
    if flows is None:
        return None
    cover = extract_threads(net, flows)
    return _color_by_cover(g, cover), cover


def sweep_feasible_k(
    g: DirectedKnitGraph, rule: RedRule = RedRule.STRICT, k_max: int | None = None
) -> list[int]:
    """All thread counts in 1..k_max (default n) for which g is feasible."""
    top = g.n if k_max is None else k_max
    return [k for k in range(1, top + 1) if decide_k_knittable(g, k, rule) is not None]


def minimum_path_cover(g: DirectedKnitGraph) -> tuple[int, ThreadCover]:
    """Minimum number of vertex-disjoint directed paths covering V.

    Degree restrictions do not apply here: every vertex may start, end, or
    continue a path, and the super-arc bound is relaxed so the solver can
    shrink the path count to its minimum.
    """
    try:
        topological_sort(g)
    except CycleDetectedError as exc:
        raise NotADagError(exc.cycle) from exc
    if g.n == 0:
        return 0, ()
    all_roles = frozenset({Role.S, Role.M, Role.T})
    net = _assemble_network(g, 0, [all_roles] * g.n, exact=False)
    solved = solve_minimum_flow(net)
    if solved is None:  # cannot happen: singleton paths always cover
        raise AssertionError("path cover network must be feasible")
    value, flows = solved
    return value, extract_threads(net, flows)


@dataclass(frozen=True)
class OracleWitness:
    """Result of the exhaustive search: an oriented, colored graph plus cover."""

    graph: DirectedKnitGraph
    coloring: EdgeColoring
    cover: ThreadCover


def _iter_path_systems(n: int, adj: list[list[int]], k: int):
    """Yield all partitions of 0..n-1 into k directed paths.

    Paths are emitted with strictly increasing start vertices, and extension
    follows sorted adjacency, so the iteration order is deterministic.
    """
    used = [False] * n
    paths: list[list[int]] = []

    def start_next(min_start: int, remaining: int, free: int):
        if remaining == 0:
            if free == 0:
                yield tuple(tuple(p) for p in paths)
            return
        if free < remaining:
            return
        for s in range(min_start, n):
            if used[s]:
                continue
            used[s] = True
            paths.append([s])
            yield from extend(s, s, remaining, free - 1)
            paths.pop()
            used[s] = False

    def extend(start: int, v: int, remaining: int, free: int):
        yield from start_next(start + 1, remaining - 1, free)
        for w in adj[v]:
            if not used[w]:
                used[w] = True
                paths[-1].append(w)
                yield from extend(start, w, remaining, free - 1)
                paths[-1].pop()
                used[w] = False

    yield from start_next(0, k, n)


def brute_force_knittable(
    g: DirectedKnitGraph | KnittingGraph,
    k: int,
    rule: RedRule = RedRule.STRICT,
    cap: int = 10,
) -> OracleWitness | None:
    """Exhaustive k-thread search; the independent oracle for the flow path.

    Directed inputs keep their arc directions; undirected inputs are
    oriented per candidate cover (thread arcs along the path, loop arcs from
    lower to higher position in the concatenated thread order). The first
    cover whose induced coloring verifies is returned; None is a proof of
    infeasibility at this size.
    """
    if g.n > cap:
        raise TooLargeError(g.n, cap)
    if k < 0:
        return None

    directed = isinstance(g, DirectedKnitGraph)
    if directed:
        adj: list[list[int]] = [[] for _ in range(g.n)]
        for s, d, _ in g.edges:
            adj[s].append(d)
        for lst in adj:
            lst.sort()
    else:
        adj = [sorted(neighbors) for neighbors in g.adj()]

    for system in _iter_path_systems(g.n, adj, k):
        if directed:
            candidate = g
        else:
            position = {}
            idx = 0
            for thread in system:
                for v in thread:
                    position[v] = idx
                    idx += 1
            blue_pairs = {pair for t in system for pair in zip(t, t[1:])}
            edges = []
            for u, v in g.edges:
                if (u, v) in blue_pairs:
                    edges.append((u, v, EdgeColor.BLUE))
                elif (v, u) in blue_pairs:
                    edges.append((v, u, EdgeColor.BLUE))
                elif position[u] < position[v]:
                    edges.append((u, v, EdgeColor.RED))
                else:
                    edges.append((v, u, EdgeColor.RED))
            candidate = DirectedKnitGraph(g.n, tuple(edges))
        coloring = _color_by_cover(candidate, system)
        colored = candidate.recolored(coloring)
        if check_coloring(colored, k, rule).valid:
            return OracleWitness(colored, coloring, system)
    return None


def brute_force_minimum_path_cover(
    g: DirectedKnitGraph, cap: int = 10
) -> tuple[int, ThreadCover]:
    """Smallest k admitting a path partition, by direct enumeration."""
    if g.n > cap:
        raise TooLargeError(g.n, cap)
    if g.n == 0:
        return 0, ()
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for s, d, _ in g.edges:
        adj[s].append(d)
    for lst in adj:
        lst.sort()
    for k in range(1, g.n + 1):
        for system in _iter_path_systems(g.n, adj, k):
            return k, system
    raise AssertionError("singleton partition always exists")
