"""Vertex and edge connectivity by unit-capacity augmenting paths (Menger)."""

from __future__ import annotations

from collections import deque

from .graph import Graph, GraphError, _bits, is_connected


def _max_flow(cap: list[dict[int, int]], s: int, t: int, limit: int) -> int:
    """Shortest-augmenting-path max flow, stopping once ``limit`` is reached.

    ``cap`` is mutated into the residual network.
    """
    flow = 0
    size = len(cap)
    while flow < limit:
        parent = [-1] * size
        parent[s] = s
        q = deque([s])
        while q and parent[t] < 0:
            u = q.popleft()
            for v, c in cap[u].items():
                if c > 0 and parent[v] < 0:
                    parent[v] = u
                    q.append(v)
        if parent[t] < 0:
            break
        bottleneck = limit - flow
        v = t
        while v != s:
            u = parent[v]
            bottleneck = min(bottleneck, cap[u][v])
            v = u
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= bottleneck
            cap[v][u] = cap[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t."""
    if g.has_edge(s, t):
        raise GraphError("local vertex connectivity needs a non-adjacent pair")
    n = g.n
    big = n
    # vertex v -> in-node 2v, out-node 2v+1
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        cap[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v].setdefault(2 * u + 1, 0)
        cap[2 * v + 1][2 * u] = big
        cap[2 * u].setdefault(2 * v + 1, 0)
    return _max_flow(cap, 2 * s + 1, 2 * t, n if limit is None else limit)


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    cap: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v in g.edges():
        cap[u][v] = 1
        cap[v][u] = 1
    return _max_flow(cap, s, t, g.n if limit is None else limit)


def _check(g: Graph) -> None:
    if g.n < 2:
        raise GraphError("connectivity needs at least two vertices")
    if not is_connected(g):
        raise GraphError("connectivity of a disconnected graph")


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n-1 when no non-adjacent pair exists."""
    _check(g)
    n = g.n
    best = n - 1
    i = 0
    # some vertex among the first best+1 lies outside a minimum cut
    while i <= best and i < n:
        non_adj = ((1 << n) - 1) & ~g.rows[i] & ~((1 << (i + 1)) - 1)
        for j in _bits(non_adj):
            best = min(best, local_vertex_connectivity(g, i, j, best))
        i += 1
    return best


def edge_connectivity(g: Graph) -> int:
    _check(g)
    best = min(g.degrees())
    for t in range(1, g.n):
        if best == 0:
            break
        best = min(best, local_edge_connectivity(g, 0, t, best))
    return best
