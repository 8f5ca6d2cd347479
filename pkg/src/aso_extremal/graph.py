"""Immutable simple undirected graphs stored as adjacency bitsets.

Row ``rows[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
Every operation that changes a graph returns a new instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62


class GraphError(ValueError):
    """Raised on malformed graph input or a violated precondition."""


@dataclass(frozen=True)
class DegreeProfile:
    sequence: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return self.sequence[0]

    @property
    def second_max_degree(self) -> int:
        """Largest degree over vertices other than one fixed maximum-degree vertex."""
        return self.sequence[1] if len(self.sequence) > 1 else 0


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        if self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is already an edge")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            pv = perm[v]
            r = 0
            for u in _bits(row):
                r |= 1 << perm[u]
            rows[pv] = r
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(self.rows)))

    def induced(self, keep: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep), [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        )

    def components(self) -> list[int]:
        """Vertex sets of the connected components, as bitmasks."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = _reach(self.rows, 1 << v, (1 << self.n) - 1)
            comps.append(comp)
            seen |= comp
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _reach(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edges(n, edges)


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise GraphError("degree profile of the empty graph")
    return DegreeProfile(tuple(sorted(g.degrees(), reverse=True)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph")
    full = (1 << g.n) - 1
    return _reach(g.rows, 1, full) == full


def is_connected_without(rows: Sequence[int], n: int, v: int) -> bool:
    """True iff the graph minus vertex ``v`` is connected (and non-empty)."""
    allowed = ((1 << n) - 1) & ~(1 << v)
    if not allowed:
        return False
    start = allowed & -allowed
    return _reach(rows, start, allowed) == allowed


def has_isolated_edge(g: Graph) -> bool:
    rows = g.rows
    for v, row in enumerate(rows):
        if row.bit_count() == 1:
            u = row.bit_length() - 1
            if rows[u].bit_count() == 1:
                return True
    return False


def isolated_edges(g: Graph) -> list[tuple[int, int]]:
    rows = g.rows
    out = []
    for v, row in enumerate(rows):
        if row.bit_count() == 1:
            u = row.bit_length() - 1
            if v < u and rows[u].bit_count() == 1:
                out.append((v, u))
    return out


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    return g.delete_edge(u, v)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g.n
    return Graph(n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << shift
    rows = tuple(r | h_mask for r in g.rows) + tuple((r << shift) | g_mask for r in h.rows)
    return Graph(n, rows)
