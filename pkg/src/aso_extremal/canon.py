"""Canonical labeling by equitable refinement and individualization.

The search explores the individualization tree, prunes on refinement traces
and on automorphisms discovered at equivalent leaves, and keeps the maximal
leaf under the key ``(traces..., permuted adjacency rows)``.  Automorphisms
found along the way give the group order via the first-path stabilizer chain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, _bits
from . import graph6


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]  # order[i] = original vertex placed at canonical position i
    rows: tuple[int, ...]  # adjacency rows of the canonical form
    group_order: int
    generators: tuple[tuple[int, ...], ...]

    def orbits(self, n: int) -> list[int]:
        """Orbit representative (smallest vertex) for each vertex."""
        return _orbits(n, self.generators)


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(rows: Sequence[int], cells: list[list[int]], queue: deque, trace: list) -> list[list[int]]:
    n = len(rows)
    while queue and len(cells) < n:
        w = queue.popleft()
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                c = (rows[v] & w).bit_count()
                g = groups.get(c)
                if g is None:
                    groups[c] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                new.append(cell)
                continue
            keys = sorted(groups)
            trace.append((len(new), tuple(keys), tuple(len(groups[k]) for k in keys)))
            for k in keys:
                piece = groups[k]
                new.append(piece)
                queue.append(_mask(piece))
        cells = new
    trace.append((len(cells),))
    return cells


def _orbits(n: int, gens) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    __slots__ = (
        "rows", "n", "first_code", "first_seq", "first_order", "first_traces",
        "best_code", "best_seq", "best_order", "best_traces", "gens", "group_order", "nbrs",
    )

    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.n = len(rows)
        self.nbrs = [list(_bits(r)) for r in rows]
        self.first_code = None
        self.first_seq: list[int] = []
        self.first_order: list[int] = []
        self.first_traces: list = []
        self.best_code = None
        self.best_seq: list[int] = []
        self.best_order: list[int] = []
        self.best_traces: list = []
        self.gens: list[tuple[int, ...]] = []
        self.group_order = 1

    def _leaf(self, cells, seq, traces, eq_first, cmp_best):
        nbrs = self.nbrs
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = 1 << i
        code = []
        for v in order:
            r = 0
            for u in nbrs[v]:
                r |= pos[u]
            code.append(r)
        code = tuple(code)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_seq = self.best_seq = list(seq)
            self.first_order = self.best_order = order
            self.first_traces = self.best_traces = list(traces)
            return None
        if eq_first and code == self.first_code:
            return self._automorphism(self.first_order, order, self.first_seq, seq)
        if cmp_best == 0 and code == self.best_code:
            return self._automorphism(self.best_order, order, self.best_seq, seq)
        if cmp_best > 0 or (cmp_best == 0 and code > self.best_code):
            self.best_code = code
            self.best_seq = list(seq)
            self.best_order = order
            self.best_traces = list(traces)
        return None

    def _automorphism(self, ref_order, order, ref_seq, seq):
        gamma = [0] * self.n
        for a, b in zip(ref_order, order):
            gamma[a] = b
        self.gens.append(tuple(gamma))
        for i, (a, b) in enumerate(zip(ref_seq, seq)):
            if a != b:
                return i
        return len(seq)

    def _fixing(self, seq):
        return [g for g in self.gens if all(g[v] == v for v in seq)]

    def dfs(self, cells, seq, traces, eq_first, cmp_best):
        if len(cells) == self.n:
            return self._leaf(cells, seq, traces, eq_first, cmp_best)
        depth = len(seq)
        ci = 0
        while len(cells[ci]) == 1:
            ci += 1
        target = cells[ci]
        on_first = self.first_code is None
        explored: list[int] = []
        for x in target:
            if explored and self.gens:
                orb = _orbits(self.n, self._fixing(seq))
                ox = orb[x]
                if any(orb[y] == ox for y in explored):
                    continue
            explored.append(x)
            child = cells[:ci] + [[x], [y for y in target if y != x]] + cells[ci + 1:]
            trace: list = []
            child = _refine(self.rows, child, deque([1 << x]), trace)
            trace = tuple(trace)
            c_eq_first = False
            c_cmp = cmp_best
            if self.first_code is not None:
                c_eq_first = eq_first and trace == self.first_traces[depth]
                if cmp_best == 0:
                    bt = self.best_traces[depth]
                    c_cmp = (trace > bt) - (trace < bt)
                if not c_eq_first and c_cmp < 0:
                    continue
            seq.append(x)
            traces.append(trace)
            jump = self.dfs(child, seq, traces, c_eq_first, c_cmp)
            seq.pop()
            traces.pop()
            if jump is not None and jump < depth:
                return jump
        if on_first:
            orb = _orbits(self.n, self._fixing(seq))
            fx = orb[target[0]]
            self.group_order *= sum(1 for y in target if orb[y] == fx)
        return None


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> Labeling:
    """Canonical labeling of ``g``, optionally respecting a vertex colouring.

    Colour classes are ordered by colour value, so two coloured graphs receive
    the same canonical rows iff an isomorphism maps colours onto equal colours.
    """
    n = g.n
    rows = g.rows
    if n == 0:
        return Labeling((), (), 1, ())
    if colors is None:
        cells = [list(range(n))]
    else:
        by: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by.setdefault(c, []).append(v)
        cells = [by[c] for c in sorted(by)]
    root_trace: list = []
    cells = _refine(rows, cells, deque(_mask(c) for c in cells), root_trace)
    s = _Search(rows)
    s.dfs(cells, [], [], True, 0)
    return Labeling(tuple(s.best_order), s.best_code, s.group_order, tuple(s.gens))


def canonical_form(g: Graph) -> Graph:
    return Graph(g.n, canonical_labeling(g).rows)


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal iff the graphs are isomorphic."""
    return graph6.encode(canonical_form(g)).encode("ascii")


def automorphism_group_order(g: Graph) -> int:
    return canonical_labeling(g).group_order


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_code(g) == canonical_code(h)
