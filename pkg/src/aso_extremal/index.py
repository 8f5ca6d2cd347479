"""The augmented Sombor (ASO) and Sombor indices.

The squared edge weight ``h(a, b) = (a^2 + b^2) / (a + b - 2)`` is kept as an
exact fraction so orderings and ties between degree pairs are decided without
rounding; floating point enters only after the square root.

ASO is defined whenever no component is a single edge (``P_2``).  This
includes graphs on one or two vertices and disconnected graphs, which is
weaker than requiring a connected graph on more than two vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, isolated_edges

RationalWeight = Fraction


class AsoUndefinedError(GraphError):
    """The graph has a ``P_2`` component, where ``h`` has a pole."""

    def __init__(self, where: str, edges: list[tuple[int, int]]):
        self.edges = edges
        comps = ", ".join(f"{{{u},{v}}}" for u, v in edges)
        super().__init__(f"isolated edge: ASO undefined ({where} has P_2 component {comps})")


def _check_pair(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise GraphError(f"degrees must be positive, got ({a}, {b})")
    if a + b < 3:
        raise GraphError(f"h({a}, {b}) has a zero denominator (isolated edge)")


def h_exact(a: int, b: int) -> Fraction:
    _check_pair(a, b)
    return Fraction(a * a + b * b, a + b - 2)


def edge_contribution(a: int, b: int) -> float:
    _check_pair(a, b)
    return math.sqrt((a * a + b * b) / (a + b - 2))


def compare_h_pairs(p: tuple[int, int], q: tuple[int, int]) -> int:
    """Sign of ``h(p) - h(q)`` by integer cross-multiplication."""
    (a, b), (c, d) = p, q
    _check_pair(a, b)
    _check_pair(c, d)
    lhs = (a * a + b * b) * (c + d - 2)
    rhs = (c * c + d * d) * (a + b - 2)
    return (lhs > rhs) - (lhs < rhs)


def aso(g: Graph) -> float:
    bad = isolated_edges(g)
    if bad:
        raise AsoUndefinedError("graph", bad)
    deg = g.degrees()
    return math.fsum(edge_contribution(deg[u], deg[v]) for u, v in g.edges())


def so(g: Graph) -> float:
    deg = g.degrees()
    return math.fsum(math.hypot(deg[u], deg[v]) for u, v in g.edges())


@dataclass(frozen=True)
class DeletionDelta:
    """``ASO(G) - ASO(G - ij)`` split into the two endpoint sums and the edge term.

    ``i`` is the endpoint of larger degree, so ``theta_j`` is the empty sum
    whenever ``d_j = 1``.
    """

    i: int
    j: int
    theta_i: float
    theta_j: float
    edge_term: float
    total: float


def _endpoint_sum(g: Graph, deg: list[int], x: int, other: int) -> float:
    dx = deg[x]
    return math.fsum(
        edge_contribution(dx, deg[r]) - edge_contribution(dx - 1, deg[r])
        for r in g.neighbors(x)
        if r != other
    )


def aso_delta_decomposition(g: Graph, e: tuple[int, int]) -> DeletionDelta:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    bad = isolated_edges(g)
    if bad:
        raise AsoUndefinedError("G", bad)
    bad = isolated_edges(g.delete_edge(u, v))
    if bad:
        raise AsoUndefinedError("G - e", bad)
    deg = g.degrees()
    i, j = (u, v) if deg[u] >= deg[v] else (v, u)
    theta_i = _endpoint_sum(g, deg, i, j)
    theta_j = _endpoint_sum(g, deg, j, i)
    edge_term = edge_contribution(deg[i], deg[j])
    return DeletionDelta(i, j, theta_i, theta_j, edge_term, theta_i + theta_j + edge_term)
