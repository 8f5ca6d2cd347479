"""Named graph families and the closed-form extremal values."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, GraphError, disjoint_union, join

FAMILIES = ("cycle", "path", "star", "complete", "s_prime", "connectivity_extremal", "split_extremal")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int
    k: int | None = None
    t: int | None = None


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def s_prime(n: int) -> Graph:
    """Unicyclic graph of maximum degree n-1: a star plus one edge between two leaves."""
    return star_graph(n).add_edge(1, 2)


def split_extremal(n: int, k: int, t: int) -> Graph:
    """(K_t ∪ K_{n-k-t}) ∨ K_k."""
    return join(disjoint_union(complete_graph(t), complete_graph(n - k - t)), complete_graph(k))


def connectivity_extremal(n: int, k: int) -> Graph:
    return split_extremal(n, k, 1)


def construct(spec: FamilySpec) -> Graph:
    name, n, k, t = spec.name, spec.n, spec.k, spec.t

    def need(ok: bool, what: str) -> None:
        if not ok:
            raise GraphError(f"{name}: {what}")

    if n > 62:
        raise GraphError(f"{name}: order {n} exceeds 62")
    if name == "cycle":
        need(n >= 3, "requires n >= 3")
        return cycle_graph(n)
    if name == "complete":
        need(n >= 3, "requires n >= 3")
        return complete_graph(n)
    if name == "path":
        need(n >= 2, "requires n >= 2")
        return path_graph(n)
    if name == "star":
        need(n >= 2, "requires n >= 2")
        return star_graph(n)
    if name == "s_prime":
        need(n >= 4, "requires n >= 4")
        return s_prime(n)
    if name == "connectivity_extremal":
        need(k is not None and 1 <= k <= n - 1, "requires 1 <= k <= n-1")
        return connectivity_extremal(n, k)
    if name == "split_extremal":
        need(k is not None and t is not None and k >= 1 and 1 <= t <= n - k - t,
             "requires k >= 1 and 1 <= t <= n-k-t")
        return split_extremal(n, k, t)
    raise GraphError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def unicyclic_max_bound(n: int) -> float:
    if n < 4:
        raise GraphError("unicyclic bound requires n >= 4")
    return (n - 3) * math.sqrt(n + 2 / (n - 2)) + 2 * math.sqrt(n - 1 + 4 / (n - 1)) + 2


def connectivity_max_bound(n: int, k: int) -> float:
    """Largest ASO among connected n-vertex graphs with vertex (or edge) connectivity k."""
    if n < 4 or not 1 <= k <= n - 1:
        raise GraphError(f"connectivity bound requires n >= 4 and 1 <= k <= n-1, got n={n}, k={k}")
    return (
        k * math.sqrt(((n - 1) ** 2 + k * k) / (n + k - 3))
        + math.comb(k, 2) * math.sqrt(n + 1 / (n - 2))
        + k * (n - k - 1) * math.sqrt(n - 0.5 + 5 / (2 * (2 * n - 5)))
        + math.comb(n - k - 1, 2) * math.sqrt(n - 1 + 1 / (n - 3))
    )
