import math

import pytest
from hypothesis import given

from aso_extremal.canon import canonical_code
from aso_extremal.connectivity import edge_connectivity, vertex_connectivity
from aso_extremal.enumerate import unicyclic_graphs
from aso_extremal.families import (
    FamilySpec,
    complete_graph,
    connectivity_extremal,
    connectivity_max_bound,
    construct,
    cycle_graph,
    empty_graph,
    path_graph,
    s_prime,
    split_extremal,
    unicyclic_max_bound,
)
from aso_extremal.graph import GraphError, disjoint_union, has_isolated_edge, join
from aso_extremal.index import aso

from conftest import graphs

PAW_DEGREES = [3, 2, 2, 1]


def test_s_prime_four_is_paw():
    g = construct(FamilySpec("s_prime", 4))
    assert sorted(g.degrees(), reverse=True) == PAW_DEGREES
    assert canonical_code(g) == canonical_code(connectivity_extremal(4, 1))


def test_connectivity_extremal_five_two():
    g = construct(FamilySpec("connectivity_extremal", 5, k=2))
    assert sorted(g.degrees(), reverse=True) == [4, 4, 3, 3, 2]
    assert g.m == 8
    assert vertex_connectivity(g) == 2


@pytest.mark.parametrize("spec", [
    FamilySpec("cycle", 2), FamilySpec("complete", 2), FamilySpec("path", 1), FamilySpec("star", 1),
    FamilySpec("s_prime", 3), FamilySpec("connectivity_extremal", 5, k=0),
    FamilySpec("connectivity_extremal", 5, k=5), FamilySpec("connectivity_extremal", 5),
    FamilySpec("split_extremal", 6, k=1, t=3), FamilySpec("split_extremal", 6, k=0, t=1),
    FamilySpec("cycle", 63), FamilySpec("wheel", 5),
])
def test_construct_rejects(spec):
    with pytest.raises(GraphError):
        construct(spec)


def test_connectivity_extremal_full_is_complete():
    assert construct(FamilySpec("connectivity_extremal", 6, k=5)) == complete_graph(6)


def test_join_examples():
    wheel = join(complete_graph(1), cycle_graph(4))
    assert sorted(wheel.degrees(), reverse=True) == [4, 3, 3, 3, 3]
    assert join(empty_graph(1), empty_graph(1)) == path_graph(2)
    lhs = join(disjoint_union(complete_graph(1), complete_graph(2)), complete_graph(2))
    assert canonical_code(lhs) == canonical_code(connectivity_extremal(5, 2))
    with pytest.raises(GraphError):
        join(empty_graph(40), empty_graph(23))


def test_union_examples():
    g = disjoint_union(complete_graph(3), complete_graph(2))
    assert g.m == 4 and len(g.components()) == 2
    assert disjoint_union(cycle_graph(5), empty_graph(0)) == cycle_graph(5)
    assert has_isolated_edge(disjoint_union(complete_graph(3), path_graph(2)))
    with pytest.raises(GraphError):
        disjoint_union(empty_graph(31), empty_graph(32))


@given(graphs(max_n=15), graphs(max_n=15))
def test_join_union_formulas(g, h):
    u = disjoint_union(g, h)
    assert (u.n, u.m) == (g.n + h.n, g.m + h.m)
    assert len(u.components()) == len(g.components()) + len(h.components())
    j = join(g, h)
    assert (j.n, j.m) == (g.n + h.n, g.m + h.m + g.n * h.n)


def test_bound_examples():
    assert unicyclic_max_bound(5) == pytest.approx(11.2330883, abs=1e-7)
    assert unicyclic_max_bound(5) == pytest.approx(2 * math.sqrt(17 / 3) + 2 * math.sqrt(5) + 2, rel=1e-12)
    assert unicyclic_max_bound(4) == pytest.approx(8.3994000, abs=1e-7)
    assert unicyclic_max_bound(4) == pytest.approx(math.sqrt(5) + 2 * math.sqrt(13 / 3) + 2, rel=1e-12)
    assert connectivity_max_bound(5, 2) == pytest.approx(17.8471293, abs=1e-7)
    hand = 2 * math.sqrt(5) + math.sqrt(16 / 3) + 4 * math.sqrt(5) + math.sqrt(4.5)
    assert connectivity_max_bound(5, 2) == pytest.approx(hand, rel=1e-12)
    assert connectivity_max_bound(4, 1) == pytest.approx(8.3994000, abs=1e-7)
    assert connectivity_max_bound(6, 5) == pytest.approx(37.5, rel=1e-12)
    with pytest.raises(GraphError):
        unicyclic_max_bound(3)
    with pytest.raises(GraphError):
        connectivity_max_bound(5, 5)


@pytest.mark.parametrize("n", range(4, 31))
def test_closed_forms(n):
    assert aso(s_prime(n)) == pytest.approx(unicyclic_max_bound(n), rel=1e-9)
    for k in range(1, n):
        assert aso(connectivity_extremal(n, k)) == pytest.approx(connectivity_max_bound(n, k), rel=1e-9)
    assert connectivity_max_bound(n, n - 1) == pytest.approx(aso(complete_graph(n)), rel=1e-12)


@pytest.mark.parametrize("n", range(4, 13))
def test_extremal_connectivity(n):
    for k in range(1, n - 1):
        g = connectivity_extremal(n, k)
        assert vertex_connectivity(g) == k
        assert edge_connectivity(g) == k
        assert canonical_code(split_extremal(n, k, 1)) == canonical_code(g)


def test_s_prime_structure():
    for n in range(4, 20):
        g = s_prime(n)
        assert g.m == n and max(g.degrees()) == n - 1


@pytest.mark.parametrize("n", range(4, 10))
def test_s_prime_unique_by_enumeration(n):
    hits = [g for g in unicyclic_graphs(n) if max(g.degrees()) == n - 1]
    assert len(hits) == 1
    assert canonical_code(hits[0]) == canonical_code(s_prime(n))


def test_bound_increasing_in_k():
    for n in range(4, 101):
        values = [connectivity_max_bound(n, k) for k in range(1, n - 1)]
        assert all(a < b for a, b in zip(values, values[1:]))
