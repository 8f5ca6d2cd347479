import math

import numpy as np
import pytest

from aso_extremal import graph6
from aso_extremal.canon import canonical_code
from aso_extremal.families import connectivity_extremal, connectivity_max_bound, s_prime
from aso_extremal.graph import GraphError
from aso_extremal.verify import (
    RangeSpec,
    audit,
    claim1_sides,
    g_bound,
    mvt_lhs,
    phi,
    psi,
    verify_connectivity_max,
    verify_edge_deletion_exhaustive,
    verify_edge_deletion_random,
    verify_lemma_a1,
    verify_lemma_ee1,
    verify_mvt_inequality,
    verify_proof_inequalities,
    verify_unicyclic_max,
    verify_unicyclic_min,
)


def test_unicyclic_max_five():
    v = verify_unicyclic_max(5)
    assert v.passed and v.scanned == 5
    top = v.witnesses[0]
    assert canonical_code(graph6.decode(top.graph6)) == canonical_code(s_prime(5))
    assert top.is_extremal and top.value == pytest.approx(11.2330883, abs=1e-7)
    assert v.stats["equality_class_size"] == 1
    assert audit(v) == []


def test_unicyclic_max_four():
    v = verify_unicyclic_max(4)
    assert v.passed and v.scanned == 2
    assert [w.value for w in v.witnesses] == pytest.approx([8.3994000, 8.0], abs=1e-7)


def test_unicyclic_min():
    v = verify_unicyclic_min(5)
    assert v.passed and v.stats["extreme_value"] == 10.0
    assert verify_unicyclic_min(3).passed and verify_unicyclic_min(3).scanned == 1
    v8 = verify_unicyclic_min(8)
    assert v8.passed and v8.scanned == 89 and v8.stats["extreme_value"] == 16.0


def test_unicyclic_ranges():
    with pytest.raises(GraphError):
        verify_unicyclic_max(3)
    with pytest.raises(GraphError):
        verify_unicyclic_min(13)


def test_wrong_bound_is_caught():
    from aso_extremal.enumerate import unicyclic_graphs
    from aso_extremal.verify import _extremal_scan

    v = _extremal_scan("unicyclic-max", {"n": 6}, unicyclic_graphs(6), 10.0, s_prime(6), 1e-9, 1e-6, +1)
    assert not v.passed and v.counterexamples
    assert audit(v) == []


def test_edge_deletion_exhaustive():
    v3 = verify_edge_deletion_exhaustive(3)
    assert v3.passed
    assert v3.stats["min_delta"] == pytest.approx(1.5278640, abs=1e-7)
    v4 = verify_edge_deletion_exhaustive(4)
    assert v4.passed and v4.stats["excluded_edges"] >= 1
    v5 = verify_edge_deletion_exhaustive(5)
    assert v5.passed and v5.stats["graphs"] == 21 and v5.stats["min_delta"] > 0
    with pytest.raises(GraphError):
        verify_edge_deletion_exhaustive(8)


def test_edge_deletion_random():
    assert verify_edge_deletion_random(12, 200, 5).passed
    empty = verify_edge_deletion_random(10, 0, 0)
    assert empty.passed and empty.scanned == 0
    a = verify_edge_deletion_random(15, 100, 9).to_dict()
    b = verify_edge_deletion_random(15, 100, 9).to_dict()
    assert a == b


def test_connectivity_examples():
    v = verify_connectivity_max(5, 2, "vertex")
    assert v.passed
    assert canonical_code(graph6.decode(v.witnesses[0].graph6)) == canonical_code(connectivity_extremal(5, 2))
    assert v.witnesses[0].value == pytest.approx(17.8471293, abs=1e-7)
    k4 = verify_connectivity_max(4, 3, "vertex")
    assert k4.passed and k4.scanned == 1
    assert k4.witnesses[0].bound == pytest.approx(12.7279221, abs=1e-7)
    e = verify_connectivity_max(6, 2, "edge")
    assert e.passed
    assert canonical_code(graph6.decode(e.witnesses[0].graph6)) == canonical_code(connectivity_extremal(6, 2))
    assert audit(e) == []


def test_connectivity_ranges():
    with pytest.raises(GraphError):
        verify_connectivity_max(9, 2)
    with pytest.raises(GraphError):
        verify_connectivity_max(5, 5)
    with pytest.raises(GraphError):
        verify_connectivity_max(5, 2, "both")


def test_lemma_a1():
    v = verify_lemma_a1()
    assert v.passed and v.scanned == 60_000
    assert v.stats["critical_points"]["3"] == pytest.approx(-1 + math.sqrt(10), abs=1e-12)
    f = lambda x, a: (x * x + a * a) / (x + a - 2)
    assert f(1, 3) == 5 == 3 + 1 + 2 / 2
    assert f(2, 3) == pytest.approx(13 / 3)
    with pytest.raises(GraphError):
        verify_lemma_a1([1.0])


def test_lemma_ee1():
    v = verify_lemma_ee1(10, 10)
    assert v.passed
    assert v.stats["chain_at_n_lo"] == ["64/7", "65/7", "65/7", "85/9", "29/3", "81/8", "41/4"]
    assert verify_lemma_ee1().passed
    with pytest.raises(GraphError):
        verify_lemma_ee1(8, 20)


def test_mvt():
    assert mvt_lhs(2.0, 1.0) == pytest.approx(-1 / math.sqrt(5), abs=1e-12)
    assert mvt_lhs(2.0, 6.0) > -1 / math.sqrt(2)
    xs = np.arange(2, 100, 0.5)
    reduced = (xs * xs - 2 * xs - 1) / ((xs - 1) ** 1.5 * np.sqrt(xs * xs + 1))
    assert np.allclose(mvt_lhs(xs, 1.0), reduced, rtol=1e-12)
    small = verify_mvt_inequality(RangeSpec(2, 10, 0.5), RangeSpec(1, 30, 0.5))
    assert small.passed and small.stats["min_margin"] > 0
    with pytest.raises(GraphError):
        verify_mvt_inequality(RangeSpec(1, 10, 0.5))


def test_proof_inequalities():
    assert phi(3.0, 10) == pytest.approx(6 * (3 - math.sqrt(85 / 9)) + 4 * math.sqrt(64 / 7), abs=1e-12)
    assert phi(3.0, 10) == pytest.approx(11.656, abs=1e-3)
    values = [g_bound(float(x), 10) for x in range(1, 9)]
    assert all(a < b for a, b in zip(values, values[1:]))
    for k in range(1, 9):
        assert g_bound(float(k), 10) == pytest.approx(connectivity_max_bound(10, k), rel=1e-12)
    lhs, rhs = claim1_sides(10, 3)
    assert lhs < rhs
    assert 2 * math.sqrt(6.5) < 5.16 < math.sqrt(10.25) + 2
    assert verify_proof_inequalities(7, 60).passed
    with pytest.raises(GraphError):
        verify_proof_inequalities(6, 10)


def test_psi_is_scaled_second_derivative():
    sp = pytest.importorskip("sympy")
    x, n = sp.symbols("x n", positive=True)
    a = (n - 1) ** 2
    f = sp.sqrt((a + x ** 2) / (n + x - 3))
    scale = 4 * (n + x - 3) ** sp.Rational(5, 2) * (a + x ** 2) ** sp.Rational(3, 2)
    for nv in (7, 12, 50):
        for xv in (3, sp.Rational(7, 2), nv - 4):
            lhs = (sp.diff(f, x, 2) * scale).subs({n: nv, x: xv})
            assert sp.simplify(lhs - psi(xv, nv)) == 0


def test_determinism():
    a = verify_unicyclic_max(7).to_dict()
    b = verify_unicyclic_max(7).to_dict()
    assert a == b and a["runtime_ms"] is None
    assert verify_unicyclic_max(7).to_dict(timing=True)["runtime_ms"] is not None


def test_vacuous_class_is_a_pass():
    from aso_extremal.enumerate import GraphStream
    from aso_extremal.verify import _extremal_scan

    v = _extremal_scan("connectivity-max", {}, GraphStream("empty", 5, []), 1.0, s_prime(5), 1e-9, 1e-6, +1)
    assert v.passed and v.scanned == 0 and v.stats["vacuous"]


def test_audit_detects_tampering():
    v = verify_unicyclic_max(6)
    v.witnesses[0].value += 1.0
    assert audit(v)
