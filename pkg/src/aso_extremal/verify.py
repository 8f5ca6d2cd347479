"""Exhaustive and grid-based checks of the ASO extremal results.

Each ``verify_*`` function returns a :class:`Verdict`.  Graph claims are
decided over complete isomorph-free classes; uniqueness of extremal graphs
is always settled by canonical codes, never by comparing index values.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

from . import graph6
from .canon import canonical_code
from .connectivity import edge_connectivity, vertex_connectivity
from .enumerate import (
    GraphStream,
    connected_graphs,
    random_connected_graph,
    unicyclic_graphs,
)
from .families import (
    complete_graph,
    connectivity_extremal,
    connectivity_max_bound,
    cycle_graph,
    s_prime,
    unicyclic_max_bound,
)
from .graph import Graph, GraphError, has_isolated_edge
from .index import aso, aso_delta_decomposition, compare_h_pairs, h_exact

TOLERANCE = 1e-9
WINDOW = 1e-6

CLAIMS = (
    "unicyclic-max",
    "unicyclic-min",
    "edge-deletion",
    "edge-deletion-random",
    "connectivity-max",
    "lemma-a1",
    "lemma-ee1",
    "lemma-mvt",
    "proof-inequalities",
)


@dataclass
class Certificate:
    """A witness or counterexample.

    ``slack`` is signed in the direction of the claim, so it is non-negative
    whenever the certified object respects the claim.  Analytic checks carry
    a ``point`` instead of a graph.
    """

    graph6: str | None
    value: float
    bound: float
    slack: float
    is_extremal: bool | None = None
    point: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        if self.graph6 is not None:
            return {
                "graph6": self.graph6,
                "aso": self.value,
                "bound": self.bound,
                "slack": self.slack,
                "is_extremal": self.is_extremal,
            }
        return {"point": self.point, "value": self.value, "bound": self.bound, "slack": self.slack}


@dataclass
class Verdict:
    claim: str
    params: dict[str, Any]
    passed: bool = True
    scanned: int = 0
    witnesses: list[Certificate] = field(default_factory=list)
    counterexamples: list[Certificate] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)
    runtime_ms: float | None = None

    def fail(self, cert: Certificate) -> None:
        self.counterexamples.append(cert)
        self.passed = False

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": self.params,
            "pass": self.passed,
            "scanned": self.scanned,
            "runtime_ms": round(self.runtime_ms, 3) if timing and self.runtime_ms is not None else None,
            "stats": self.stats,
            "witnesses": [c.to_dict() for c in self.witnesses],
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


class _Timer:
    def __init__(self, verdict: Verdict):
        self.verdict = verdict

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.verdict

    def __exit__(self, *exc):
        self.verdict.runtime_ms = (time.perf_counter() - self.t0) * 1e3
        self.verdict.passed = not self.verdict.counterexamples
        self.verdict.counterexamples.sort(key=_cert_key)
        return False


def _cert_key(c: Certificate):
    return (c.graph6 or "", sorted((c.point or {}).items()), c.slack)


def _rel(bound: float) -> float:
    return max(1.0, abs(bound))


def _graph_cert(g: Graph, value: float, bound: float, slack: float, extremal_code: bytes | None) -> Certificate:
    is_ext = None if extremal_code is None else canonical_code(g) == extremal_code
    return Certificate(graph6.encode(g), value, bound, slack, is_ext)


def _extremal_scan(claim, params, stream, bound, extremal: Graph, tolerance, window, sense):
    """Shared scan for "every member is on one side of ``bound``, equality only at ``extremal``".

    ``sense`` is +1 for upper bounds and -1 for lower bounds.
    """
    verdict = Verdict(claim, params)
    with _Timer(verdict):
        ext_code = canonical_code(extremal)
        scale = _rel(bound)
        scored = []
        near_codes = set()
        for g in stream:
            value = aso(g)
            slack = sense * (bound - value)
            scored.append((slack, graph6.encode(g), g, value))
            if slack < -tolerance * scale:
                verdict.fail(_graph_cert(g, value, bound, slack, ext_code))
            if slack <= window * scale:
                code = canonical_code(g)
                near_codes.add(code)
                if code != ext_code:
                    verdict.fail(Certificate(graph6.encode(g), value, bound, slack, False))
        verdict.scanned = len(scored)
        if scored and ext_code not in near_codes:
            value = aso(extremal)
            verdict.fail(Certificate(graph6.encode(extremal), value, bound, sense * (bound - value), True))
        scored.sort(key=lambda t: (t[0], t[1]))
        verdict.witnesses = [_graph_cert(g, v, bound, s, ext_code) for s, _, g, v in scored[:3]]
        verdict.stats["equality_class_size"] = len(near_codes)
        if scored:
            verdict.stats["extreme_value"] = scored[0][3]
        if not scored:
            verdict.stats["vacuous"] = True
    return verdict


def verify_unicyclic_max(n: int, *, tolerance: float = TOLERANCE, window: float = WINDOW,
                         jobs: int = 1, cache_dir=None) -> Verdict:
    if not 4 <= n <= 12:
        raise GraphError(f"unicyclic-max needs 4 <= n <= 12, got {n}")
    stream = unicyclic_graphs(n, jobs=jobs, cache_dir=cache_dir)
    return _extremal_scan("unicyclic-max", {"n": n}, stream, unicyclic_max_bound(n), s_prime(n),
                          tolerance, window, +1)


def verify_unicyclic_min(n: int, *, tolerance: float = TOLERANCE, window: float = WINDOW,
                         jobs: int = 1, cache_dir=None) -> Verdict:
    if not 3 <= n <= 12:
        raise GraphError(f"unicyclic-min needs 3 <= n <= 12, got {n}")
    stream = unicyclic_graphs(n, jobs=jobs, cache_dir=cache_dir)
    verdict = _extremal_scan("unicyclic-min", {"n": n}, stream, 2.0 * n, cycle_graph(n),
                             tolerance, window, -1)
    minimum = verdict.stats.get("extreme_value")
    if minimum is not None and abs(minimum - 2 * n) > 1e-12 * 2 * n:
        g = cycle_graph(n)
        verdict.fail(Certificate(graph6.encode(g), minimum, 2.0 * n, minimum - 2 * n, True))
    return verdict


def _deletion_pairs(g: Graph):
    """Admissible (edge, delta) pairs of ``g`` and the count of excluded edges."""
    out = []
    excluded = 0
    for e in g.edges():
        if has_isolated_edge(g.delete_edge(*e)):
            excluded += 1
            continue
        out.append((e, aso_delta_decomposition(g, e)))
    return out, excluded


def _deletion_check(verdict: Verdict, g: Graph, e, delta, base: float, tolerance: float) -> float:
    recomputed = base - aso(g.delete_edge(*e))
    summed = delta.theta_i + delta.theta_j + delta.edge_term
    if abs(summed - delta.total) > 1e-12 * _rel(delta.total):
        verdict.fail(Certificate(graph6.encode(g), delta.total, summed, summed - delta.total,
                                 point={"edge": list(e), "check": "decomposition"}))
    if abs(recomputed - delta.total) > tolerance * _rel(recomputed):
        verdict.fail(Certificate(graph6.encode(g), delta.total, recomputed, recomputed - delta.total,
                                 point={"edge": list(e), "check": "recomputation"}))
    if not delta.total > 0:
        verdict.fail(Certificate(graph6.encode(g), delta.total, 0.0, delta.total,
                                 point={"edge": list(e), "check": "positivity"}))
    return delta.total


def _scan_deletions(graphs: Sequence[Graph], tolerance: float):
    verdict = Verdict("edge-deletion", {})
    pairs = 0
    excluded = 0
    best = None
    for g in graphs:
        if has_isolated_edge(g):
            continue
        base = aso(g)
        admissible, skip = _deletion_pairs(g)
        excluded += skip
        for e, delta in admissible:
            pairs += 1
            total = _deletion_check(verdict, g, e, delta, base, tolerance)
            key = (total, graph6.encode(g), e)
            if best is None or key < best[0]:
                best = (key, g, e, delta)
    return pairs, excluded, best, verdict.counterexamples


def _pool_map(fn, chunks, jobs):
    if jobs <= 1:
        return [fn(*c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star, [(fn, c) for c in chunks]))


def _star(arg):
    fn, args = arg
    return fn(*args)


def verify_edge_deletion_exhaustive(n: int, *, tolerance: float = TOLERANCE, jobs: int = 1,
                                    cache_dir=None) -> Verdict:
    if not 3 <= n <= 7:
        raise GraphError(f"edge-deletion needs 3 <= n <= 7, got {n}")
    verdict = Verdict("edge-deletion", {"n": n})
    with _Timer(verdict):
        stream = connected_graphs(n, jobs=jobs, cache_dir=cache_dir)
        parts = stream.partition(max(1, jobs))
        results = _pool_map(_scan_deletions, [(p.graphs, tolerance) for p in parts], jobs)
        pairs = sum(r[0] for r in results)
        excluded = sum(r[1] for r in results)
        bests = [r[2] for r in results if r[2] is not None]
        for r in results:
            verdict.counterexamples.extend(r[3])
        verdict.scanned = pairs
        verdict.stats.update({"graphs": len(stream), "excluded_edges": excluded})
        if bests:
            key, g, e, delta = min(bests, key=lambda b: b[0])
            verdict.stats["min_delta"] = delta.total
            verdict.stats["min_delta_edge"] = list(e)
            verdict.witnesses.append(Certificate(graph6.encode(g), aso(g), aso(g.delete_edge(*e)),
                                                 delta.total, None))
    return verdict


def verify_edge_deletion_random(n: int, trials: int, seed: int, *, tolerance: float = TOLERANCE) -> Verdict:
    if not 3 <= n <= 62:
        raise GraphError(f"edge-deletion-random needs 3 <= n <= 62, got {n}")
    verdict = Verdict("edge-deletion-random", {"n": n, "trials": trials, "seed": seed})
    with _Timer(verdict):
        rng = random.Random(seed)
        redraws = 0
        best = None
        max_m = n * (n - 1) // 2
        done = 0
        while done < trials:
            m = rng.randint(n - 1, max_m)
            g = random_connected_graph(n, m, rng.getrandbits(64))
            edges = list(g.edges())
            e = edges[rng.randrange(len(edges))]
            if has_isolated_edge(g) or has_isolated_edge(g.delete_edge(*e)):
                redraws += 1
                continue
            delta = aso_delta_decomposition(g, e)
            total = _deletion_check(verdict, g, e, delta, aso(g), tolerance)
            if best is None or total < best[0]:
                best = (total, g, e)
            done += 1
        verdict.scanned = done
        verdict.stats["redraws"] = redraws
        if best is not None:
            total, g, e = best
            verdict.stats["min_delta"] = total
            verdict.witnesses.append(Certificate(graph6.encode(g), aso(g), aso(g.delete_edge(*e)), total, None))
    return verdict


def _table_rows(graphs: Sequence[Graph]):
    return [(g, aso(g), vertex_connectivity(g), edge_connectivity(g)) for g in graphs]


@lru_cache(maxsize=16)
def connectivity_table(n: int, jobs: int = 1, cache_dir=None) -> tuple:
    """``(graph, aso, kappa, lambda)`` for every connected graph of order ``n``."""
    stream = connected_graphs(n, jobs=jobs, cache_dir=cache_dir)
    parts = stream.partition(max(1, jobs))
    rows = []
    for chunk in _pool_map(_table_rows, [(p.graphs,) for p in parts], jobs):
        rows.extend(chunk)
    return tuple(rows)


def verify_connectivity_max(n: int, k: int, mode: str = "vertex", *, tolerance: float = TOLERANCE,
                            window: float = WINDOW, jobs: int = 1, cache_dir=None,
                            allow_slow: bool = False) -> Verdict:
    cap = 9 if allow_slow else 8
    if not 4 <= n <= cap:
        raise GraphError(f"connectivity-max needs 4 <= n <= {cap}, got {n}")
    if not 1 <= k <= n - 1:
        raise GraphError(f"connectivity-max needs 1 <= k <= n-1, got k={k}")
    if mode not in ("vertex", "edge"):
        raise GraphError(f"mode must be vertex or edge, got {mode!r}")
    table = connectivity_table(n, jobs, cache_dir)
    col = 2 if mode == "vertex" else 3
    members = [row[0] for row in table if row[col] == k]
    extremal = complete_graph(n) if k == n - 1 else connectivity_extremal(n, k)
    stream = GraphStream(f"connected|{mode}={k}", n, members)
    return _extremal_scan("connectivity-max", {"n": n, "k": k, "mode": mode}, stream,
                          connectivity_max_bound(n, k), extremal, tolerance, window, +1)


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


def verify_lemma_a1(a_values: Sequence[float] = (1.5, 2, 3, 5, 10, 50), x_steps: int = 10_000,
                    *, tolerance: float = 1e-12) -> Verdict:
    if x_steps < 2:
        raise GraphError("x_steps must be at least 2")
    verdict = Verdict("lemma-a1", {"a_values": list(a_values), "x_steps": x_steps})
    with _Timer(verdict):
        min_gap = math.inf
        for a in a_values:
            if not a > 1:
                raise GraphError(f"lemma-a1 needs a > 1, got {a}")
            x = np.linspace(1.0, a, x_steps)
            f = (x * x + a * a) / (x + a - 2)
            bound = a + 1 + 2 / (a - 1)
            tol = tolerance * _rel(bound)
            verdict.scanned += len(x)
            over = np.nonzero(f > bound + tol)[0]
            for i in over[:5]:
                verdict.fail(Certificate(None, float(f[i]), bound, float(bound - f[i]),
                                         point={"a": a, "x": float(x[i]), "check": "bound"}))
            if abs(f[0] - bound) > tol:
                verdict.fail(Certificate(None, float(f[0]), bound, float(bound - f[0]),
                                         point={"a": a, "x": 1.0, "check": "equality at x=1"}))
            ties = np.nonzero(np.abs(f[1:] - bound) <= tol)[0]
            for i in ties[:5]:
                verdict.fail(Certificate(None, float(f[i + 1]), bound, float(bound - f[i + 1]),
                                         point={"a": a, "x": float(x[i + 1]), "check": "equality only at x=1"}))
            min_gap = min(min_gap, float(np.min(bound - f[1:])))
            # decreasing up to the critical point, increasing after it
            crit = -a + 2 + math.sqrt(2 * (a * a - 2 * a + 2))
            step = (a - 1) / (x_steps - 1)
            diffs = np.diff(f)
            k = int(np.argmin(f))
            shape_ok = bool(np.all(diffs[:k] < 0) and np.all(diffs[k:] > 0))
            if crit >= a:
                near = k == len(x) - 1
            else:
                near = abs(x[k] - crit) <= step
            if not (shape_ok and near):
                verdict.fail(Certificate(None, float(x[k]), crit, float(crit - x[k]),
                                         point={"a": a, "check": "unimodal about critical point"}))
            verdict.stats.setdefault("critical_points", {})[str(a)] = crit
        verdict.stats["min_gap_off_x1"] = min_gap
    return verdict


def _h_chain(n: int):
    """The displayed ordering for order n as (left pair, relation, right pair) triples."""
    seq = [(n - 2, n - 2), (n - 1, n - 3), (n - 2, 1), (n - 1, 2), (n - 1, n - 2), (n - 1, n - 1), (n - 1, 1)]
    rels = [-1, -1, 0, -1, -1, -1, -1]
    out = []
    for a, b, r in zip(seq, seq[1:], rels[1:]):
        out.append((a, r, b))
    return out


def lemma_ee1_exceptions(n: int) -> set[tuple[int, int]]:
    return {(n - 1, 1), (n - 1, 2), (n - 2, 1), (n - 2, n - 2), (n - 1, n - 3), (n - 1, n - 2), (n - 1, n - 1)}


def _check_ee1(n: int, verdict: Verdict) -> int:
    for left, rel, right in _h_chain(n):
        got = compare_h_pairs(left, right)
        if got != rel:
            verdict.fail(Certificate(None, float(h_exact(*left)), float(h_exact(*right)), float(got),
                                     point={"n": n, "left": list(left), "right": list(right), "check": "chain"}))
    exceptions = lemma_ee1_exceptions(n)
    ref = h_exact(n - 2, n - 2)
    num, den = ref.numerator, ref.denominator
    checked = 0
    for di in range(1, n):
        for dj in range(1, di + 1):
            if (di, dj) == (1, 1) or (di, dj) in exceptions:
                continue
            checked += 1
            if (di * di + dj * dj) * den >= num * (di + dj - 2):
                verdict.fail(Certificate(None, float(h_exact(di, dj)), float(ref), float(ref - h_exact(di, dj)),
                                         point={"n": n, "pair": [di, dj], "check": "below h(n-2,n-2)"}))
    return checked


def verify_lemma_ee1(n_lo: int = 9, n_hi: int = 200) -> Verdict:
    if n_lo <= 8:
        raise GraphError(f"lemma-ee1 needs n > 8, got n_lo={n_lo}")
    if n_hi > 1000 or n_hi < n_lo:
        raise GraphError(f"lemma-ee1 needs n_lo <= n_hi <= 1000, got {n_lo}..{n_hi}")
    verdict = Verdict("lemma-ee1", {"n_lo": n_lo, "n_hi": n_hi})
    with _Timer(verdict):
        for n in range(n_lo, n_hi + 1):
            verdict.scanned += _check_ee1(n, verdict)
        lo = n_lo
        verdict.stats["chain_at_n_lo"] = [str(h_exact(*p)) for p in
                                          [(lo - 2, lo - 2), (lo - 1, lo - 3), (lo - 2, 1), (lo - 1, 2),
                                           (lo - 1, lo - 2), (lo - 1, lo - 1), (lo - 1, 1)]]
    return verdict


@dataclass(frozen=True)
class RangeSpec:
    lo: float
    hi: float
    step: float

    def points(self) -> np.ndarray:
        if self.step <= 0 or self.hi < self.lo:
            raise GraphError(f"bad grid {self}")
        return _grid(self.lo, self.hi, self.step)


def mvt_lhs(x, y):
    return (x * x + 2 * x * y - y * y - 4 * x) / ((x + y - 2) ** 1.5 * np.sqrt(x * x + y * y))


def verify_mvt_inequality(x_grid: RangeSpec = RangeSpec(2, 100, 0.25),
                          y_grid: RangeSpec = RangeSpec(1, 300, 0.25)) -> Verdict:
    if x_grid.lo < 2 or y_grid.lo < 1:
        raise GraphError("lemma-mvt grid must satisfy x >= 2 and y >= 1")
    verdict = Verdict("lemma-mvt", {"x": [x_grid.lo, x_grid.hi, x_grid.step],
                                    "y": [y_grid.lo, y_grid.hi, y_grid.step]})
    with _Timer(verdict):
        xs = x_grid.points()
        ys = y_grid.points()
        # the y = 3x boundary of the case split, kept even when off-grid
        extra_y = 3 * xs[(3 * xs >= y_grid.lo) & (3 * xs <= y_grid.hi)]
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        margin = mvt_lhs(X, Y) + 1 / np.sqrt(X)
        extra = mvt_lhs(xs[: len(extra_y)], extra_y) + 1 / np.sqrt(xs[: len(extra_y)])
        verdict.scanned = margin.size + extra.size
        bad = np.argwhere(~(margin > 0))
        for i, j in bad[:10]:
            verdict.fail(Certificate(None, float(mvt_lhs(xs[i], ys[j])), float(-1 / math.sqrt(xs[i])),
                                     float(margin[i, j]), point={"x": float(xs[i]), "y": float(ys[j])}))
        for i in np.nonzero(~(extra > 0))[0][:10]:
            verdict.fail(Certificate(None, float(mvt_lhs(xs[i], extra_y[i])), float(-1 / math.sqrt(xs[i])),
                                     float(extra[i]), point={"x": float(xs[i]), "y": float(extra_y[i])}))
        i, j = np.unravel_index(int(np.argmin(margin)), margin.shape)
        verdict.stats["min_margin"] = float(margin[i, j])
        verdict.stats["min_margin_at"] = [float(xs[i]), float(ys[j])]
        verdict.witnesses.append(Certificate(None, float(mvt_lhs(xs[i], ys[j])), float(-1 / math.sqrt(xs[i])),
                                             float(margin[i, j]), point={"x": float(xs[i]), "y": float(ys[j])}))
    return verdict


def claim1_sides(n: int, d2: int) -> tuple[float, float]:
    r3 = math.sqrt(n - 1 + 2 / (n - 3))
    lhs = math.sqrt(13 / 2) * (d2 - 1) + (n - d2) * r3
    rhs = (n - 3) * math.sqrt(n + 2 / (n - 2)) + r3 + 2
    return lhs, rhs


def _sqrt_h_top(x, n):
    """sqrt(h(x, n-1)) for real x."""
    return np.sqrt(((n - 1) ** 2 + x * x) / (n + x - 3))


def phi(x, n: int):
    return (n - 4) * (_sqrt_h_top(x, n) - math.sqrt(float(h_exact(2, n - 1)))) + \
        (n - x - 3) * math.sqrt(float(h_exact(n - 2, n - 2)))


def psi(x, n: int):
    a = (n - 1) ** 2
    return (a * (n * (7 * n - 30) + 39) - x ** 4) + 4 * x * (n - 3) * (a - x * x) + 6 * a * x * x


def g_bound(x, n: int):
    """The connectivity bound as a function of real k."""
    return (
        x * (x - 1) / 2 * math.sqrt(n + 1 / (n - 2))
        + x * (n - x - 1) * math.sqrt(n - 0.5 + 5 / (2 * (2 * n - 5)))
        + x * _sqrt_h_top(x, n)
        + (n - x - 1) * (n - x - 2) / 2 * math.sqrt(n - 1 + 1 / (n - 3))
    )


def _check_proof(n: int, step: float, verdict: Verdict) -> int:
    count = 0
    if n >= 10:
        for d2 in (3, 4, 5):
            lhs, rhs = claim1_sides(n, d2)
            count += 1
            if not lhs < rhs:
                verdict.fail(Certificate(None, lhs, rhs, rhs - lhs, point={"n": n, "d2": d2, "check": "claim1"}))
        r3 = math.sqrt(n - 1 + 2 / (n - 3))
        side = [
            ("2*sqrt(13/2) < 5.16", 2 * math.sqrt(6.5), 5.16),
            ("5.16 < sqrt(n+2/(n-2))+2", 5.16, math.sqrt(n + 2 / (n - 2)) + 2),
            ("3*sqrt(13/2) < 8", 3 * math.sqrt(6.5), 8.0),
            ("8 < 2*sqrt(n-1+2/(n-3))+2", 8.0, 2 * r3 + 2),
            ("sqrt(n-1+2/(n-3)) < sqrt(n+2/(n-2))", r3, math.sqrt(n + 2 / (n - 2))),
        ]
        for label, lhs, rhs in side:
            count += 1
            if not lhs < rhs:
                verdict.fail(Certificate(None, lhs, rhs, rhs - lhs, point={"n": n, "check": label}))
    ks = np.arange(3, n - 3, dtype=float)
    if ks.size:
        vals = phi(ks, n)
        count += ks.size
        for i in np.nonzero(~(vals > 0))[0]:
            verdict.fail(Certificate(None, float(vals[i]), 0.0, float(vals[i]),
                                     point={"n": n, "x": float(ks[i]), "check": "phi"}))
        xs = _grid(3.0, n - 4.0, step)
        vals = psi(xs, n)
        count += xs.size
        for i in np.nonzero(~(vals > 0))[0][:5]:
            verdict.fail(Certificate(None, float(vals[i]), 0.0, float(vals[i]),
                                     point={"n": n, "x": float(xs[i]), "check": "psi"}))
    xs = _grid(1.0, n - 2.0, step)
    diffs = np.diff(g_bound(xs, n))
    count += xs.size
    for i in np.nonzero(~(diffs > 0))[0][:5]:
        verdict.fail(Certificate(None, float(diffs[i]), 0.0, float(diffs[i]),
                                 point={"n": n, "x": float(xs[i]), "check": "g increasing"}))
    return count


def verify_proof_inequalities(n_lo: int = 7, n_hi: int = 200, *, grid_step: float = 0.01) -> Verdict:
    if n_lo < 7 or n_hi > 500 or n_hi < n_lo:
        raise GraphError(f"proof-inequalities needs 7 <= n_lo <= n_hi <= 500, got {n_lo}..{n_hi}")
    verdict = Verdict("proof-inequalities", {"n_lo": n_lo, "n_hi": n_hi, "grid_step": grid_step})
    with _Timer(verdict):
        for n in range(n_lo, n_hi + 1):
            verdict.scanned += _check_proof(n, grid_step, verdict)
    return verdict


def audit(verdict: Verdict, tolerance: float = TOLERANCE) -> list[str]:
    """Re-derive every graph certificate from its graph6 text alone; return problems found."""
    problems = []
    extremal = None
    p = verdict.params
    if verdict.claim == "unicyclic-max":
        extremal = s_prime(p["n"])
    elif verdict.claim == "unicyclic-min":
        extremal = cycle_graph(p["n"])
    elif verdict.claim == "connectivity-max":
        extremal = complete_graph(p["n"]) if p["k"] == p["n"] - 1 else connectivity_extremal(p["n"], p["k"])
    ext_code = canonical_code(extremal) if extremal is not None else None
    for cert in verdict.witnesses + verdict.counterexamples:
        if cert.graph6 is None or cert.point is not None:
            continue
        g = graph6.decode(cert.graph6)
        value = aso(g)
        if abs(value - cert.value) > tolerance * _rel(value):
            problems.append(f"{cert.graph6}: recorded {cert.value}, recomputed {value}")
        if cert.is_extremal is not None and ext_code is not None:
            if (canonical_code(g) == ext_code) != cert.is_extremal:
                problems.append(f"{cert.graph6}: extremal flag disagrees with canonical code")
    return problems
