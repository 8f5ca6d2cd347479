"""Isomorph-free generation of small connected and unicyclic graphs.

Both generators extend graphs on ``n - 1`` vertices by one new vertex and keep
a child only when the new vertex lies in the automorphism orbit of the
child's canonical deletion vertex (McKay's canonical augmentation).  Children
of one parent that coincide under the parent's automorphisms are removed by
comparing canonical forms.  Emitted graphs are canonical forms, sorted by
their graph6 text.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from . import graph6
from .canon import canonical_labeling
from .connectivity import edge_connectivity, vertex_connectivity
from .graph import Graph, GraphError, _bits, is_connected, is_connected_without

CONNECTED_MAX = 9
CONNECTED_SLOW_MAX = 10
UNICYCLIC_MAX = 12


@dataclass
class GraphStream:
    """Pairwise non-isomorphic graphs in a deterministic order."""

    name: str
    n: int
    graphs: list[Graph] = field(default_factory=list)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]

    def partition(self, parts: int) -> list["GraphStream"]:
        """Split into ``parts`` contiguous sub-ranges covering the stream."""
        if parts < 1:
            raise ValueError("parts must be positive")
        size = len(self.graphs)
        bounds = [size * i // parts for i in range(parts + 1)]
        return [
            GraphStream(f"{self.name}[{i}/{parts}]", self.n, self.graphs[bounds[i]:bounds[i + 1]])
            for i in range(parts)
        ]

    def header(self) -> str:
        return f">>class={self.name};n={self.n};count={len(self.graphs)}"


def _sorted_unique(graphs: Iterable[Graph]) -> list[Graph]:
    keyed = {graph6.encode(g): g for g in graphs}
    return [keyed[k] for k in sorted(keyed)]


def _connected_children(parent: Graph) -> list[Graph]:
    """Children of ``parent`` accepted by the canonical deletion test."""
    p = parent.n
    n = p + 1
    v = p
    vbit = 1 << v
    prow = parent.rows
    pdeg = [r.bit_count() for r in prow]
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for s in range(1, 1 << p):
        d = s.bit_count()
        # vertices whose child degree is <= d are the only possible rivals of v
        rivals = []
        lower = False
        for u in range(p):
            du = pdeg[u] + (s >> u & 1)
            if du <= d:
                rivals.append((du, u))
                if du < d:
                    lower = True
        rows = None
        if rivals:
            rows = [r | vbit if s >> u & 1 else r for u, r in enumerate(prow)]
            rows.append(s)
            if lower:
                reject = False
                for du, u in rivals:
                    if du < d and is_connected_without(rows, n, u):
                        reject = True
                        break
                if reject:
                    continue
            # second invariant: neighbour degree sum; smaller wins
            vkey = sum(pdeg[u] + 1 for u in _bits(s))
            cands = []
            reject = False
            for du, u in rivals:
                if du != d:
                    continue
                ukey = sum(rows[x].bit_count() for x in _bits(rows[u]))
                if ukey > vkey or not is_connected_without(rows, n, u):
                    continue
                if ukey < vkey:
                    reject = True
                    break
                cands.append(u)
            if reject:
                continue
        else:
            cands = []
        if rows is None:
            rows = [r | vbit if s >> u & 1 else r for u, r in enumerate(prow)]
            rows.append(s)
        child = Graph(n, tuple(rows))
        lab = canonical_labeling(child)
        if cands:
            pos = {u: i for i, u in enumerate(lab.order)}
            w = min(cands + [v], key=pos.__getitem__)
            if w != v:
                orb = lab.orbits(n)
                if orb[w] != orb[v]:
                    continue
        if lab.rows in seen:
            continue
        seen.add(lab.rows)
        out.append(Graph(n, lab.rows))
    return out


def _unicyclic_children(parent: Graph) -> list[Graph]:
    p = parent.n
    n = p + 1
    v = p
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for a in range(p):
        rows = list(parent.rows)
        rows[a] |= 1 << v
        rows.append(1 << a)
        child = Graph(n, tuple(rows))
        lab = canonical_labeling(child)
        leaves = [u for u in lab.order if rows[u].bit_count() == 1]
        w = leaves[0]
        if w != v:
            orb = lab.orbits(n)
            if orb[w] != orb[v]:
                continue
        if lab.rows in seen:
            continue
        seen.add(lab.rows)
        out.append(Graph(n, lab.rows))
    return out


def _expand(args) -> list[Graph]:
    kind, parents = args
    fn = _connected_children if kind == "connected" else _unicyclic_children
    out: list[Graph] = []
    for g in parents:
        out.extend(fn(g))
    return out


def _grow(kind: str, parents: list[Graph], jobs: int, parts: int = 1, index: int | None = None) -> list[Graph]:
    if index is not None:
        size = len(parents)
        parents = parents[size * index // parts: size * (index + 1) // parts]
    if jobs <= 1 or len(parents) < 2 * jobs:
        return _expand((kind, parents))
    chunks = [parents[i::jobs * 4] for i in range(jobs * 4)]
    out: list[Graph] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_expand, [(kind, c) for c in chunks]):
            out.extend(part)
    return out


def _cache_path(cache_dir: str | os.PathLike | None, name: str, n: int) -> Path | None:
    if cache_dir is None:
        cache_dir = os.environ.get("EIL_CACHE_DIR")
    if not cache_dir:
        return None
    return Path(cache_dir) / f"{name}_n{n}.g6"


def load_stream(path: Path) -> GraphStream:
    with open(path, encoding="ascii") as fh:
        head = fh.readline().strip()
        if not head.startswith(">>class="):
            raise GraphError(f"{path}: missing stream header")
        fields = dict(item.split("=", 1) for item in head[2:].split(";"))
        graphs = [graph6.decode(line) for line in fh if line.strip()]
    if len(graphs) != int(fields["count"]):
        raise GraphError(f"{path}: header count {fields['count']} but {len(graphs)} graphs")
    return GraphStream(fields["class"], int(fields["n"]), graphs)


def save_stream(stream: GraphStream, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    graph6.write_lines(tmp, stream.graphs, header=stream.header())
    tmp.replace(path)


def _cached(name: str, n: int, cache_dir, build: Callable[[], GraphStream]) -> GraphStream:
    path = _cache_path(cache_dir, name, n)
    if path is not None and path.exists():
        return load_stream(path)
    stream = build()
    if path is not None:
        save_stream(stream, path)
    return stream


def _check_range(n: int, lo: int, hi: int, slow_hi: int, allow_slow: bool) -> None:
    cap = slow_hi if allow_slow else hi
    if not lo <= n <= cap:
        hint = "" if allow_slow or n > slow_hi else " (pass allow_slow for larger n)"
        raise GraphError(f"n={n} outside supported range {lo}..{cap}{hint}")


def _connected_level(n: int, jobs: int, parts: int = 1, index: int | None = None) -> list[Graph]:
    level = [Graph(1, (0,))]
    for k in range(2, n + 1):
        last = k == n
        level = _grow("connected", level, jobs, parts if last else 1, index if last else None)
        level = _sorted_unique(level)
    return level


def connected_graphs(
    n: int,
    *,
    jobs: int = 1,
    parts: int = 1,
    index: int | None = None,
    cache_dir=None,
    allow_slow: bool = False,
) -> GraphStream:
    """All connected graphs of order ``n``, one per isomorphism class.

    With ``index`` given, only the children of the ``index``-th of ``parts``
    slices of the order ``n - 1`` parents are produced.
    """
    _check_range(n, 3, CONNECTED_MAX, CONNECTED_SLOW_MAX, allow_slow)
    if index is not None:
        return GraphStream(f"connected[{index}/{parts}]", n, _connected_level(n, jobs, parts, index))
    return _cached("connected", n, cache_dir, lambda: GraphStream("connected", n, _connected_level(n, jobs)))


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _unicyclic_level(n: int, jobs: int) -> list[Graph]:
    level = [Graph(3, canonical_labeling(_cycle(3)).rows)]
    for k in range(4, n + 1):
        grown = _grow("unicyclic", level, jobs)
        grown.append(Graph(k, canonical_labeling(_cycle(k)).rows))
        level = _sorted_unique(grown)
    return level


def unicyclic_graphs(n: int, *, jobs: int = 1, cache_dir=None, allow_slow: bool = False) -> GraphStream:
    _check_range(n, 3, UNICYCLIC_MAX, UNICYCLIC_MAX, allow_slow)
    return _cached("unicyclic", n, cache_dir, lambda: GraphStream("unicyclic", n, _unicyclic_level(n, jobs)))


def filter_by_connectivity(stream: GraphStream, mode: str, k: int) -> GraphStream:
    if mode == "vertex":
        fn = vertex_connectivity
    elif mode == "edge":
        fn = edge_connectivity
    else:
        raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")
    kept = [g for g in stream if fn(g) == k]
    return GraphStream(f"{stream.name}|{mode}={k}", stream.n, kept)


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on 0..n-1 in Prüfer-sequence order."""
    if not 2 <= n <= 10:
        raise GraphError(f"n={n} outside supported range 2..10")
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def random_connected_graph(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree (uniform over labeled trees) plus uniform extra edges."""
    if n < 1 or n > 62 or not n - 1 <= m <= n * (n - 1) // 2:
        raise GraphError(f"no connected graph with n={n}, m={m}")
    rng = random.Random(seed)
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        tree = Graph.from_edges(2, [(0, 1)])
    else:
        tree = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
    extra = [(u, v) for u, v in itertools.combinations(range(n), 2) if not tree.has_edge(u, v)]
    chosen = rng.sample(extra, m - (n - 1))
    return Graph.from_edges(n, list(tree.edges()) + chosen)
