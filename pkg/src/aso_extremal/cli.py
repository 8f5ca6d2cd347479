"""Command-line entry point: ``aso-extremal compute|construct|enumerate|verify``.

Exit status: 0 when every verdict passes, 1 when any fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from . import graph6
from .connectivity import edge_connectivity, vertex_connectivity
from .enumerate import GraphStream, connected_graphs, filter_by_connectivity, unicyclic_graphs
from .families import FAMILIES, FamilySpec, connectivity_max_bound, construct, unicyclic_max_bound
from .graph import GraphError, degree_profile, is_connected
from .index import aso, so
from .report import FORMATS, render
from .verify import (
    CLAIMS,
    RangeSpec,
    Verdict,
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

log = logging.getLogger("aso_extremal")


@dataclass
class RunConfig:
    command: str
    claim: str | None = None
    n: int | None = None
    n_lo: int | None = None
    n_hi: int | None = None
    n_max: int | None = None
    k: int | None = None
    t: int | None = None
    mode: str | None = None
    family: str | None = None
    graph_class: str | None = None
    a_values: list[float] | None = None
    x_steps: int | None = None
    x_max: float | None = None
    y_max: float | None = None
    tolerance: float = 1e-9
    window: float = 1e-6
    grid_step: float | None = None
    trials: int | None = None
    seed: int = 0
    format: str = "text"
    cache_dir: str | None = None
    allow_slow: bool = False
    timing: bool = False
    jobs: int = 1
    inputs: list[str] = field(default_factory=list)

    def echo(self) -> dict[str, Any]:
        # jobs changes scheduling only, never results
        d = asdict(self)
        d.pop("jobs")
        return d


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cache-dir", default=os.environ.get("EIL_CACHE_DIR"))
    common.add_argument("--allow-slow", action="store_true")
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--window", type=float, default=1e-6)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="include runtimes (reports stop being byte-stable)")

    p = _Parser(prog="aso-extremal", description="ASO index computation and extremal-graph verification")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", parents=[common], help="indices of given graphs")
    c.add_argument("--graph6", action="append", default=[])
    c.add_argument("--input", help="file of graph6 lines")

    c = sub.add_parser("construct", parents=[common], help="build a named family member")
    c.add_argument("--family", required=True, choices=FAMILIES)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--t", type=int)

    c = sub.add_parser("enumerate", parents=[common], help="isomorph-free graph classes as graph6")
    c.add_argument("--class", dest="graph_class", choices=("connected", "unicyclic"), default="connected")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--mode", choices=("vertex", "edge"))
    c.add_argument("--k", type=int)

    c = sub.add_parser("verify", parents=[common], help="check a claim")
    c.add_argument("claim", choices=CLAIMS + ("all",))
    c.add_argument("--n", type=int)
    c.add_argument("--n-lo", type=int)
    c.add_argument("--n-hi", type=int)
    c.add_argument("--n-max", type=int, default=8)
    c.add_argument("--k", type=int)
    c.add_argument("--mode", choices=("vertex", "edge", "both"), default="both")
    c.add_argument("--a", dest="a_values", type=float, nargs="+")
    c.add_argument("--x-steps", type=int)
    c.add_argument("--x-max", type=float)
    c.add_argument("--y-max", type=float)
    c.add_argument("--grid-step", type=float)
    c.add_argument("--trials", type=int)
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _graph_summary(text: str) -> dict[str, Any]:
    g = graph6.decode(text)
    row: dict[str, Any] = {"graph6": graph6.encode(g), "n": g.n, "m": g.m}
    row["aso"] = aso(g)
    row["so"] = so(g)
    if g.n:
        prof = degree_profile(g)
        row["degrees"] = list(prof.sequence)
        row["max_degree"] = prof.max_degree
        row["second_max_degree"] = prof.second_max_degree
    if g.n >= 2 and is_connected(g):
        row["vertex_connectivity"] = vertex_connectivity(g)
        row["edge_connectivity"] = edge_connectivity(g)
    return row


def _records(rows: list[dict[str, Any]], fmt: str, config: dict) -> str:
    if fmt == "json":
        return json.dumps({"config": config, "results": rows}, indent=2) + "\n"
    keys = []
    for r in rows:
        keys.extend(k for k in r if k not in keys)
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        buf.write(f"# config: {json.dumps(config, sort_keys=True, separators=(',', ':'))}\n")
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in r.items()})
        return buf.getvalue()
    lines = [f"config: {json.dumps(config, sort_keys=True, separators=(',', ':'))}"]
    for r in rows:
        lines.append("  ".join(f"{k}={v}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


def _cmd_compute(args, cfg: RunConfig) -> int:
    texts = list(args.graph6)
    if args.input:
        with open(args.input, encoding="ascii") as fh:
            texts.extend(line.strip() for line in fh if line.strip() and not line.startswith(">>"))
    if not texts:
        raise UsageError("compute needs --graph6 or --input")
    cfg.inputs = texts
    rows = [_graph_summary(t) for t in texts]
    _emit(_records(rows, args.format, cfg.echo()), args.out)
    return 0


def _cmd_construct(args, cfg: RunConfig) -> int:
    g = construct(FamilySpec(args.family, args.n, args.k, args.t))
    row = _graph_summary(graph6.encode(g))
    row["family"] = args.family
    if args.family == "s_prime":
        row["bound"] = unicyclic_max_bound(args.n)
    elif args.family == "connectivity_extremal":
        row["bound"] = connectivity_max_bound(args.n, args.k)
    _emit(_records([row], args.format, cfg.echo()), args.out)
    return 0


def _cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.graph_class == "connected":
        stream = connected_graphs(args.n, jobs=args.jobs, cache_dir=args.cache_dir, allow_slow=args.allow_slow)
    else:
        stream = unicyclic_graphs(args.n, jobs=args.jobs, cache_dir=args.cache_dir)
    if args.k is not None:
        stream = filter_by_connectivity(stream, args.mode or "vertex", args.k)
    lines = [stream.header()] + [graph6.encode(g) for g in stream]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _n_range(args, lo_default: int, hi_default: int) -> range:
    if args.n is not None:
        return range(args.n, args.n + 1)
    lo = args.n_lo if args.n_lo is not None else lo_default
    hi = args.n_hi if args.n_hi is not None else hi_default
    return range(lo, hi + 1)


def run_claim(claim: str, args, cfg: RunConfig) -> list[Verdict]:
    kw = dict(tolerance=args.tolerance, window=args.window, jobs=args.jobs, cache_dir=args.cache_dir)
    out: list[Verdict] = []
    if claim == "unicyclic-max":
        out += [verify_unicyclic_max(n, **kw) for n in _n_range(args, 4, 9)]
    elif claim == "unicyclic-min":
        out += [verify_unicyclic_min(n, **kw) for n in _n_range(args, 3, 9)]
    elif claim == "edge-deletion":
        kw.pop("window")
        out += [verify_edge_deletion_exhaustive(n, **kw) for n in _n_range(args, 3, 7)]
    elif claim == "edge-deletion-random":
        trials = 1000 if args.trials is None else args.trials
        cfg.trials = trials
        out += [verify_edge_deletion_random(n, trials, args.seed, tolerance=args.tolerance)
                for n in _n_range(args, 40, 40)]
    elif claim == "connectivity-max":
        modes = ("vertex", "edge") if args.mode == "both" else (args.mode,)
        for n in _n_range(args, 4, 8):
            ks = [args.k] if args.k is not None else range(1, n)
            for mode in modes:
                for k in ks:
                    out.append(verify_connectivity_max(n, k, mode, allow_slow=args.allow_slow, **kw))
    elif claim == "lemma-a1":
        a_values = args.a_values or [1.5, 2, 3, 5, 10, 50]
        out.append(verify_lemma_a1(a_values, args.x_steps or 10_000))
    elif claim == "lemma-ee1":
        out += [verify_lemma_ee1(n, n) for n in _n_range(args, 9, 200)]
    elif claim == "lemma-mvt":
        step = args.grid_step or 0.25
        out.append(verify_mvt_inequality(RangeSpec(2, args.x_max or 100, step),
                                         RangeSpec(1, args.y_max or 300, step)))
    elif claim == "proof-inequalities":
        step = args.grid_step or 0.01
        out += [verify_proof_inequalities(n, n, grid_step=step) for n in _n_range(args, 7, 200)]
    return out


def _cmd_verify(args, cfg: RunConfig) -> int:
    if args.claim == "all":
        if args.n is not None or args.n_lo is not None or args.n_hi is not None:
            raise UsageError("verify all takes --n-max, not --n/--n-lo/--n-hi")
        n_max = args.n_max
        verdicts: list[Verdict] = []
        plan = [
            ("unicyclic-max", 4, min(n_max, 12)),
            ("unicyclic-min", 3, min(n_max, 12)),
            ("edge-deletion", 3, min(n_max, 7)),
            ("edge-deletion-random", 40, 40),
            ("connectivity-max", 4, min(n_max, 8)),
            ("lemma-a1", 0, 0),
            ("lemma-ee1", 9, 200),
            ("lemma-mvt", 0, 0),
            ("proof-inequalities", 7, 200),
        ]
        for claim, lo, hi in plan:
            sub = argparse.Namespace(**vars(args))
            sub.n_lo, sub.n_hi = lo, hi
            sub.k = None
            log.info("verify %s", claim)
            verdicts += run_claim(claim, sub, cfg)
    else:
        verdicts = run_claim(args.claim, args, cfg)
    _emit(render(verdicts, args.format, cfg.echo(), timing=args.timing), args.out)
    return 0 if all(v.passed for v in verdicts) else 1


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    cfg = RunConfig(command=args.command, format=args.format, cache_dir=args.cache_dir,
                    allow_slow=args.allow_slow, tolerance=args.tolerance, window=args.window,
                    seed=args.seed, timing=args.timing, jobs=args.jobs)
    for name in ("claim", "n", "n_lo", "n_hi", "k", "t", "family", "graph_class", "a_values",
                 "x_steps", "x_max", "y_max", "grid_step", "trials"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if args.command == "verify":
        cfg.mode = args.mode
        cfg.n_max = args.n_max if args.claim == "all" else None
    elif args.command == "enumerate":
        cfg.mode = args.mode
    if args.jobs < 1:
        print("usage error: --jobs must be positive", file=sys.stderr)
        return 2
    handlers = {"compute": _cmd_compute, "construct": _cmd_construct,
                "enumerate": _cmd_enumerate, "verify": _cmd_verify}
    try:
        return handlers[args.command](args, cfg)
    except (GraphError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
