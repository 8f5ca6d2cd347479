"""Serialisation of verdicts as JSON, CSV or aligned text."""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Any, Sequence

from .verify import Verdict

FORMATS = ("text", "json", "csv")


def _compact(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render(verdicts: Sequence[Verdict], fmt: str = "text", config: dict | None = None,
           timing: bool = False) -> str:
    if fmt == "json":
        body = [v.to_dict(timing) for v in verdicts]
        doc: Any = body if config is None else {"config": config, "verdicts": body}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if config is not None:
            buf.write(f"# config: {_compact(config)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "params", "pass", "scanned", "witnesses", "counterexamples", "stats"])
        for v in verdicts:
            w.writerow([v.claim, _compact(v.params), "true" if v.passed else "false", v.scanned,
                        len(v.witnesses), len(v.counterexamples), _compact(v.stats)])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        if config is not None:
            lines.append(f"config: {_compact(config)}")
        for v in verdicts:
            params = " ".join(f"{k}={_compact(val)}" for k, val in v.params.items())
            line = f"{'PASS' if v.passed else 'FAIL'}  {v.claim:<21} {params:<28} scanned={v.scanned}"
            if timing and v.runtime_ms is not None:
                line += f"  {v.runtime_ms:.1f} ms"
            lines.append(line)
            for c in v.witnesses[:3]:
                d = c.to_dict()
                lines.append("      witness " + " ".join(f"{k}={_compact(val)}" for k, val in d.items()))
            for c in v.counterexamples:
                d = c.to_dict()
                lines.append("      COUNTEREXAMPLE " + " ".join(f"{k}={_compact(val)}" for k, val in d.items()))
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_report(verdicts: Sequence[Verdict], fmt: str = "text", destination=None,
                 config: dict | None = None, timing: bool = False) -> None:
    text = render(verdicts, fmt, config, timing)
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
