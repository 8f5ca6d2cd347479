"""graph6 encoding restricted to orders 0..62 (single-byte order prefix)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph, GraphError


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise GraphError(f"graph6 order {n} exceeds {MAX_ORDER}")
    rows = g.rows
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    for c, ch in zip(codes, s):
        if not 0 <= c <= 63:
            raise GraphError(f"malformed graph6 byte {ch!r}")
    n = codes[0]
    if n > MAX_ORDER:
        raise GraphError(f"graph6 order {n} exceeds {MAX_ORDER} (multi-byte orders unsupported)")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(codes) - 1 != ngroups:
        raise GraphError(f"graph6 length mismatch: expected {ngroups} data bytes for n={n}, got {len(codes) - 1}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if codes[1 + k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if ngroups and nbits % 6 and codes[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphError("graph6 padding bits are not zero")
    return Graph(n, tuple(rows))


def write_lines(path: Path, graphs: Iterable[Graph], header: str | None = None) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        if header is not None:
            fh.write(header + "\n")
        for g in graphs:
            fh.write(encode(g) + "\n")
            count += 1
    return count


def read_lines(path: Path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or (line.startswith(">>") and not line.startswith(">>graph6<<")):
                continue
            yield decode(line)
