"""graph6 encoding for graphs with at most 62 vertices."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import GraphInputError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 62


def encode(G: Graph) -> str:
    if G.n > MAX_N:
        raise GraphInputError(f"graph6 serialization supports n <= {MAX_N}, got n = {G.n}")
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphInputError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphInputError(f"invalid graph6 character in {s!r}")
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise GraphInputError(f"graph6 strings with n > {MAX_N} are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphInputError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n = {n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def iter_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)``, skipping blank lines and a bare header line.

    Raises ``GraphInputError`` naming the offending line number.
    """
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s == HEADER:
            continue
        try:
            yield lineno, decode(s)
        except GraphInputError as exc:
            raise GraphInputError(f"line {lineno}: {exc}") from exc


def read_file(path: str | Path) -> list[Graph]:
    with open(path) as fh:
        return [g for _, g in iter_lines(fh)]


def write_file(path: str | Path, graphs: Iterable[Graph], header: bool = False) -> None:
    with open(path, "w") as fh:
        if header:
            fh.write(HEADER)
        for g in graphs:
            fh.write(encode(g) + "\n")
