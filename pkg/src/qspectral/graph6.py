"""graph6 codec, short form only (orders 1..62).

One size byte ``n + 63`` followed by the upper-triangle adjacency bits in
column order, packed big-endian into 6-bit groups offset by 63 and
zero-padded at the end.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

MAX_ORDER = 62
HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def to_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise Graph6Error(f"order {g.n} exceeds the short-form limit {MAX_ORDER}")
    # first pair is the most significant bit of the stream
    width = g.n * (g.n - 1) // 2
    bits = format(g.mask, f"0{width}b")[::-1] if width else ""
    bits += "0" * (-width % 6)
    return chr(g.n + 63) + "".join(chr(int(bits[k : k + 6], 2) + 63) for k in range(0, len(bits), 6))


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 input") from exc
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    if not text:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at position {pos} outside 63..126")
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6Error("long-form size (n > 62) is not supported")
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    payload = text[1:]
    need = _payload_len(n)
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} bytes for n={n}, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing bytes: expected {need} payload bytes for n={n}, got {len(payload)}")
    width = n * (n - 1) // 2
    bits = "".join(format(ord(ch) - 63, "06b") for ch in payload)[:width]
    return Graph.from_mask(n, int(bits[::-1], 2) if width else 0)


def read_graph6_lines(lines: Iterable[str | bytes]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Decode a newline-separated stream.

    Yields ``(line_number, graph_or_error)`` for every non-blank line so the
    caller decides whether a malformed line is fatal.
    """
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        if not line.strip():
            continue
        try:
            yield lineno, from_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
