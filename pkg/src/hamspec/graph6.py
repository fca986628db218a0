"""graph6 reader/writer for graphs of up to 64 vertices.

Only the undirected format is handled.  Writing uses the one-byte size
prefix (``n <= 62``); reading also accepts the four-byte prefix
``~ b1 b2 b3`` so that 63- and 64-vertex graphs can be loaded.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import MalformedCharacterError, PaddingError, TruncationError, UnsupportedSizeError
from .graph import MAX_VERTICES, Graph, vertex_pairs

HEADER = ">>graph6<<"
SHORT_FORM_MAX = 62


def _size_error(n: int) -> UnsupportedSizeError:
    return UnsupportedSizeError(f"graphs with {n} vertices are not supported (limit {MAX_VERTICES})")


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise TruncationError("empty graph6 string")
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise MalformedCharacterError(
                f"malformed graph6: character {ch!r} at offset {pos} is outside the graph6 range 63..126"
            )
    data = line.encode("ascii")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise UnsupportedSizeError("the eight-byte size prefix is not supported")
        if len(data) < 4:
            raise TruncationError("four-byte size prefix is incomplete")
        n, body = _six_bit_value(data[1:4]), data[4:]
    if n == 0:
        raise MalformedCharacterError("malformed graph6: size byte '?' encodes n=0, graphs need at least one vertex")
    if n > MAX_VERTICES:
        raise _size_error(n)

    pairs = vertex_pairs(n)
    need = -(-len(pairs) // 6)
    if len(body) != need:
        raise TruncationError(
            f"expected {need} data bytes for n={n}, found {len(body)}"
        )
    bits = 0
    for byte in body:
        bits = bits << 6 | (byte - 63)
    pad = need * 6 - len(pairs)
    if bits & ((1 << pad) - 1):
        raise PaddingError("nonzero padding bits after the last edge bit")
    bits >>= pad

    rows = [0] * n
    top = len(pairs) - 1
    for k, (i, j) in enumerate(pairs):
        if bits >> (top - k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


def _six_bit_value(chunk: bytes) -> int:
    value = 0
    for byte in chunk:
        value = value << 6 | (byte - 63)
    return value


def encode_graph6(g: Graph) -> str:
    if g.n > SHORT_FORM_MAX:
        raise UnsupportedSizeError(
            f"encoding supports n <= {SHORT_FORM_MAX}; got n={g.n}"
        )
    pairs = vertex_pairs(g.n)
    bits = 0
    for i, j in pairs:
        bits = bits << 1 | (g.adj[i] >> j & 1)
    nbytes = -(-len(pairs) // 6)
    bits <<= nbytes * 6 - len(pairs)
    out = [chr(63 + g.n)]
    for k in range(nbytes - 1, -1, -1):
        out.append(chr(63 + (bits >> (6 * k) & 63)))
    return "".join(out)


def iter_graph6_records(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line_number, text, graph)``; blank lines and the header are skipped.

    Decoding errors are re-raised with the 1-based line number prepended.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if not line.strip():
            continue
        try:
            yield lineno, line, parse_graph6(line)
        except (MalformedCharacterError, TruncationError, PaddingError, UnsupportedSizeError) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    for lineno, _, g in iter_graph6_records(lines):
        yield lineno, g


def read_graph6_file(path: str) -> list[Graph]:
    with open(path, "r", encoding="ascii", errors="replace", newline="") as fh:
        return [g for _, g in iter_graph6_lines(fh)]


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode_graph6(g))
        fh.write("\n")
