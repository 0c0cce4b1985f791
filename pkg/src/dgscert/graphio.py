"""Simple undirected graphs: parsing, serialization and seeded generation.

A graph is stored as its adjacency matrix, a tuple of row tuples with
entries in {0, 1}. Two interchange formats are supported: graph6 (one
graph per line, McKay's format) and a plain whitespace-separated 0/1
matrix, which is what printed examples are transcribed into.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_MAX_ORDER = 64

_G6_HEADER = ">>graph6<<"
_MASK64 = (1 << 64) - 1


class GraphFormatError(ValueError):
    """Raised for unparseable graph text. ``offset`` is the 0-based byte
    position of the offending character, when one can be named."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise ValueError(f"adjacency matrix must be {self.n}x{self.n}")
        for i, row in enumerate(self.adj):
            if row[i] != 0:
                raise ValueError(f"nonzero diagonal entry at vertex {i}")
            for j, a in enumerate(row):
                if a not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) is {a!r}, expected 0 or 1")
                if a != self.adj[j][i]:
                    raise ValueError(f"asymmetric entries at ({i},{j})")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "Graph":
        adj = tuple(tuple(int(a) for a in row) for row in rows)
        return cls(len(adj), adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        m = [[0] * n for _ in range(n)]
        for i, j in edges:
            m[i][j] = m[j][i] = 1
        return cls.from_matrix(m)

    def matrix(self) -> list[list[int]]:
        """A fresh mutable copy of the adjacency matrix."""
        return [list(row) for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for j in range(self.n):
            for i in range(j):
                if self.adj[i][j]:
                    yield i, j

    @property
    def edge_count(self) -> int:
        return sum(map(sum, self.adj)) // 2

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex ``i`` as ``perm[i]``."""
        m = [[0] * self.n for _ in range(self.n)]
        for i, j in self.edges():
            m[perm[i]][perm[j]] = m[perm[j]][perm[i]] = 1
        return Graph.from_matrix(m)


def empty_graph(n: int) -> Graph:
    return Graph.from_matrix([[0] * n for _ in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_matrix([[int(i != j) for j in range(n)] for i in range(n)])


def complement(g: Graph) -> Graph:
    return Graph.from_matrix(
        [[int(i != j) - g.adj[i][j] for j in range(g.n)] for i in range(g.n)]
    )


def _check_order(n: int, max_order: int | None) -> None:
    if max_order is not None and n > max_order:
        raise GraphFormatError(
            f"graph order {n} exceeds the limit of {max_order}; "
            "pass a larger max_order to allow it"
        )


# graph6 -------------------------------------------------------------------

def _upper_bits(g: Graph) -> Iterator[int]:
    # graph6 bit order: column by column over the strict upper triangle.
    for j in range(1, g.n):
        for i in range(j):
            yield g.adj[i][j]


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = list(_upper_bits(g))
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2))
        for k in range(0, len(bits), 6)
    )
    return _encode_order(g.n) + body


def parse_graph6(text: str, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    """Decode a single graph6 line; an optional ``>>graph6<<`` header and
    surrounding whitespace are ignored."""
    line = text.strip()
    base = len(text) - len(text.lstrip())
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        base += len(_G6_HEADER)
    if not line:
        raise GraphFormatError("empty graph6 string", base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"non-printable or out-of-range byte {ch!r}", base + k)

    vals = [ord(ch) - 63 for ch in line]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 8-byte length header", base + len(line))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 4-byte length header", base + len(line))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    if n < 1:
        raise GraphFormatError("graph6 length header encodes zero vertices", base)
    _check_order(n, max_order)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    data = vals[pos:]
    if len(data) < nbytes:
        raise GraphFormatError(
            f"expected {nbytes} data bytes for n={n}, found {len(data)}",
            base + len(line),
        )
    if len(data) > nbytes:
        raise GraphFormatError("trailing garbage after graph data", base + pos + nbytes)
    bits = [(v >> s) & 1 for v in data for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits", base + pos + nbytes - 1)

    m = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                m[i][j] = m[j][i] = 1
            k += 1
    return Graph.from_matrix(m)


# plain 0/1 matrix -----------------------------------------------------------

def parse_adjacency(text: str, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    """Parse newline-separated rows of whitespace-separated 0/1 tokens."""
    rows = []
    offset = 0
    for line in text.splitlines(keepends=True):
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            if tok not in ("0", "1"):
                raise GraphFormatError(f"token {tok!r} is not 0 or 1", offset + col)
            tokens.append(int(tok))
            col += len(tok)
        if tokens:
            rows.append(tokens)
        offset += len(line)
    if not rows:
        raise GraphFormatError("no matrix rows found", 0)
    n = len(rows)
    for r, row in enumerate(rows):
        if len(row) != n:
            raise GraphFormatError(f"matrix is not square: row {r} has {len(row)} entries, expected {n}")
    _check_order(n, max_order)
    for i in range(n):
        if rows[i][i]:
            raise GraphFormatError(f"nonzero diagonal entry at row {i}")
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise GraphFormatError(f"matrix is not symmetric at ({i},{j})")
    return Graph.from_matrix(rows)


def format_adjacency(g: Graph) -> str:
    return "\n".join(" ".join(map(str, row)) for row in g.adj) + "\n"


def parse_graph(text: str, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    """Accept either format: a single non-empty line that is not a 0/1 row
    is taken as graph6, anything else as a plain matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input", 0)
    first = lines[0].strip()
    if len(lines) == 1 and (first.startswith(_G6_HEADER) or set(first) - set("01 \t")):
        return parse_graph6(text, max_order)
    return parse_adjacency(text, max_order)


# seeded G(n, 1/2) ---------------------------------------------------------

def _stream_bits(seed: int, index: int, count: int) -> Iterator[int]:
    """Counter-mode bit stream keyed by (seed, index); a pure function of its
    arguments so graphs can be generated in any order or in parallel."""
    produced = 0
    block = 0
    while produced < count:
        digest = hashlib.blake2b(
            struct.pack("<QQQ", seed & _MASK64, index & _MASK64, block),
            digest_size=64,
            person=b"dgscert-gnp",
        ).digest()
        for byte in digest:
            for s in range(8):
                if produced == count:
                    return
                yield (byte >> s) & 1
                produced += 1
        block += 1


def random_gnp_half(n: int, seed: int, index: int = 0) -> Graph:
    """Sample G(n, 1/2): graph number ``index`` of the stream ``seed``."""
    if n < 1:
        raise ValueError("n must be positive")
    m = [[0] * n for _ in range(n)]
    bits = _stream_bits(seed, index, n * (n - 1) // 2)
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                m[i][j] = m[j][i] = 1
    return Graph(n, tuple(map(tuple, m)))
