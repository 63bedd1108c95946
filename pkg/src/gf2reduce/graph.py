"""Simple graphs with loops, viewed as signed graphs.

A looped vertex is a positive vertex, a loopless one is negative.  Vertices
are identified by their label string; matrix indices are an internal detail
fixed by the order of ``Graph.labels``.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .gf2 import BitMatrix, MatrixFormatError, _packed_rank, _submatrix, parse_bit_rows

__all__ = [
    "Graph",
    "GraphError",
    "UnknownVertexError",
    "LegalStringError",
    "from_signed_edges",
    "from_legal_string",
    "induced_subgraph",
    "rank_of",
    "nullity_of",
    "format_graph",
    "parse_graph",
    "parse_graphs",
]


class GraphError(ValueError):
    pass


class UnknownVertexError(GraphError):
    def __init__(self, label: str):
        super().__init__(f"unknown vertex {label!r}")
        self.label = label


class LegalStringError(GraphError):
    def __init__(self, letter: str, count: int):
        super().__init__(f"letter {letter!r} occurs {count} times, expected exactly 2")
        self.letter = letter
        self.count = count


class Graph:
    """Labels plus a symmetric adjacency matrix over GF(2).

    The diagonal marks loops.  Two graphs are equal when their label
    sequences and adjacency matrices are equal.
    """

    __slots__ = ("_labels", "_adj", "_index", "_hash")

    def __init__(self, labels: Sequence[str], adj: BitMatrix):
        labels = tuple(str(v) for v in labels)
        if len(set(labels)) != len(labels):
            seen = set()
            dup = next(v for v in labels if v in seen or seen.add(v))
            raise GraphError(f"duplicate vertex {dup!r}")
        if adj.shape != (len(labels), len(labels)):
            raise GraphError(f"adjacency shape {adj.shape} does not match {len(labels)} labels")
        if not adj.is_symmetric():
            raise GraphError("adjacency matrix is not symmetric")
        self._set(labels, adj)

    def _set(self, labels: tuple[str, ...], adj: BitMatrix) -> None:
        self._labels = labels
        self._adj = adj
        self._index = None
        self._hash = None

    @classmethod
    def _make(cls, labels: tuple[str, ...], adj: BitMatrix) -> "Graph":
        g = object.__new__(cls)
        g._set(labels, adj)
        return g

    @classmethod
    def empty(cls) -> "Graph":
        return cls._make((), BitMatrix.zeros(0, 0))

    @classmethod
    def from_matrix(cls, adj, labels: Optional[Sequence[str]] = None) -> "Graph":
        """Wrap an adjacency matrix; labels default to ``1..n``."""
        if not isinstance(adj, BitMatrix):
            adj = BitMatrix(adj)
        if labels is None:
            labels = [str(i + 1) for i in range(adj.n_rows)]
        return cls(labels, adj)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def adj(self) -> BitMatrix:
        return self._adj

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self.index

    def __iter__(self):
        return iter(self._labels)

    @property
    def index(self) -> dict[str, int]:
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self._labels)}
        return self._index

    def indices(self, vertices: Iterable[str]) -> list[int]:
        """Matrix indices of ``vertices``, sorted into graph order."""
        idx = self.index
        try:
            return sorted({idx[v] for v in vertices})
        except KeyError as exc:
            raise UnknownVertexError(exc.args[0]) from None

    def mask(self, vertices: Iterable[str]) -> int:
        m = 0
        for i in self.indices(vertices):
            m |= 1 << i
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self._labels) if (mask >> i) & 1)

    def has_loop(self, v: str) -> bool:
        i = self.indices([v])[0]
        return bool((self._adj.packed_rows[i] >> i) & 1)

    def sign(self, v: str) -> str:
        return "+" if self.has_loop(v) else "-"

    def adjacent(self, u: str, v: str) -> bool:
        i, j = self.index.get(u), self.index.get(v)
        if i is None:
            raise UnknownVertexError(u)
        if j is None:
            raise UnknownVertexError(v)
        return bool((self._adj.packed_rows[i] >> j) & 1)

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbourhood of ``v``, excluding ``v`` itself."""
        i = self.indices([v])[0]
        return self.labels_of(self._adj.packed_rows[i] & ~(1 << i))

    def edges(self) -> list[tuple[str, str]]:
        """Unordered non-loop edges in index order."""
        rows = self._adj.packed_rows
        out = []
        for i, u in enumerate(self._labels):
            for j in range(i + 1, len(self._labels)):
                if (rows[i] >> j) & 1:
                    out.append((u, self._labels[j]))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._labels, self._adj))
        return self._hash

    def __repr__(self) -> str:
        rows = ["".join(map(str, r)) for r in self._adj.tolist()]
        return f"Graph({list(self._labels)!r}, {rows!r})"


def from_signed_edges(vertices: Iterable[tuple[str, str]], edges: Iterable[tuple[str, str]]) -> Graph:
    """Build from ``(name, sign)`` pairs with sign ``'+'`` or ``'-'`` and loop-free edges."""
    labels: list[str] = []
    signs: list[str] = []
    for name, sign in vertices:
        if sign not in ("+", "-"):
            raise GraphError(f"sign of {name!r} must be '+' or '-', got {sign!r}")
        labels.append(str(name))
        signs.append(sign)
    if len(set(labels)) != len(labels):
        seen: set[str] = set()
        dup = next(v for v in labels if v in seen or seen.add(v))
        raise GraphError(f"duplicate vertex {dup!r}")
    idx = {v: i for i, v in enumerate(labels)}
    rows = [(1 << i) if s == "+" else 0 for i, s in enumerate(signs)]
    for u, v in edges:
        if u not in idx:
            raise UnknownVertexError(u)
        if v not in idx:
            raise UnknownVertexError(v)
        if u == v:
            raise GraphError(f"self-edge on {u!r}; use sign '+' for a loop")
        i, j = idx[u], idx[v]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph._make(tuple(labels), BitMatrix._from_packed(rows, len(labels)))


def from_legal_string(tokens) -> Graph:
    """Graph of a signed double-occurrence string.

    ``tokens`` is a whitespace-separated string or a sequence of tokens; a
    leading ``-`` marks an inverted occurrence.  Letters become vertices in
    order of first appearance.  Two letters are adjacent when they interlock
    (``a b a b``), and a letter has a loop when its two occurrences differ in
    orientation.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    positions: dict[str, list[tuple[int, bool]]] = {}
    for pos, tok in enumerate(tokens):
        inverted = len(tok) > 1 and tok.startswith("-")
        letter = tok[1:] if inverted else tok
        positions.setdefault(letter, []).append((pos, inverted))
    for letter, occ in positions.items():
        if len(occ) != 2:
            raise LegalStringError(letter, len(occ))
    labels = tuple(positions)
    spans = [(occ[0][0], occ[1][0]) for occ in positions.values()]
    rows = []
    for i, letter in enumerate(labels):
        a1, a2 = spans[i]
        r = (1 << i) if positions[letter][0][1] != positions[letter][1][1] else 0
        for j, (b1, b2) in enumerate(spans):
            if j != i and (a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2):
                r |= 1 << j
        rows.append(r)
    return Graph._make(labels, BitMatrix._from_packed(rows, len(labels)))


def induced_subgraph(g: Graph, w: Iterable[str]) -> Graph:
    idx = g.indices(w)
    return Graph._make(tuple(g.labels[i] for i in idx), _submatrix(g.adj.packed_rows, idx, idx))


def rank_of(g: Graph, w1: Iterable[str], w2: Optional[Iterable[str]] = None) -> int:
    """GF(2) rank of the adjacency submatrix on rows ``w1`` and columns ``w2`` (default ``w1``)."""
    rows = g.indices(w1)
    cols = rows if w2 is None else g.indices(w2)
    return _masked_rank(g.adj.packed_rows, rows, _mask_of(cols))


def nullity_of(g: Graph, w: Iterable[str]) -> int:
    idx = g.indices(w)
    return len(idx) - _masked_rank(g.adj.packed_rows, idx, _mask_of(idx))


def _mask_of(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def _masked_rank(packed: Sequence[int], rows: Iterable[int], colmask: int) -> int:
    # Rank is invariant under the column order, so masking in place suffices.
    return _packed_rank(packed[i] & colmask for i in rows)


# -- file format -------------------------------------------------------------


def format_graph(g: Graph) -> str:
    """``graph N`` line, labels line, then ``N`` rows of bits."""
    lines = [f"graph {len(g)}", " ".join(g.labels)]
    n = len(g)
    for r in g.adj.packed_rows:
        lines.append("".join("1" if (r >> j) & 1 else "0" for j in range(n)))
    return "\n".join(lines) + "\n"


def _parse_graph_lines(lines: list[str], start: int) -> tuple[Graph, int]:
    # Parses one graph beginning at lines[start]; returns it and the next line index.
    lineno = start + 1
    header = lines[start].split()
    if len(header) != 2 or header[0] != "graph" or not header[1].isdigit():
        raise MatrixFormatError(f"expected 'graph N', found {lines[start]!r}", lineno)
    n = int(header[1])
    if start + 1 >= len(lines):
        if n == 0:
            return Graph.empty(), start + 1
        raise MatrixFormatError("missing label line", lineno + 1)
    labels = lines[start + 1].split()
    if len(labels) != n:
        raise MatrixFormatError(f"expected {n} labels, found {len(labels)}", lineno + 1)
    body = lines[start + 2 : start + 2 + n]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} adjacency rows, found {len(body)}", lineno + 2 + len(body))
    adj = parse_bit_rows(body, n, first_line=lineno + 2)
    try:
        g = Graph(labels, adj)
    except GraphError as exc:
        raise MatrixFormatError(str(exc), lineno + 2) from None
    return g, start + 2 + n


def parse_graph(text: str) -> Graph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise MatrixFormatError(f"expected exactly one graph, found {len(graphs)}", 1)
    return graphs[0]


def parse_graphs(text: str) -> list[Graph]:
    """Parse zero or more concatenated graph blocks."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    out = []
    i = 0
    while i < len(lines):
        g, i = _parse_graph_lines(lines, i)
        out.append(g)
    return out
