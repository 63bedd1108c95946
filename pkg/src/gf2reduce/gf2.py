"""Dense matrices over GF(2).

Rows are packed into Python integers: bit ``j`` of ``rows[i]`` holds entry
``(i, j)``.  Addition is XOR, multiplication is AND followed by parity, so
every row operation is a single word-parallel integer operation.

All matrices are immutable.  Empty shapes (``0 x k``, ``k x 0``, ``0 x 0``)
are legal everywhere.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "BitMatrix",
    "MatrixFormatError",
    "add",
    "block",
    "format_matrix",
    "first_column_outside_image",
    "hstack",
    "inverse",
    "is_invertible",
    "multiply",
    "nullspace_basis",
    "parse_matrix",
    "rank",
    "rref",
    "solve_right",
    "submatrix",
    "transpose",
    "vstack",
]


class MatrixFormatError(ValueError):
    """Malformed matrix text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _bits(x: int, n: int) -> list[int]:
    return [(x >> j) & 1 for j in range(n)]


class BitMatrix:
    """An ``n_rows x n_cols`` matrix with entries in GF(2).

    Construct from nested 0/1 sequences, a list of ``"0101"`` strings, or a
    numpy array::

        >>> BitMatrix([[1, 1], [0, 1]]).rank()
        2
        >>> BitMatrix(["10", "11"]) @ BitMatrix.identity(2) == BitMatrix(["10", "11"])
        True
    """

    __slots__ = ("_rows", "_n_rows", "_n_cols", "_hash")

    def __init__(self, data: Iterable, n_cols: Optional[int] = None):
        if isinstance(data, np.ndarray):
            arr = np.asarray(data)
            if arr.ndim != 2:
                raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
            data = arr.tolist()
            if n_cols is None:
                n_cols = arr.shape[1]
        rows: list[int] = []
        width = n_cols
        for i, row in enumerate(data):
            if isinstance(row, str):
                entries = [int(c) if c in "01" else -1 for c in row]
            else:
                entries = [int(v) for v in row]
            if width is None:
                width = len(entries)
            if len(entries) != width:
                raise ValueError(f"row {i} has {len(entries)} entries, expected {width}")
            packed = 0
            for j, v in enumerate(entries):
                if v not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is not a bit")
                packed |= v << j
            rows.append(packed)
        self._rows = tuple(rows)
        self._n_rows = len(rows)
        self._n_cols = 0 if width is None else width
        self._hash = None

    @classmethod
    def _from_packed(cls, rows: Sequence[int], n_cols: int) -> "BitMatrix":
        # Trusted constructor for internal hot paths: no validation.
        m = object.__new__(cls)
        m._rows = tuple(rows)
        m._n_rows = len(m._rows)
        m._n_cols = n_cols
        m._hash = None
        return m

    @classmethod
    def from_packed_rows(cls, rows: Sequence[int], n_cols: int) -> "BitMatrix":
        """Build from integer-packed rows, checking that no bit exceeds ``n_cols``."""
        limit = 1 << n_cols
        for i, r in enumerate(rows):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} does not fit in {n_cols} columns")
        return cls._from_packed(rows, n_cols)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls._from_packed([0] * n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls._from_packed([1 << i for i in range(n)], n)

    # -- accessors ---------------------------------------------------------

    @property
    def n_rows(self) -> int:
        return self._n_rows

    @property
    def n_cols(self) -> int:
        return self._n_cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._n_rows, self._n_cols)

    @property
    def packed_rows(self) -> tuple[int, ...]:
        """The rows as packed integers (bit ``j`` is column ``j``)."""
        return self._rows

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self._n_rows and 0 <= j < self._n_cols):
            raise IndexError(f"entry ({i}, {j}) out of range for shape {self.shape}")
        return (self._rows[i] >> j) & 1

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entry(i, j)

    def row(self, i: int) -> list[int]:
        return _bits(self._rows[i], self._n_cols)

    def column(self, j: int) -> list[int]:
        return [(r >> j) & 1 for r in self._rows]

    def tolist(self) -> list[list[int]]:
        return [_bits(r, self._n_cols) for r in self._rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.tolist(), dtype=np.uint8).reshape(self.shape)

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self._n_cols == other._n_cols and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n_rows, self._n_cols, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("'" + "".join(map(str, r)) + "'" for r in self.tolist())
        return f"BitMatrix([{body}], n_cols={self._n_cols})"

    def __str__(self) -> str:
        return format_matrix(self).rstrip("\n")

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        return add(self, other)

    __sub__ = __add__

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return multiply(self, other)

    @property
    def T(self) -> "BitMatrix":
        return transpose(self)

    # convenience wrappers around the module functions
    def rank(self) -> int:
        return rank(self)

    def is_square(self) -> bool:
        return self._n_rows == self._n_cols

    def is_symmetric(self) -> bool:
        return self.is_square() and transpose(self) == self


# -- arithmetic ------------------------------------------------------------


def add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.shape != b.shape:
        raise ValueError(f"cannot add shapes {a.shape} and {b.shape}")
    return BitMatrix._from_packed([x ^ y for x, y in zip(a._rows, b._rows)], a._n_cols)


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a._n_cols != b._n_rows:
        raise ValueError(f"cannot multiply shapes {a.shape} and {b.shape}")
    brows = b._rows
    out = []
    for r in a._rows:
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc ^= brows[j]
            r >>= 1
            j += 1
        out.append(acc)
    return BitMatrix._from_packed(out, b._n_cols)


def transpose(m: BitMatrix) -> BitMatrix:
    out = [0] * m._n_cols
    for i, r in enumerate(m._rows):
        bit = 1 << i
        j = 0
        while r:
            if r & 1:
                out[j] |= bit
            r >>= 1
            j += 1
    return BitMatrix._from_packed(out, m._n_rows)


def submatrix(m: BitMatrix, rows: Sequence[int], cols: Sequence[int]) -> BitMatrix:
    """Copy of ``m`` restricted to ``rows`` x ``cols``, in the given index order."""
    for i in rows:
        if not 0 <= i < m._n_rows:
            raise IndexError(f"row index {i} out of range for {m._n_rows} rows")
    for j in cols:
        if not 0 <= j < m._n_cols:
            raise IndexError(f"column index {j} out of range for {m._n_cols} columns")
    return _submatrix(m._rows, rows, cols)


def _submatrix(packed: Sequence[int], rows: Sequence[int], cols: Sequence[int]) -> BitMatrix:
    out = []
    for i in rows:
        r = packed[i]
        acc = 0
        for k, j in enumerate(cols):
            if (r >> j) & 1:
                acc |= 1 << k
        out.append(acc)
    return BitMatrix._from_packed(out, len(cols))


def hstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a._n_rows != b._n_rows:
        raise ValueError(f"cannot hstack shapes {a.shape} and {b.shape}")
    s = a._n_cols
    return BitMatrix._from_packed([x | (y << s) for x, y in zip(a._rows, b._rows)], s + b._n_cols)


def vstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a._n_cols != b._n_cols:
        raise ValueError(f"cannot vstack shapes {a.shape} and {b.shape}")
    return BitMatrix._from_packed(a._rows + b._rows, a._n_cols)


def block(p: BitMatrix, q: BitMatrix, r: BitMatrix, s: BitMatrix) -> BitMatrix:
    """Assemble ``[[p, q], [r, s]]``."""
    return vstack(hstack(p, q), hstack(r, s))


# -- elimination -----------------------------------------------------------


def _eliminate(rows: list[int], n_pivot_cols: int) -> list[int]:
    """Reduce ``rows`` in place to RREF using pivots in the low ``n_pivot_cols`` bits.

    Returns the pivot column of each of the first ``len(result)`` rows.
    """
    pivots: list[int] = []
    top = 0
    n = len(rows)
    for col in range(n_pivot_cols):
        bit = 1 << col
        found = -1
        for i in range(top, n):
            if rows[i] & bit:
                found = i
                break
        if found < 0:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        pr = rows[top]
        for i in range(n):
            if i != top and rows[i] & bit:
                rows[i] ^= pr
        pivots.append(col)
        top += 1
        if top == n:
            break
    return pivots


def _packed_rank(rows: Iterable[int]) -> int:
    # Basis keyed by leading bit; each insert is a short XOR chain.
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = r
                break
            r ^= b
    return len(basis)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form and the list of pivot columns.

    Zero rows are kept at the bottom so the shape is unchanged.  Two matrices
    of the same shape have the same row space iff their RREFs are equal.
    """
    rows = list(m._rows)
    pivots = _eliminate(rows, m._n_cols)
    return BitMatrix._from_packed(rows, m._n_cols), pivots


def rank(m: BitMatrix) -> int:
    return _packed_rank(m._rows)


def solve_right(p: BitMatrix, q: BitMatrix) -> Optional[BitMatrix]:
    """Some ``M`` with ``p @ M == q``, or ``None`` if ``im(q)`` is not inside ``im(p)``.

    ``M`` is read off the RREF of ``[p | q]`` with all free variables set to
    zero, so the answer is deterministic.
    """
    m, _ = _solve(p, q)
    return m


def _solve(p: BitMatrix, q: BitMatrix) -> tuple[Optional[BitMatrix], int]:
    # Returns (M, -1) on success or (None, j) with j a column of q outside im(p).
    if p._n_rows != q._n_rows:
        raise ValueError(f"row counts differ: {p.shape} vs {q.shape}")
    k = p._n_cols
    rows = [x | (y << k) for x, y in zip(p._rows, q._rows)]
    pivots = _eliminate(rows, k)
    for i in range(len(pivots), len(rows)):
        rhs = rows[i] >> k
        if rhs:
            # this row is y^T [p|q] with y^T p = 0, so y^T q_j = 1 puts q_j outside im(p)
            return None, (rhs & -rhs).bit_length() - 1
    out = [0] * k
    for i, col in enumerate(pivots):
        out[col] = rows[i] >> k
    return BitMatrix._from_packed(out, q._n_cols), -1


def first_column_outside_image(p: BitMatrix, q: BitMatrix) -> Optional[int]:
    """Index of a column of ``q`` not in the column space of ``p``, if any."""
    m, j = _solve(p, q)
    return None if m is not None else j


def inverse(m: BitMatrix) -> Optional[BitMatrix]:
    """Two-sided inverse, or ``None`` when ``m`` is singular.  The 0x0 matrix is its own inverse."""
    if not m.is_square():
        raise ValueError(f"inverse of non-square matrix with shape {m.shape}")
    n = m._n_rows
    rows = [r | (1 << (n + i)) for i, r in enumerate(m._rows)]
    pivots = _eliminate(rows, n)
    if len(pivots) < n:
        return None
    return BitMatrix._from_packed([r >> n for r in rows], n)


def is_invertible(m: BitMatrix) -> bool:
    return m.is_square() and _packed_rank(m._rows) == m._n_rows


def nullspace_basis(m: BitMatrix) -> list[tuple[int, ...]]:
    """Basis of ``{x : m @ x == 0}``, one 0/1 tuple of length ``n_cols`` per vector."""
    n = m._n_cols
    rows = list(m._rows)
    pivots = _eliminate(rows, n)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = 1 << free
        for i, col in enumerate(pivots):
            if (rows[i] >> free) & 1:
                vec |= 1 << col
        basis.append(tuple(_bits(vec, n)))
    return basis


# -- text format -------------------------------------------------------------


def format_matrix(m: BitMatrix) -> str:
    """``R C`` header, then one line of ``C`` bits per row."""
    lines = [f"{m.n_rows} {m.n_cols}"]
    for r in m._rows:
        lines.append("".join("1" if (r >> j) & 1 else "0" for j in range(m._n_cols)))
    return "\n".join(lines) + "\n"


def parse_bit_rows(lines: Sequence[str], n_cols: int, first_line: int = 1) -> BitMatrix:
    """Parse already-split rows of ``0``/``1`` characters (no header)."""
    packed = []
    for k, line in enumerate(lines):
        lineno = first_line + k
        if len(line) != n_cols:
            raise MatrixFormatError(
                f"expected {n_cols} bits, found {len(line)}", lineno, min(len(line), n_cols) + 1
            )
        acc = 0
        for j, ch in enumerate(line):
            if ch == "1":
                acc |= 1 << j
            elif ch != "0":
                raise MatrixFormatError(f"expected 0 or 1, found {ch!r}", lineno, j + 1)
        packed.append(acc)
    return BitMatrix._from_packed(packed, n_cols)


def parse_matrix(text: str) -> BitMatrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MatrixFormatError("missing 'R C' header", 1)
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixFormatError(f"expected 'R C' header, found {lines[0]!r}", 1)
    n_rows, n_cols = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != n_rows:
        raise MatrixFormatError(f"expected {n_rows} rows, found {len(body)}", len(lines) + 1)
    return parse_bit_rows(body, n_cols, first_line=2)
