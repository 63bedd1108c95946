"""Principal pivots, pair-classes of matrices, retrographs and reverse reductions.

Over GF(2) the pivot of ``A = [[P, Q], [R, S]]`` by the index set of ``P``
is ``[[P^-1, P^-1 Q], [R P^-1, S + R P^-1 Q]]``; no signs are involved.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional, Sequence

from .gf2 import BitMatrix, _packed_rank, _submatrix, add, inverse, multiply, rref
from .graph import Graph, GraphError

__all__ = [
    "PairClass",
    "pivot_matrix",
    "pairclass_of",
    "pivot_pairclass",
    "pairclass_nullity",
    "pivot_graph",
    "retrograph",
    "schur_inverse_check",
    "reverse_reductions",
    "symmetric_difference_family",
]


def _complement(n: int, x: Sequence[int]) -> list[int]:
    xs = set(x)
    return [i for i in range(n) if i not in xs]


def _place(n: int, x: list[int], xc: list[int], p, q, r, s) -> BitMatrix:
    # Scatter the blocks [[p, q], [r, s]] back to the original index positions.
    def spread(bits: int, idx: list[int]) -> int:
        acc = 0
        for t, j in enumerate(idx):
            if (bits >> t) & 1:
                acc |= 1 << j
        return acc

    rows = [0] * n
    for row_idx, left, right in ((x, p, q), (xc, r, s)):
        for k, i in enumerate(row_idx):
            rows[i] = spread(left.packed_rows[k], x) | spread(right.packed_rows[k], xc)
    return BitMatrix._from_packed(rows, n)


def pivot_matrix(a: BitMatrix, x: Iterable[int]) -> Optional[BitMatrix]:
    """``a * x``, or ``None`` when the principal submatrix on ``x`` is singular."""
    if not a.is_square():
        raise ValueError(f"pivot of non-square matrix with shape {a.shape}")
    n = a.n_rows
    x = sorted(set(x))
    for i in x:
        if not 0 <= i < n:
            raise IndexError(f"pivot index {i} out of range for size {n}")
    xc = _complement(n, x)
    packed = a.packed_rows
    p_inv = inverse(_submatrix(packed, x, x))
    if p_inv is None:
        return None
    q = _submatrix(packed, x, xc)
    r = _submatrix(packed, xc, x)
    s = _submatrix(packed, xc, xc)
    pq = multiply(p_inv, q)
    rp = multiply(r, p_inv)
    return _place(n, x, xc, p_inv, pq, rp, add(s, multiply(r, pq)))


class PairClass:
    """Row-equivalence class ``[A, B]`` of pairs of ``n x n`` matrices.

    Stored as the RREF of the ``n x 2n`` block ``[A | B]``; columns ``0..n-1``
    come from ``A`` and ``n..2n-1`` from ``B``.  Equal classes have identical
    canonical forms.
    """

    __slots__ = ("n", "canonical")

    def __init__(self, canonical: BitMatrix):
        n = canonical.n_rows
        if canonical.n_cols != 2 * n:
            raise ValueError(f"canonical block must be n x 2n, got {canonical.shape}")
        reduced, pivots = rref(canonical)
        if len(pivots) != n:
            raise ValueError(f"[A | B] has rank {len(pivots)}, expected full rank {n}")
        self.n = n
        self.canonical = reduced

    @property
    def a_part(self) -> BitMatrix:
        return _submatrix(self.canonical.packed_rows, range(self.n), range(self.n))

    @property
    def b_part(self) -> BitMatrix:
        n = self.n
        return _submatrix(self.canonical.packed_rows, range(n), range(n, 2 * n))

    @property
    def is_proper(self) -> bool:
        return _packed_rank(self.a_part.packed_rows) == self.n

    def matrix(self) -> Optional[BitMatrix]:
        """``A^-1 B`` for a proper class (the ``M`` with ``[A, B] == [I, M]``), else ``None``."""
        if not self.is_proper:
            return None
        # RREF of a proper class has the identity in the A block
        return self.b_part

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairClass):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return f"PairClass({self.canonical!r})"


def pairclass_of(a: BitMatrix, b: BitMatrix) -> PairClass:
    if a.shape != b.shape or not a.is_square():
        raise ValueError(f"pair-class needs two square matrices of one size, got {a.shape} and {b.shape}")
    n = a.n_rows
    return PairClass(BitMatrix._from_packed([x | (y << n) for x, y in zip(a.packed_rows, b.packed_rows)], 2 * n))


def pivot_pairclass(pc: PairClass, x: Iterable[int]) -> PairClass:
    """Swap column ``j`` of ``A`` with column ``j`` of ``B`` for each ``j`` in ``x``."""
    n = pc.n
    swap = 0
    for j in set(x):
        if not 0 <= j < n:
            raise IndexError(f"pivot index {j} out of range for size {n}")
        swap |= (1 << j) | (1 << (j + n))
    rows = []
    for r in pc.canonical.packed_rows:
        lo = r & ((1 << n) - 1)
        hi = r >> n
        moved = (lo ^ hi) & (swap & ((1 << n) - 1))
        rows.append(r ^ moved ^ (moved << n))
    return PairClass(BitMatrix._from_packed(rows, 2 * n))


def pairclass_nullity(pc: PairClass, w1: Iterable[int], w2: Iterable[int]) -> int:
    """Nullity of the ``n x n`` matrix of columns ``V - w1`` of ``A`` and ``w2`` of ``B``."""
    n = pc.n
    w1, w2 = set(w1), set(w2)
    if len(w1) != len(w2):
        raise ValueError(f"|w1| = {len(w1)} and |w2| = {len(w2)} differ")
    for j in w1 | w2:
        if not 0 <= j < n:
            raise IndexError(f"index {j} out of range for size {n}")
    keep = 0
    for j in range(n):
        if j not in w1:
            keep |= 1 << j
        if j in w2:
            keep |= 1 << (j + n)
    return n - _packed_rank(r & keep for r in pc.canonical.packed_rows)


def symmetric_difference_family(family: Iterable[Iterable[str]], w: Iterable[str]) -> set[frozenset]:
    """``{S ^ w : S in family}``."""
    w = frozenset(w)
    return {frozenset(s) ^ w for s in family}


def pivot_graph(g: Graph, w: Iterable[str]) -> Optional[Graph]:
    """The pivot of ``g`` by ``w``, or ``None`` when ``w`` is not in the pivotal poset."""
    m = pivot_matrix(g.adj, g.indices(w))
    return None if m is None else Graph._make(g.labels, m)


def retrograph(g: Graph) -> Optional[Graph]:
    """Pivot by the whole vertex set: adjacency ``A^-1``.  ``None`` for a singular graph."""
    inv = inverse(g.adj)
    return None if inv is None else Graph._make(g.labels, inv)


def schur_inverse_check(a: BitMatrix, x: Iterable[int]) -> bool:
    """Check that ``A[X,X]`` is invertible iff ``A^-1[X', X']`` is, where ``X'`` is the complement,
    and that then ``A^-1[X', X'] == (S - R P^-1 Q)^-1``.
    """
    a_inv = inverse(a)
    if a_inv is None:
        raise ValueError("schur_inverse_check needs an invertible matrix")
    n = a.n_rows
    x = sorted(set(x))
    xc = _complement(n, x)
    packed = a.packed_rows
    p_inv = inverse(_submatrix(packed, x, x))
    corner = _submatrix(a_inv.packed_rows, xc, xc)
    corner_inv = inverse(corner)
    if (p_inv is None) != (corner_inv is None):
        return False
    if p_inv is None:
        return True
    q = _submatrix(packed, x, xc)
    r = _submatrix(packed, xc, x)
    s = _submatrix(packed, xc, xc)
    schur = add(s, multiply(r, multiply(p_inv, q)))
    return inverse(schur) == corner


# -- reverse reductions --------------------------------------------------------


def reverse_reductions(g: Graph, w_new: Sequence[str], strict: bool = False) -> list[Graph]:
    """All graphs on ``labels(g) + w_new`` whose reduction along ``w_new`` is ``g``.

    Built as pivots ``P_W1(H)`` over subsets ``W1`` of ``w_new`` and graphs
    ``H`` that restrict to ``g`` on the old vertices, have ``W1`` pivotal, and
    whose other new vertices are loopless and not adjacent to any old vertex.
    Edges touching ``W1`` and edges among the other new vertices are free;
    ``strict=True`` forbids the latter.  Either way the set is the same after
    deduplication.  Output is sorted by adjacency rows.
    """
    w_new = [str(v) for v in w_new]
    if len(set(w_new)) != len(w_new):
        raise GraphError("repeated vertex in w_new")
    clash = [v for v in w_new if v in g]
    if clash:
        raise GraphError(f"new vertices collide with existing labels: {clash!r}")
    n0, k = len(g), len(w_new)
    n = n0 + k
    labels = g.labels + tuple(w_new)
    base = list(g.adj.packed_rows) + [0] * k
    new_idx = list(range(n0, n))
    seen: set[BitMatrix] = set()
    out: list[Graph] = []
    for sub in range(1 << k):
        w1 = [new_idx[t] for t in range(k) if (sub >> t) & 1]
        w1s = set(w1)
        free_pairs = []
        for a_i, i in enumerate(new_idx):
            for j in new_idx[a_i:]:
                if i == j:
                    if i in w1s:
                        free_pairs.append((i, i))
                elif i in w1s or j in w1s or not strict:
                    free_pairs.append((i, j))
            if i in w1s:
                free_pairs.extend((i, j) for j in range(n0))
        for bits in product((0, 1), repeat=len(free_pairs)):
            rows = list(base)
            for (i, j), b in zip(free_pairs, bits):
                if b:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            h = BitMatrix._from_packed(rows, n)
            g_prime = pivot_matrix(h, w1)
            if g_prime is None or g_prime in seen:
                continue
            seen.add(g_prime)
            out.append(Graph._make(labels, g_prime))
    out.sort(key=lambda gr: gr.adj.packed_rows)
    return out
