"""Reducibility posets, pivotal posets and reconstruction from the pivotal poset."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .gf2 import BitMatrix, MatrixFormatError, _packed_rank
from .graph import Graph, GraphError, nullity_of
from .reduction import _reducible_mask, is_reducible

__all__ = [
    "MAX_POSET_VERTICES",
    "ReducibilityPoset",
    "PosetTooLargeError",
    "reducibility_poset",
    "reducibility_poset_naive",
    "pivotal_poset",
    "graph_from_pivotal_poset",
    "is_realizable",
    "hasse_cover_pairs",
    "format_poset",
    "parse_poset",
]

MAX_POSET_VERTICES = 20


class PosetTooLargeError(GraphError):
    def __init__(self, n: int):
        super().__init__(f"poset enumeration is capped at {MAX_POSET_VERTICES} vertices, graph has {n}")
        self.n = n


def _sort_key(labels: Sequence[str]):
    pos = {v: i for i, v in enumerate(labels)}

    def key(item):
        s, level = item
        return (level, len(s), sorted(pos[v] for v in s))

    return key


@dataclass(frozen=True)
class ReducibilityPoset:
    """Reducible subsets of ``labels`` with their nullity levels.

    ``members`` is sorted by (level, size, position of the members in
    ``labels``).
    """

    labels: tuple[str, ...]
    members: tuple[tuple[frozenset, int], ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.members, key=_sort_key(self.labels)))
        object.__setattr__(self, "members", ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: object) -> bool:
        return frozenset(s) in self.levels  # type: ignore[arg-type]

    @property
    def levels(self) -> dict[frozenset, int]:
        return dict(self.members)

    def level(self, k: int) -> set[frozenset]:
        return {s for s, lv in self.members if lv == k}

    def nullity(self, s: Iterable[str]) -> Optional[int]:
        return self.levels.get(frozenset(s))


def _check_size(n: int) -> None:
    if n > MAX_POSET_VERTICES:
        raise PosetTooLargeError(n)


def _masks(n: int) -> list[int]:
    # size-major, then lexicographic on index tuples
    out = []
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            m = 0
            for i in combo:
                m |= 1 << i
            out.append(m)
    return out


def reducibility_poset(g: Graph) -> ReducibilityPoset:
    """All ``2^n`` subsets tested with packed-row ranks; ``n`` is capped at 20."""
    n = len(g)
    _check_size(n)
    packed = g.adj.packed_rows
    members = []
    for m in _masks(n):
        if _reducible_mask(packed, m, n):
            rows = [packed[i] & m for i in range(n) if (m >> i) & 1]
            members.append((frozenset(g.labels_of(m)), len(rows) - _packed_rank(rows)))
    return ReducibilityPoset(g.labels, tuple(members))


def reducibility_poset_naive(g: Graph) -> ReducibilityPoset:
    """Reference enumeration through ``is_reducible`` and ``nullity_of``."""
    n = len(g)
    _check_size(n)
    members = []
    for m in _masks(n):
        w = g.labels_of(m)
        if is_reducible(g, w):
            members.append((frozenset(w), nullity_of(g, w)))
    return ReducibilityPoset(g.labels, tuple(members))


def pivotal_poset(g: Graph) -> set[frozenset]:
    """Subsets whose principal submatrix is invertible (level 0 of the reducibility poset)."""
    n = len(g)
    _check_size(n)
    packed = g.adj.packed_rows
    out = set()
    for m in _masks(n):
        size = bin(m).count("1")
        if _packed_rank(packed[i] & m for i in range(n) if (m >> i) & 1) == size:
            out.add(frozenset(g.labels_of(m)))
    return out


def _normalize(v: Sequence[str], r0: Iterable[Iterable[str]]) -> set[frozenset]:
    ground = set(v)
    out = set()
    for s in r0:
        fs = frozenset(s)
        extra = fs - ground
        if extra:
            raise GraphError(f"poset member contains unknown vertices {sorted(extra)!r}")
        out.add(fs)
    return out


def graph_from_pivotal_poset(v: Sequence[str], r0: Iterable[Iterable[str]]) -> Optional[Graph]:
    """The unique graph on ``v`` with pivotal poset ``r0``, or ``None`` if there is none.

    Loops come from singletons.  For a pair with diagonal entries ``a, c`` the
    2x2 determinant is ``ac + b`` over GF(2), so the edge bit is
    ``b = ac + [pair in r0]``.  The candidate is then checked against the
    whole family.
    """
    v = tuple(v)
    r0 = _normalize(v, r0)
    n = len(v)
    diag = [1 if frozenset((x,)) in r0 else 0 for x in v]
    rows = [d << i for i, d in enumerate(diag)]
    for i in range(n):
        for j in range(i + 1, n):
            b = (diag[i] & diag[j]) ^ (1 if frozenset((v[i], v[j])) in r0 else 0)
            if b:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    try:
        g = Graph(v, BitMatrix._from_packed(rows, n))
    except GraphError:
        return None
    if pivotal_poset(g) != r0:
        return None
    return g


def is_realizable(v: Sequence[str], r0: Iterable[Iterable[str]]) -> bool:
    return graph_from_pivotal_poset(v, r0) is not None


def hasse_cover_pairs(p: ReducibilityPoset) -> list[tuple[frozenset, frozenset]]:
    """Cover relations ``S < T`` of the member family under inclusion, in member order."""
    sets = [s for s, _ in p.members]
    out = []
    for s in sets:
        for t in sets:
            if s < t and not any(s < u < t for u in sets):
                out.append((s, t))
    return out


# -- text format -------------------------------------------------------------


def _format_set(labels: Sequence[str], s: frozenset) -> str:
    pos = {v: i for i, v in enumerate(labels)}
    return "{" + ",".join(sorted(s, key=pos.__getitem__)) + "}"


def format_poset(p: ReducibilityPoset, level: Optional[int] = None) -> str:
    lines = [
        f"level {lv}: {_format_set(p.labels, s)}"
        for s, lv in p.members
        if level is None or lv == level
    ]
    return "".join(line + "\n" for line in lines)


def parse_poset(text: str) -> list[tuple[frozenset, int]]:
    """Parse ``level <k>: {a,b}`` lines into (set, level) pairs."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        head, sep, body = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "level" or not parts[1].isdigit():
            raise MatrixFormatError(f"expected 'level <k>: {{...}}', found {line!r}", lineno)
        body = body.strip()
        if not (body.startswith("{") and body.endswith("}")):
            col = line.index(":") + 2
            raise MatrixFormatError("expected a braced vertex list", lineno, col)
        inner = body[1:-1].strip()
        members = [x.strip() for x in inner.split(",")] if inner else []
        if any(not x for x in members):
            raise MatrixFormatError("empty vertex name", lineno, line.index("{") + 1)
        out.append((frozenset(members), int(parts[1])))
    return out
