"""Graph reductions along vertex sets and the three combinatorial rules.

A vertex set ``W`` is reducible when, writing the adjacency matrix in block
form ``[[P, Q], [Q^T, R]]`` with ``W`` first, every column of ``Q`` lies in
the column space of ``P``.  Reducing along ``W`` then leaves ``R + M^T Q``
on the remaining vertices, where ``P M = Q`` (over GF(2) this equals
``R - M^T P M``, and ``R - Q^T P^{-1} Q`` when ``P`` is invertible).

The rules ``gpr``, ``gdr`` and ``gnr`` are exactly the minimal reductions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .gf2 import BitMatrix, MatrixFormatError, _packed_rank, _solve, _submatrix, multiply, transpose
from .graph import Graph, GraphError, _mask_of, _masked_rank, nullity_of

__all__ = [
    "Rule",
    "Strategy",
    "ReductionError",
    "NotReducibleError",
    "RuleNotApplicableError",
    "StrategyError",
    "is_reducible",
    "reduce",
    "applicable_rules",
    "apply_rule",
    "apply_strategy",
    "strategy_for",
    "gnr_count",
    "avoids_gnr",
    "edge_after_reduction",
    "format_strategy",
    "parse_strategy",
]

RULE_KINDS = ("gpr", "gdr", "gnr")


class ReductionError(GraphError):
    pass


class NotReducibleError(ReductionError):
    """``W`` is not reducible; ``witness`` is a vertex outside ``W`` whose column escapes ``im(P)``."""

    def __init__(self, vertices: Sequence[str], witness: str):
        shown = ",".join(vertices)
        super().__init__(f"{{{shown}}} is not reducible: column of {witness!r} is outside the image of P")
        self.vertices = tuple(vertices)
        self.witness = witness


class RuleNotApplicableError(ReductionError):
    def __init__(self, rule: "Rule", reason: str):
        super().__init__(f"{rule} does not apply: {reason}")
        self.rule = rule
        self.reason = reason


class StrategyError(ReductionError):
    """Step ``step`` (0-based) failed on ``graph``, the result of the earlier steps."""

    def __init__(self, step: int, rule: "Rule", graph: Graph, reason: str):
        super().__init__(f"step {step + 1} ({rule}) does not apply: {reason}")
        self.step = step
        self.rule = rule
        self.graph = graph
        self.reason = reason


@dataclass(frozen=True)
class Rule:
    kind: str
    domain: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}")
        want = 2 if self.kind == "gdr" else 1
        if len(self.domain) != want or len(set(self.domain)) != want:
            raise ValueError(f"{self.kind} needs {want} distinct vertices, got {self.domain!r}")

    @classmethod
    def gpr(cls, v: str) -> "Rule":
        return cls("gpr", (v,))

    @classmethod
    def gdr(cls, v1: str, v2: str) -> "Rule":
        return cls("gdr", (v1, v2))

    @classmethod
    def gnr(cls, v: str) -> "Rule":
        return cls("gnr", (v,))

    def __str__(self) -> str:
        return " ".join((self.kind,) + self.domain)


Strategy = list  # list[Rule]; kept as a plain list for easy construction


# -- core ------------------------------------------------------------------


def _split(g: Graph, w: Iterable[str]) -> tuple[list[int], list[int]]:
    inside = g.indices(w)
    chosen = set(inside)
    rest = [i for i in range(len(g)) if i not in chosen]
    return inside, rest


def _reduce_indices(g: Graph, inside: list[int], rest: list[int]) -> Optional[Graph]:
    # Unchecked core: None when not reducible.
    packed = g.adj.packed_rows
    p = _submatrix(packed, inside, inside)
    q = _submatrix(packed, inside, rest)
    m, _ = _solve(p, q)
    if m is None:
        return None
    r = _submatrix(packed, rest, rest)
    # R - M^T P M == R + M^T Q because P M = Q
    new = [x ^ y for x, y in zip(r.packed_rows, multiply(transpose(m), q).packed_rows)]
    labels = tuple(g.labels[i] for i in rest)
    return Graph._make(labels, BitMatrix._from_packed(new, len(rest)))


def _reducible_mask(packed: Sequence[int], wmask: int, n: int) -> bool:
    # W is reducible iff rank(A[W, V]) == rank(A[W, W]).
    rows = [packed[i] for i in range(n) if (wmask >> i) & 1]
    return _packed_rank(rows) == _packed_rank(r & wmask for r in rows)


def is_reducible(g: Graph, w: Iterable[str]) -> bool:
    inside, rest = _split(g, w)
    packed = g.adj.packed_rows
    m, _ = _solve(_submatrix(packed, inside, inside), _submatrix(packed, inside, rest))
    return m is not None


def reduce(g: Graph, w: Iterable[str]) -> Graph:
    """The reduction of ``g`` along ``w``; raises ``NotReducibleError`` if ``w`` is not reducible."""
    inside, rest = _split(g, w)
    out = _reduce_indices(g, inside, rest)
    if out is None:
        packed = g.adj.packed_rows
        _, j = _solve(_submatrix(packed, inside, inside), _submatrix(packed, inside, rest))
        raise NotReducibleError([g.labels[i] for i in inside], g.labels[rest[j]])
    return out


# -- rules -------------------------------------------------------------------


def applicable_rules(g: Graph) -> list[Rule]:
    """Every applicable rule: gpr first, then gdr, then gnr, each in vertex order."""
    rows = g.adj.packed_rows
    n = len(g)
    looped = [(rows[i] >> i) & 1 for i in range(n)]
    labels = g.labels
    gpr = [Rule("gpr", (labels[i],)) for i in range(n) if looped[i]]
    gdr = [
        Rule("gdr", (labels[i], labels[j]))
        for i in range(n)
        if not looped[i]
        for j in range(i + 1, n)
        if not looped[j] and (rows[i] >> j) & 1
    ]
    gnr = [Rule("gnr", (labels[i],)) for i in range(n) if rows[i] == 0]
    return gpr + gdr + gnr


def _check_rule(g: Graph, rule: Rule) -> Optional[str]:
    # None when applicable, otherwise the violated condition.
    for v in rule.domain:
        if v not in g:
            return f"vertex {v!r} is not in the graph"
    if rule.kind == "gpr":
        v = rule.domain[0]
        return None if g.has_loop(v) else f"{v!r} has no loop"
    if rule.kind == "gnr":
        v = rule.domain[0]
        if g.has_loop(v):
            return f"{v!r} has a loop"
        if g.neighbors(v):
            return f"{v!r} is not isolated"
        return None
    v1, v2 = rule.domain
    for v in (v1, v2):
        if g.has_loop(v):
            return f"{v!r} has a loop"
    if not g.adjacent(v1, v2):
        return f"{v1!r} and {v2!r} are not adjacent"
    return None


def apply_rule(g: Graph, rule: Rule) -> Graph:
    """Apply one rule by its closed form; raises ``RuleNotApplicableError``."""
    reason = _check_rule(g, rule)
    if reason is not None:
        raise RuleNotApplicableError(rule, reason)
    return _apply_checked(g, rule)


def _apply_checked(g: Graph, rule: Rule) -> Graph:
    idx = g.index
    rows = list(g.adj.packed_rows)
    n = len(rows)
    if rule.kind == "gpr":
        # R - Q^T Q: complement the neighbourhood, diagonal included
        i = idx[rule.domain[0]]
        nb = rows[i] & ~(1 << i)
        for x in range(n):
            if (nb >> x) & 1:
                rows[x] ^= nb
        removed = 1 << i
    elif rule.kind == "gdr":
        # R - Q^T [[0,1],[1,0]] Q: toggle (x, y) by q1[x] q2[y] + q2[x] q1[y]
        i, j = idx[rule.domain[0]], idx[rule.domain[1]]
        removed = (1 << i) | (1 << j)
        q1 = rows[i] & ~removed
        q2 = rows[j] & ~removed
        for x in range(n):
            t = 0
            if (q1 >> x) & 1:
                t ^= q2
            if (q2 >> x) & 1:
                t ^= q1
            rows[x] ^= t
    else:
        removed = 1 << idx[rule.domain[0]]
    keep = [x for x in range(n) if not (removed >> x) & 1]
    labels = tuple(g.labels[x] for x in keep)
    return Graph._make(labels, _submatrix(rows, keep, keep))


def apply_strategy(g: Graph, strategy: Iterable[Rule]) -> Graph:
    for step, rule in enumerate(strategy):
        reason = _check_rule(g, rule)
        if reason is not None:
            raise StrategyError(step, rule, g, reason)
        g = _apply_checked(g, rule)
    return g


def strategy_for(g: Graph, w: Iterable[str]) -> list[Rule]:
    """A rule sequence removing exactly ``w``.

    Greedy: at every stage take the first applicable rule (gpr, then gdr,
    then gnr, lowest vertex first) whose domain lies in what is left of ``w``.
    """
    w = list(w)
    inside, rest = _split(g, w)
    if _reduce_indices(g, inside, rest) is None:
        reduce(g, w)  # raises with a witness
    remaining = {g.labels[i] for i in inside}
    out: list[Rule] = []
    while remaining:
        rule = next(r for r in applicable_rules(g) if remaining.issuperset(r.domain))
        out.append(rule)
        g = _apply_checked(g, rule)
        remaining.difference_update(rule.domain)
    return out


def gnr_count(g: Graph, w: Iterable[str]) -> int:
    """Number of negative rules in any strategy removing ``w``: the nullity of ``w``."""
    w = list(w)
    if not is_reducible(g, w):
        reduce(g, w)
    return nullity_of(g, w)


def avoids_gnr(g: Graph) -> bool:
    """True iff no successful strategy uses the negative rule, i.e. ``adj`` is nonsingular."""
    return _packed_rank(g.adj.packed_rows) == len(g)


def edge_after_reduction(g: Graph, w: Iterable[str], v: str, u: str) -> bool:
    """Whether ``(v, u)`` is an edge of the reduction along ``w``, decided by ranks alone.

    The criterion is ``rank(W + v, W + u) > rank(W)``; ``v == u`` asks about a loop.
    """
    w = list(w)
    if not is_reducible(g, w):
        reduce(g, w)
    ws = set(w)
    for x in (v, u):
        if x in ws:
            raise ReductionError(f"vertex {x!r} lies in the reduced set")
    base = g.indices(w)
    rv = g.indices(w + [v])
    ru = g.indices(w + [u])
    packed = g.adj.packed_rows
    return _masked_rank(packed, rv, _mask_of(ru)) > _masked_rank(packed, base, _mask_of(base))


# -- strategy text format -------------------------------------------------------


def format_strategy(strategy: Iterable[Rule]) -> str:
    return "".join(f"{r}\n" for r in strategy)


def parse_strategy(text: str) -> list[Rule]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        kind, args = parts[0], parts[1:]
        if kind not in RULE_KINDS:
            raise MatrixFormatError(f"unknown rule {kind!r}", lineno, 1)
        try:
            out.append(Rule(kind, tuple(args)))
        except ValueError as exc:
            raise MatrixFormatError(str(exc), lineno, len(kind) + 2) from None
    return out
