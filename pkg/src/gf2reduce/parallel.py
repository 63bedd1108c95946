"""Parallel application of rules and exact parallel complexity for small graphs.

A set of rules applies in parallel when their domains are disjoint and every
ordering of them is an applicable strategy.  The parallel complexity of a
graph is the least number of such steps that empties it.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .gf2 import BitMatrix
from .graph import Graph, GraphError
from .reduction import Rule, _apply_checked, _check_rule, applicable_rules

__all__ = [
    "DEFAULT_CAP",
    "CensusReport",
    "applies_in_parallel",
    "parallel_steps",
    "parallel_complexity",
    "parallel_complexity_census",
    "parallel_gdr_check",
    "gdr_parallel_census",
    "format_census",
    "random_graph",
]

DEFAULT_CAP = 10


class ComplexityCapError(GraphError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, above the cap of {cap}")
        self.n = n
        self.cap = cap


def _all_orders(g: Graph, rules: Sequence[Rule]) -> Optional[set[Graph]]:
    """Final graphs over all orderings, or ``None`` if some ordering gets stuck.

    Depth-first over applied subsets, memoised on (subset, intermediate graph)
    so orderings that reach the same graph share their work.
    """
    k = len(rules)
    full = (1 << k) - 1
    memo: dict[tuple[int, Graph], Optional[frozenset]] = {}

    def visit(done: int, h: Graph) -> Optional[frozenset]:
        if done == full:
            return frozenset((h,))
        key = (done, h)
        if key in memo:
            return memo[key]
        finals: set[Graph] = set()
        result: Optional[frozenset] = None
        for t in range(k):
            if (done >> t) & 1:
                continue
            if _check_rule(h, rules[t]) is not None:
                break
            sub = visit(done | (1 << t), _apply_checked(h, rules[t]))
            if sub is None:
                break
            finals |= sub
        else:
            result = frozenset(finals)
        memo[key] = result
        return result

    out = visit(0, g)
    return None if out is None else set(out)


def _disjoint(rules: Iterable[Rule]) -> bool:
    seen: set[str] = set()
    for r in rules:
        if seen.intersection(r.domain):
            return False
        seen.update(r.domain)
    return True


def applies_in_parallel(g: Graph, rules: Iterable[Rule]) -> bool:
    """True iff the domains are disjoint and every ordering applies with one common result."""
    rules = list(rules)
    if len(set(rules)) != len(rules) or not _disjoint(rules):
        return False
    finals = _all_orders(g, rules)
    return finals is not None and len(finals) <= 1


def parallel_steps(g: Graph) -> list[tuple[Rule, ...]]:
    """Every nonempty set of rules (as a tuple in rule order) that applies in parallel on ``g``.

    Subsets of a parallel set are parallel, so sets are grown one rule at a
    time and each extension is re-checked in full.
    """
    rules = applicable_rules(g)
    out: list[tuple[Rule, ...]] = []
    frontier = [(i,) for i in range(len(rules))]
    while frontier:
        nxt = []
        for combo in frontier:
            out.append(tuple(rules[i] for i in combo))
            used = set().union(*(rules[i].domain for i in combo))
            for j in range(combo[-1] + 1, len(rules)):
                if used.intersection(rules[j].domain):
                    continue
                cand = combo + (j,)
                if applies_in_parallel(g, [rules[i] for i in cand]):
                    nxt.append(cand)
        frontier = nxt
    return out


def _apply_step(g: Graph, step: Sequence[Rule]) -> Graph:
    for r in step:
        g = _apply_checked(g, r)
    return g


def parallel_complexity(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Least number of parallel steps reducing ``g`` to the empty graph (breadth-first search)."""
    if len(g) > cap:
        raise ComplexityCapError(len(g), cap)
    if len(g) == 0:
        return 0

    def key(h: Graph):
        # complexity does not depend on labels, so the bit pattern is enough
        return h.adj.packed_rows

    seen = {key(g)}
    queue = deque([(g, 0)])
    while queue:
        h, d = queue.popleft()
        for step in parallel_steps(h):
            nxt = _apply_step(h, step)
            if len(nxt) == 0:
                return d + 1
            k = key(nxt)
            if k not in seen:
                seen.add(k)
                queue.append((nxt, d + 1))
    raise AssertionError("every nonempty graph has an applicable rule")


# -- random experiments -----------------------------------------------------------


def _uniform(rng: np.random.Generator, n: int) -> BitMatrix:
    upper = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8))
    return BitMatrix(upper | upper.T)


def _negative(rng: np.random.Generator, n: int) -> BitMatrix:
    upper = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), k=1)
    return BitMatrix(upper | upper.T)


DISTRIBUTIONS: dict[str, Callable[[np.random.Generator, int], BitMatrix]] = {
    "uniform": _uniform,
    "negative": _negative,
}


def random_graph(n: int, seed: int, index: int = 0, distribution="uniform") -> Graph:
    """Sample ``index`` of the stream for ``seed``; each index has its own generator."""
    sampler = DISTRIBUTIONS[distribution] if isinstance(distribution, str) else distribution
    rng = np.random.default_rng([seed, index])
    return Graph.from_matrix(sampler(rng, n))


def _all_symmetric(n: int, loops: bool = True) -> Iterable[BitMatrix]:
    pairs = [(i, j) for i in range(n) for j in range(i if loops else i + 1, n)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for t, (i, j) in enumerate(pairs):
            if (code >> t) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield BitMatrix._from_packed(rows, n)


@dataclass(frozen=True)
class CensusReport:
    n: int
    sample: int
    seed: int
    histogram: dict[int, int]
    exhaustive: bool = False

    @property
    def min(self) -> int:
        return min(self.histogram)

    @property
    def max(self) -> int:
        return max(self.histogram)

    @property
    def mean(self) -> Fraction:
        total = sum(self.histogram.values())
        return Fraction(sum(k * c for k, c in self.histogram.items()), total)


def parallel_complexity_census(
    n: int,
    sample: int,
    seed: int,
    distribution: Union[str, Callable] = "uniform",
    cap: int = DEFAULT_CAP,
) -> CensusReport:
    """Histogram of parallel complexity over random graphs on ``n`` vertices.

    When ``sample`` is at least the number of graphs in the distribution's
    support (only for the named distributions) every graph is counted once
    instead.
    """
    if n > cap:
        raise ComplexityCapError(n, cap)
    if sample < 1:
        raise ValueError("sample must be positive")
    counts: Counter = Counter()
    exhaustive = False
    if isinstance(distribution, str):
        if distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {distribution!r}")
        loops = distribution == "uniform"
        free = n * (n + 1) // 2 if loops else n * (n - 1) // 2
        exhaustive = sample >= (1 << free)
    if exhaustive:
        for adj in _all_symmetric(n, loops=loops):
            counts[parallel_complexity(Graph.from_matrix(adj), cap=cap)] += 1
    else:
        for i in range(sample):
            counts[parallel_complexity(random_graph(n, seed, i, distribution), cap=cap)] += 1
    return CensusReport(n, sample, seed, dict(sorted(counts.items())), exhaustive)


def format_census(report: CensusReport) -> str:
    lines = [f"n={report.n} sample={report.sample} seed={report.seed}"]
    lines += [f"pc={k} count={c}" for k, c in sorted(report.histogram.items())]
    m = report.mean
    lines.append(f"max={report.max} mean={m.numerator}/{m.denominator}")
    return "\n".join(lines) + "\n"


def parallel_gdr_check(g: Graph, edges: Sequence[tuple[str, str]]) -> bool:
    """Whether the double rules on the given vertex-disjoint loopless edges apply in parallel."""
    used: set[str] = set()
    for u, v in edges:
        for x in (u, v):
            if x not in g:
                raise GraphError(f"unknown vertex {x!r}")
            if x in used:
                raise GraphError(f"edges are not vertex-disjoint at {x!r}")
            if g.has_loop(x):
                raise GraphError(f"vertex {x!r} has a loop")
            used.add(x)
        if u == v or not g.adjacent(u, v):
            raise GraphError(f"({u!r}, {v!r}) is not an edge")
    return applies_in_parallel(g, [Rule("gdr", (u, v)) for u, v in edges])


def gdr_parallel_census(n_edges: int, sample: int, seed: int, p: float = 0.5) -> Fraction:
    """Fraction of random graphs in which ``n_edges`` fixed disjoint double rules apply in parallel.

    Vertices ``2i, 2i+1`` form edge ``i``; every other pair of vertices is
    joined independently with probability ``p``; no loops.
    """
    n = 2 * n_edges
    labels = [str(i + 1) for i in range(n)]
    edges = [(labels[2 * i], labels[2 * i + 1]) for i in range(n_edges)]
    hits = 0
    for idx in range(sample):
        rng = np.random.default_rng([seed, idx])
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if (i // 2 == j // 2) or rng.random() < p:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        g = Graph(labels, BitMatrix._from_packed(rows, n))
        hits += parallel_gdr_check(g, edges)
    return Fraction(hits, sample)
