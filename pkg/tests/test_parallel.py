from fractions import Fraction
from itertools import permutations

import pytest
from conftest import graphs
from hypothesis import given, settings
from oracles import all_graphs, parallel_by_permutations, parallel_complexity_bruteforce

from gf2reduce import BitMatrix, Graph
from gf2reduce.graph import GraphError
from gf2reduce.parallel import (
    ComplexityCapError,
    applies_in_parallel,
    format_census,
    gdr_parallel_census,
    parallel_complexity,
    parallel_complexity_census,
    parallel_gdr_check,
    parallel_steps,
    random_graph,
)
from gf2reduce.reduction import Rule, StrategyError, apply_strategy, reduce

CYCLE4 = Graph(["v1", "v2", "v3", "v4"], BitMatrix(["0101", "1010", "0101", "1010"]))


class TestAppliesInParallel:
    def test_empty_set(self, tri):
        assert applies_in_parallel(tri, [])

    def test_non_adjacent_looped(self):
        g = Graph.from_matrix(BitMatrix.identity(2))
        rules = [Rule.gpr("1"), Rule.gpr("2")]
        assert apply_strategy(g, rules) == apply_strategy(g, rules[::-1]) == Graph.empty()
        assert applies_in_parallel(g, rules)

    def test_adjacent_looped(self):
        g = Graph.from_matrix([[1, 1], [1, 1]])
        with pytest.raises(StrategyError):
            apply_strategy(g, [Rule.gpr("1"), Rule.gpr("2")])
        assert not applies_in_parallel(g, [Rule.gpr("1"), Rule.gpr("2")])

    def test_overlapping_domains(self, tri):
        assert not applies_in_parallel(tri, [Rule.gpr("v1"), Rule.gpr("v1")])

    @given(graphs(max_n=5))
    def test_matches_permutation_oracle(self, g):
        for step in parallel_steps(g):
            assert parallel_by_permutations(g, [(r.kind, r.domain) for r in step])
            finals = {apply_strategy(g, order) for order in permutations(step)}
            union = set().union(*(r.domain for r in step))
            assert finals == {reduce(g, union)}


class TestParallelComplexity:
    def test_trivial(self):
        assert parallel_complexity(Graph.empty()) == 0
        assert parallel_complexity(Graph(["a"], BitMatrix([[1]]))) == 1
        assert parallel_complexity(Graph(["a", "b"], BitMatrix(["01", "10"]))) == 1

    def test_cap(self):
        with pytest.raises(ComplexityCapError):
            parallel_complexity(Graph.from_matrix(BitMatrix.identity(11)))
        assert parallel_complexity(Graph.from_matrix(BitMatrix.identity(3)), cap=3) == 1

    def test_matches_bruteforce_up_to_three(self):
        for n in range(4):
            for g in all_graphs(n):
                assert parallel_complexity(g) == parallel_complexity_bruteforce(g)

    @settings(max_examples=15)
    @given(graphs(min_n=4, max_n=4))
    def test_matches_bruteforce_four(self, g):
        assert parallel_complexity(g) == parallel_complexity_bruteforce(g)

    @given(graphs(min_n=1, max_n=6))
    def test_bounds(self, g):
        assert 1 <= parallel_complexity(g) <= len(g)


class TestCensus:
    def test_one_vertex(self):
        # five samples exceed the two possible graphs, so each is counted once
        report = parallel_complexity_census(1, 5, seed=3)
        assert report.exhaustive and report.histogram == {1: 2}
        sampled = parallel_complexity_census(3, 20, seed=3)
        assert not sampled.exhaustive and sum(sampled.histogram.values()) == 20

    def test_two_vertices_exhaustive(self):
        expected = {}
        for g in all_graphs(2):
            k = parallel_complexity_bruteforce(g)
            expected[k] = expected.get(k, 0) + 1
        report = parallel_complexity_census(2, 8, seed=0)
        assert report.exhaustive
        assert report.histogram == expected == {1: 5, 2: 3}
        assert report.max == 2 and report.mean == Fraction(11, 8)
        assert format_census(report) == "n=2 sample=8 seed=0\npc=1 count=5\npc=2 count=3\nmax=2 mean=11/8\n"

    def test_deterministic(self):
        a = format_census(parallel_complexity_census(4, 30, seed=11))
        b = format_census(parallel_complexity_census(4, 30, seed=11))
        assert a == b

    def test_index_streams_are_independent(self):
        # sample i does not depend on how many samples came before it
        assert random_graph(5, 2, index=7) == random_graph(5, 2, index=7)
        assert len({random_graph(5, 2, index=i) for i in range(10)}) > 1

    def test_negative_distribution_is_loopless(self):
        for i in range(10):
            g = random_graph(4, 1, i, "negative")
            assert not any(g.has_loop(v) for v in g.labels)

    def test_errors(self):
        with pytest.raises(ComplexityCapError):
            parallel_complexity_census(11, 1, 0)
        with pytest.raises(ValueError):
            parallel_complexity_census(2, 0, 0)
        with pytest.raises(ValueError):
            parallel_complexity_census(2, 1, 0, distribution="zipf")


class TestGdrCheck:
    def test_one_edge(self):
        assert parallel_gdr_check(Graph(["a", "b"], BitMatrix(["01", "10"])), [("a", "b")])

    def test_disconnected_edges(self):
        g = Graph(["a", "b", "c", "d"], BitMatrix(["0100", "1000", "0001", "0010"]))
        assert parallel_gdr_check(g, [("a", "b"), ("c", "d")])

    def test_four_cycle(self):
        first = [Rule.gdr("v1", "v2"), Rule.gdr("v3", "v4")]
        verdict = True
        for order in (first, first[::-1]):
            try:
                apply_strategy(CYCLE4, order)
            except StrategyError:
                verdict = False
        assert parallel_gdr_check(CYCLE4, [("v1", "v2"), ("v3", "v4")]) == verdict

    def test_precondition_errors(self):
        with pytest.raises(GraphError):
            parallel_gdr_check(CYCLE4, [("v1", "v2"), ("v2", "v3")])
        with pytest.raises(GraphError):
            parallel_gdr_check(CYCLE4, [("v1", "v3")])
        with pytest.raises(GraphError):
            parallel_gdr_check(Graph.from_matrix([[1, 1], [1, 0]]), [("1", "2")])

    def test_census_is_a_deterministic_fraction(self):
        a = gdr_parallel_census(2, 20, seed=5)
        assert a == gdr_parallel_census(2, 20, seed=5)
        assert 0 <= a <= 1
