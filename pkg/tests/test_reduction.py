import pytest
from conftest import graph_and_subset, graphs
from hypothesis import assume, given
from oracles import (
    all_rules_by_description,
    all_strategies,
    minimal_reducible_sets,
    reduce_by_definition,
    reducible_by_definition,
    rule_by_description,
)

from gf2reduce import BitMatrix, Graph, MatrixFormatError
from gf2reduce.graph import induced_subgraph, nullity_of, rank_of
from gf2reduce.reduction import (
    NotReducibleError,
    Rule,
    RuleNotApplicableError,
    StrategyError,
    applicable_rules,
    apply_rule,
    apply_strategy,
    avoids_gnr,
    edge_after_reduction,
    format_strategy,
    gnr_count,
    is_reducible,
    parse_strategy,
    reduce,
    strategy_for,
)

GDR_EXAMPLE = [[0, 1, 1, 0], [1, 0, 1, 0], [1, 1, 0, 1], [0, 0, 1, 0]]


def edge(a="a", b="b"):
    return Graph([a, b], BitMatrix([[0, 1], [1, 0]]))


class TestIsReducible:
    def test_looped_singleton(self, tri, singular3):
        assert is_reducible(tri, ["v1"])
        assert is_reducible(singular3, ["3"])

    def test_loopless_non_isolated(self):
        assert not is_reducible(edge(), ["a"])

    def test_singular3_level_one_pair(self, singular3):
        assert is_reducible(singular3, ["2", "3"])

    @given(graph_and_subset(max_n=5))
    def test_matches_definition(self, gw):
        g, w = gw
        assert is_reducible(g, w) == reducible_by_definition(g, w)


class TestReduce:
    def test_tri(self, tri):
        out = reduce(tri, ["v1"])
        assert out.labels == ("v2", "v3")
        assert out.adj == BitMatrix([[0, 1], [1, 0]])

    def test_isolated_loopless(self, tri):
        g = Graph(tri.labels + ("z",), BitMatrix(["1110", "1100", "1010", "0000"]))
        assert reduce(g, ["z"]) == tri

    def test_singular3_full(self, singular3):
        assert reduce(singular3, ["1", "2", "3"]) == Graph.empty()
        assert gnr_count(singular3, ["1", "2", "3"]) == 1

    def test_error_names_witness(self):
        with pytest.raises(NotReducibleError) as exc:
            reduce(edge(), ["a"])
        assert exc.value.witness == "b"
        assert exc.value.vertices == ("a",)

    def test_empty_set_is_identity(self, five):
        assert reduce(five, []) == five

    @given(graph_and_subset(max_n=5))
    def test_matches_definition(self, gw):
        g, w = gw
        assume(reducible_by_definition(g, w))
        assert reduce(g, w) == reduce_by_definition(g, w)

    @given(graph_and_subset(max_n=6))
    def test_rank_additivity(self, gw):
        g, w = gw
        assume(is_reducible(g, w))
        out = reduce(g, w)
        assert rank_of(g, g.labels) == rank_of(g, w) + rank_of(out, out.labels)
        assert nullity_of(g, g.labels) - nullity_of(out, out.labels) == nullity_of(g, w)


class TestRules:
    def test_empty(self):
        assert applicable_rules(Graph.empty()) == []

    def test_single_edge(self):
        assert applicable_rules(edge()) == [Rule.gdr("a", "b")]

    def test_singular3(self, singular3):
        rules = applicable_rules(singular3)
        assert rules == [Rule.gpr("1"), Rule.gpr("2"), Rule.gpr("3")]
        assert [(r.kind, r.domain) for r in rules] == all_rules_by_description(singular3)

    def test_gpr_example(self, tri):
        assert apply_rule(tri, Rule.gpr("v1")).adj == BitMatrix([[0, 1], [1, 0]])

    def test_gdr_example(self):
        g = Graph.from_matrix(GDR_EXAMPLE)
        out = apply_rule(g, Rule.gdr("1", "2"))
        assert out.labels == ("3", "4")
        assert out.adj == BitMatrix([[0, 1], [1, 0]])
        assert out == reduce(g, ["1", "2"]) == rule_by_description(g, "gdr", ["1", "2"])

    def test_gnr(self):
        g = Graph(["a", "b", "c"], BitMatrix(["110", "110", "000"]))
        assert apply_rule(g, Rule.gnr("c")) == induced_subgraph(g, ["a", "b"])

    def test_not_applicable(self, tri):
        with pytest.raises(RuleNotApplicableError):
            apply_rule(tri, Rule.gnr("v1"))
        with pytest.raises(RuleNotApplicableError):
            apply_rule(tri, Rule.gdr("v1", "v2"))
        with pytest.raises(RuleNotApplicableError):
            apply_rule(edge(), Rule.gpr("a"))

    def test_rule_validation(self):
        with pytest.raises(ValueError):
            Rule("gdr", ("a",))
        with pytest.raises(ValueError):
            Rule("xyz", ("a",))
        assert str(Rule.gdr("a", "b")) == "gdr a b"

    @given(graphs(max_n=5))
    def test_rules_match_wording(self, g):
        rules = applicable_rules(g)
        assert sorted((r.kind, r.domain) for r in rules) == sorted(all_rules_by_description(g))
        for r in rules:
            out = apply_rule(g, r)
            assert out == reduce(g, r.domain)
            assert out == rule_by_description(g, r.kind, list(r.domain))

    @given(graphs(max_n=5))
    def test_minimal_sets_are_rule_domains(self, g):
        assert {frozenset(r.domain) for r in applicable_rules(g)} == minimal_reducible_sets(g)


class TestStrategies:
    def test_empty_strategy(self, five):
        assert apply_strategy(five, []) == five

    def test_looped_then_double_sequence(self, five):
        steps = [Rule.gpr("v1"), Rule.gpr("v5"), Rule.gdr("v2", "v4")]
        assert apply_strategy(five, steps) == reduce(five, ["v1", "v2", "v4", "v5"])

    def test_strategy_error_reports_step(self, tri):
        with pytest.raises(StrategyError) as exc:
            apply_strategy(tri, [Rule.gpr("v1"), Rule.gpr("v2")])
        assert exc.value.step == 1
        assert "step 2" in str(exc.value)

    def test_singular3_all_strategies_use_one_gnr(self, singular3):
        finished = [(tally, h) for dom, tally, h in all_strategies(singular3) if len(dom) == 3]
        assert finished
        assert {tally for tally, _ in finished} == {1}
        assert all(h == Graph.empty() for _, h in finished)

    def test_strategy_for_examples(self, singular3):
        assert strategy_for(singular3, []) == []
        one = Graph(["x"], BitMatrix([[1]]))
        assert strategy_for(one, ["x"]) == [Rule.gpr("x")]
        s = strategy_for(singular3, ["1", "2", "3"])
        assert sorted(r.kind for r in s).count("gnr") == 1 and len(s) == 3
        assert apply_strategy(singular3, s) == Graph.empty()

    def test_strategy_for_not_reducible(self):
        with pytest.raises(NotReducibleError):
            strategy_for(edge(), ["a"])

    def test_gnr_count_examples(self, singular3):
        assert gnr_count(singular3, []) == 0
        assert gnr_count(Graph(["z"], BitMatrix([[0]])), ["z"]) == 1

    def test_avoids_gnr(self, singular3):
        assert not avoids_gnr(singular3)
        assert avoids_gnr(Graph.from_matrix([[1, 0, 0], [0, 1, 1], [0, 1, 0]]))
        assert avoids_gnr(Graph.empty())

    @given(graph_and_subset(max_n=6))
    def test_strategy_for_realises_reduce(self, gw):
        g, w = gw
        assume(is_reducible(g, w))
        s = strategy_for(g, w)
        assert set().union(*(r.domain for r in s)) == set(w)
        assert apply_strategy(g, s) == reduce(g, w)
        assert sum(r.kind == "gnr" for r in s) == gnr_count(g, w) == nullity_of(g, w)

    @given(graphs(max_n=4))
    def test_every_strategy_tallies_nullity(self, g):
        for dom, tally, h in all_strategies(g):
            assert tally == nullity_of(g, dom)
            assert h == reduce(g, dom)


class TestEdgeAfterReduction:
    def test_tri(self, tri):
        assert edge_after_reduction(tri, ["v1"], "v2", "v3")
        assert not edge_after_reduction(tri, ["v1"], "v2", "v2")

    def test_empty_w(self, tri):
        assert edge_after_reduction(tri, [], "v1", "v1") == tri.adjacent("v1", "v1")

    def test_vertex_in_w_rejected(self, tri):
        with pytest.raises(ValueError):
            edge_after_reduction(tri, ["v1"], "v1", "v2")

    @given(graph_and_subset(max_n=5))
    def test_agrees_with_reduce(self, gw):
        g, w = gw
        assume(is_reducible(g, w))
        out = reduce(g, w)
        for v in out.labels:
            for u in out.labels:
                assert edge_after_reduction(g, w, v, u) == bool(out.adjacent(v, u))


class TestStrategyFormat:
    def test_round_trip(self):
        s = [Rule.gpr("v1"), Rule.gdr("v2", "v4"), Rule.gnr("v3")]
        text = format_strategy(s)
        assert text == "gpr v1\ngdr v2 v4\ngnr v3\n"
        assert parse_strategy(text) == s

    def test_bad_line(self):
        with pytest.raises(MatrixFormatError) as exc:
            parse_strategy("gpr v1\ngdr v2\n")
        assert exc.value.line == 2
