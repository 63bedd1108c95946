"""
Graph reductions and the three rules
====================================

A vertex set W is reducible when the columns of the adjacency matrix on W
already span what the rest of the graph sees of W.  Reducing removes W and
rewrites the remaining adjacency.
"""

from gf2reduce import BitMatrix, Graph, format_graph
from gf2reduce.reduction import applicable_rules, gnr_count, is_reducible, reduce, strategy_for

g = Graph(["v1", "v2", "v3"], BitMatrix([[1, 1, 1], [1, 1, 0], [1, 0, 1]]))
print(format_graph(g))

print("{v1} reducible:", is_reducible(g, ["v1"]))
print("reduced along {v1}:")
print(format_graph(reduce(g, ["v1"])))

# the minimal reducible sets are exactly the domains of the applicable rules
print("rules:", [str(r) for r in applicable_rules(g)])

# a singular example: every way of emptying it uses one negative rule
h = Graph.from_matrix([[1, 0, 0], [0, 1, 1], [0, 1, 1]])
s = strategy_for(h, h.labels)
print("strategy:", [str(r) for r in s])
print("gnr count:", gnr_count(h, h.labels))
