"""
Reducibility posets
===================

Every reducible subset, tagged with its nullity.  The level-0 part (the
pivotal poset) already determines the graph.
"""

from gf2reduce import Graph, format_graph
from gf2reduce.poset import (
    format_poset,
    graph_from_pivotal_poset,
    hasse_cover_pairs,
    pivotal_poset,
    reducibility_poset,
)

g = Graph.from_matrix([[1, 0, 0], [0, 1, 1], [0, 1, 1]])
p = reducibility_poset(g)
print(format_poset(p), end="")
print(len(hasse_cover_pairs(p)), "cover relations")

r0 = pivotal_poset(g)
print("pivotal sets:", sorted(sorted(s) for s in r0))
print("rebuilt from them:")
print(format_graph(graph_from_pivotal_poset(g.labels, r0)), end="")
