"""
Pivots and retrographs
======================

Pivoting by a pivotal set X shifts the pivotal poset by symmetric difference
with X.  Pivoting by everything gives the retrograph, whose induced
subgraphs are the retrographs of the reductions.
"""

from gf2reduce import BitMatrix, Graph, format_graph
from gf2reduce.graph import induced_subgraph
from gf2reduce.pivot import pivot_graph, retrograph, reverse_reductions
from gf2reduce.poset import pivotal_poset
from gf2reduce.reduction import reduce

g = Graph.from_matrix([[1, 0, 0], [0, 1, 1], [0, 1, 1]])
pg = pivot_graph(g, ["1", "2"])
print(format_graph(pg), end="")
print(sorted(sorted(s) for s in pivotal_poset(pg)))

# the retrograph "looks ahead" at the end of every reduction
h = Graph(["v1", "v2", "v3", "v4", "v5"], BitMatrix(["10011", "01111", "01100", "11011", "11010"]))
hr = retrograph(h)
print(format_graph(hr), end="")
for removed in (["v1"], ["v1", "v5"], ["v1", "v5", "v2", "v4"]):
    kept = [v for v in h.labels if v not in removed]
    same = retrograph(reduce(h, removed)) == induced_subgraph(hr, kept)
    print("removed", removed, "matches induced subgraph:", same)

# which two-vertex graphs reduce to a single loopless vertex?
a = Graph(["a"], BitMatrix([[0]]))
for cand in reverse_reductions(a, ["b"]):
    print(cand.adj.tolist())
