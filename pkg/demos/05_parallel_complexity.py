"""
Parallel complexity
===================

Rules may fire together when every ordering of them works and gives the
same graph.  The parallel complexity is the fewest such rounds needed to
empty the graph, found by breadth-first search.
"""

from gf2reduce import BitMatrix, Graph
from gf2reduce.parallel import (
    format_census,
    gdr_parallel_census,
    parallel_complexity,
    parallel_complexity_census,
    parallel_gdr_check,
    parallel_steps,
)

g = Graph(["v1", "v2", "v3"], BitMatrix([[1, 1, 1], [1, 1, 0], [1, 0, 1]]))
for step in parallel_steps(g):
    print([str(r) for r in step])
print("parallel complexity:", parallel_complexity(g))

# the 4-cycle with two opposite double rules
c4 = Graph(["v1", "v2", "v3", "v4"], BitMatrix(["0101", "1010", "0101", "1010"]))
print("4-cycle double rules in parallel:", parallel_gdr_check(c4, [("v1", "v2"), ("v3", "v4")]))

print(format_census(parallel_complexity_census(4, 2000, seed=1)), end="")
print("random 3-edge double-rule families that parallelise:", gdr_parallel_census(3, 200, seed=1))
