"""
Legal strings and the command line
==================================

A double-occurrence word gives a graph: interlocked letters are adjacent,
and a letter seen in both orientations carries a loop.  The same operations
are reachable from the ``gf2reduce`` command.
"""

import io

from gf2reduce import format_graph
from gf2reduce.cli import run, to_dot
from gf2reduce.graph import from_legal_string

for word in ("a b a b", "a a b b", "a b b a", "a b -a b"):
    g = from_legal_string(word)
    print(f"{word!r:12} edge={bool(g.adjacent('a', 'b'))} loops={[v for v in g.labels if g.has_loop(v)]}")

g = from_legal_string("1 2 -3 1 3 2")
print(format_graph(g), end="")
print(to_dot(g), end="")

out = io.StringIO()
run(["parallel-census", "--n", "3", "--sample", "50", "--seed", "2"], stdout=out)
print(out.getvalue(), end="")
