"""Graphs, vertex sets, neighbourhoods, and the edge-list text format.

Everything in the library runs on immutable bitmask graphs capped at 16
vertices, which keeps exhaustive subset scans cheap enough to be the
default way of computing anything.
"""

from lmss import (
    closed_neighborhood,
    corona,
    complete,
    cycle,
    fixture,
    girth,
    induced_subgraph,
    neighborhood,
    parse_edge_list,
    path,
    serialize,
)

# Build graphs from generators or edge-list text.
p4 = path(4).with_labels(("a", "b", "c", "d"))
print("P4:", p4)
print("parsed:", parse_edge_list("3\n0 1\n1 2\n"))

# Vertex sets are created from labels (or indices) and behave like sets.
g = fixture("fig2_G")
s = g.set_of("b", "d")
print(f"\n{g}")
print(f"N({s}) =", neighborhood(g, s))
print(f"N[{s}] =", closed_neighborhood(g, s))

# Induced subgraphs come with the re-indexing map back to the parent.
h = fixture("fig3_H")
sub, back = induced_subgraph(h, h.set_of("y", "t", "v", "x"))
print(f"\nsubgraph on N[{{y,t}}] of {h}:")
print("  ", sub, " map:", back, "-> a plain square")

# Girth: length of a shortest cycle; forests have none.
print("\ngirth of the 7-cycle:", girth(cycle(7)))
print("girth of a path:", girth(path(5)))

# The corona construction glues one graph onto every vertex of another.
base = path(3)
c = corona(base, [complete(2)] * base.n)
print("\ncorona of P3 with triangles-to-be:", c)
print("serialized:\n" + serialize(c))
