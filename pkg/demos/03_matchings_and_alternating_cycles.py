"""Matchings, alternating cycles, and uniquely restricted matchings.

A matching is uniquely restricted when no alternating cycle exists for
it - equivalently, when it is the only perfect matching on the vertices
it covers.  Both routes are available; they agree everywhere.
"""

from lmss import (
    Matching,
    count_perfect_matchings,
    enumerate_maximum_matchings,
    find_alternating_c4,
    find_alternating_cycle,
    fixture,
    has_unique_perfect_matching,
    is_uniquely_restricted,
    named_edges,
)

h = fixture("fig1_H")
print(h)
for pairs in [(("u", "v"), ("x", "w")), (("x", "y"), ("t", "v"))]:
    m = Matching.of(h, *pairs)
    cyc = find_alternating_cycle(h, m)
    print(f"  {m}: uniquely restricted? {is_uniquely_restricted(h, m)}"
          + (f"  alternating cycle {cyc}" if cyc else ""))

print("\nall maximum matchings of that graph:")
for m in enumerate_maximum_matchings(h):
    print("  ", m, "restricted:", is_uniquely_restricted(h, m))

# Unique perfect matchings come with the matching as a witness.
g = fixture("fig8_G1")
unique, witness = has_unique_perfect_matching(g)
print(f"\n{g}\nunique perfect matching? {unique}  witness: {witness}")
print("perfect matchings of a square:", count_perfect_matchings(fixture("fig8_G2")))

# In very well-covered graphs, an alternating cycle forces a chordless
# alternating square.  The ladder-with-chords graph shows both.
k33 = fixture("fig7_G3")
ne = named_edges("fig7_G3")
m = Matching(k33, (ne["e1"], ne["e3"], ne["e5"]))
print(f"\n{k33}")
print("alternating cycle:", find_alternating_cycle(k33, m))
print("chordless alternating square:", find_alternating_c4(k33, m))
