"""
Which construction handles which extreme shape
==============================================

Every extreme shape at a given class size is routed to one of a handful of
constructions.  This prints the routing table for n = 7 as a grid of
single-letter codes, one row per x (large plus intermediate vertices) and
one column per intermediate degree d.
"""

from hypergraphic import ExtremeSpec, large_degree, realize_extreme, small_degree, verify_realization
from hypergraphic import TripartiteDegreeSequence as T

n = 7
lo, hi = small_degree(n), large_degree(n)
letter = {"case1": "1", "case2a": "a", "case2b_i": "i", "case2b_ii": "I", "complemented": "c", "base_small_n": "b"}

print("d:  " + "".join(str(d % 10) for d in range(lo, hi + 1)))
for x in range(1, n + 1):
    row = ""
    for d in range(lo, hi + 1):
        spec = ExtremeSpec(n, x, d)
        h, tag = realize_extreme(spec)
        assert verify_realization(h, T.symmetric(spec.degrees()))
        row += letter[tag.value]
    print(f"x={x} {row}")

print("\n1 = direct, a = no intermediate, i/I = intermediate treated as small/large, c = via complement")
