"""
Where the band stops being enough
=================================

At 6+6+6 vertices the band [2n^2/7, 5n^2/7] is roughly [10.3, 25.7].
Degrees 9 and 27 fall just outside it, and the exhaustive oracle shows
that outside the band graphicality can go either way.  The last part
solves for the c at which the two positive roots of a cubic merge.
"""

import time

from hypergraphic import TripartiteDegreeSequence as T
from hypergraphic import conjectured_constant, cubic_positive_roots, oracle_tripartite

for d in [(9, 27, 27, 27, 27, 27), (9, 9, 27, 27, 27, 27)]:
    t0 = time.perf_counter()
    r = oracle_tripartite(T.symmetric(d))
    print(d, "graphic" if r.graphic else "not graphic",
          f"({r.nodes_explored} nodes, {time.perf_counter() - t0:.3f}s)")

# z^3 = (1 - c) z - 2c (1 - z) has two positive roots while c is small;
# they merge at the constant and disappear after it
for c in (0.1, 0.2, 0.25, 0.27):
    print(f"c={c:<5} positive roots {cubic_positive_roots(c)}")
c = conjectured_constant()
print(f"double root at c = {c:.9f}")
print("c=0.3 positive roots:", cubic_positive_roots(0.3))
