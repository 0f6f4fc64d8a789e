"""
The rotational k-regular construction
=====================================

Vertex a_i meets (b_{i+r}, c_{i+r+s}) for the first k offset pairs (r, s).
Shifting every index by one maps the edge set to itself.
"""

import numpy as np

from hypergraphic import regular_tripartite

n, k = 5, 12
h = regular_tripartite(n, k)
cube = np.zeros((n, n, n), dtype=int)
for a, b, c in h.edges:
    cube[a, b, c] = 1

print("edges:", len(h), "= n * k =", n * k)
print("A degrees:", cube.sum(axis=(1, 2)))
print("B degrees:", cube.sum(axis=(0, 2)))
print("C degrees:", cube.sum(axis=(0, 1)))
print("slice a_0 (rows b, columns c):")
print(cube[0])
print("invariant under the shift:", np.array_equal(np.roll(cube, 1, axis=(0, 1, 2)), cube))
