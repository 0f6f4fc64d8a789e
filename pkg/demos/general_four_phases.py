"""
A general 3-uniform realization, phase by phase
===============================================

For n >= 45 vertices the realizer clears up to two extra vertices, splits
the rest into three classes, evens the class sums out and finishes with a
tripartite realization.  The plan records which edges came from where.
"""

from collections import Counter

from hypergraphic import gen_random_sequence, realize_hypergraph, verify_realization

seq = gen_random_sequence("general", 47, seed=7)
print("n =", len(seq), "degrees in", (min(seq), max(seq)), "sum", sum(seq))

h, plan = realize_hypergraph(seq)
for line in plan.summary()[:5]:
    print(line)

# every edge meets the classes in a way that names its phase
where = plan.class_assignment
shapes = Counter()
for e in h.edges:
    if any(v in plan.extra_vertices for v in e):
        shapes["touches an extra vertex"] += 1
    else:
        shapes[f"{len({where[v] for v in e})} classes"] += 1
print(dict(shapes))
print("verified:", bool(verify_realization(h, seq)))
