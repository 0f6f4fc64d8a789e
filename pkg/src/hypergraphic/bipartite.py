"""Bipartite and simple-graph degree sequence constructors (Havel-Hakimi style)."""

from __future__ import annotations

from typing import FrozenSet, Sequence, Tuple

from .core import BipartiteGraph, HypergraphError, NotGraphic, degree_sequence


def _largest_first(residual, count, exclude=None):
    # Indices of the `count` largest positive residuals; ties go to the lower index.
    order = sorted(
        (i for i, r in enumerate(residual) if r > 0 and i != exclude),
        key=lambda i: (-residual[i], i),
    )
    if len(order) < count:
        return None
    return order[:count]


def havel_hakimi_bipartite(left: Sequence[int], right: Sequence[int]) -> BipartiteGraph:
    """Realize ``(left, right)`` as a simple bipartite graph or raise NotGraphic.

    The largest unsatisfied left degree is joined to the currently largest
    right residuals, which is exactly the reduction of the bipartite
    Havel-Hakimi theorem; the sequence is graphic iff this never gets stuck.
    """
    left = degree_sequence(left) if left else ()
    right = degree_sequence(right) if right else ()
    if sum(left) != sum(right):
        raise NotGraphic(f"degree sums differ: {sum(left)} != {sum(right)}")
    res_left = list(left)
    res_right = list(right)
    edges = []
    for _ in range(len(left)):
        u = min(range(len(left)), key=lambda i: (-res_left[i], i))
        need = res_left[u]
        if need == 0:
            break
        partners = _largest_first(res_right, need)
        if partners is None:
            raise NotGraphic(f"left vertex {u} needs {need} partners, too few remain")
        for v in partners:
            res_right[v] -= 1
            edges.append((u, v))
        res_left[u] = -1  # done; never picked again
    if any(r > 0 for r in res_right):
        raise NotGraphic("right residual degrees left unsatisfied")
    return BipartiteGraph(len(left), len(right), edges)


def almost_regular_split(total: int, size: int) -> Tuple[int, ...]:
    """Degrees ``floor``/``ceil`` of ``total / size``, the ceilings first."""
    if size == 0:
        if total:
            raise HypergraphError("cannot spread a positive total over zero vertices")
        return ()
    q, r = divmod(total, size)
    return tuple(q + 1 if i < r else q for i in range(size))


def almost_regular_bipartite(n_left: int, n_right: int, total: int) -> BipartiteGraph:
    """Bipartite graph with ``total`` edges, almost regular on both sides.

    Left vertex i takes the next ``deg(i)`` right vertices cyclically after
    where vertex i-1 stopped, so right degrees also differ by at most one.
    """
    if total < 0 or total > n_left * n_right:
        raise HypergraphError(f"{total} edges do not fit in {n_left}x{n_right}")
    left = almost_regular_split(total, n_left)
    edges = []
    pos = 0
    for u, du in enumerate(left):
        for j in range(du):
            edges.append((u, (pos + j) % n_right))
        pos += du
    return BipartiteGraph(n_left, n_right, edges)


def d_plus_almost_regular_bipartite(n: int, d: int, k: int, count_k_plus_1: int) -> BipartiteGraph:
    """Realize ``(D, D)`` for ``D = (d, k, ..., k, k+1, ..., k+1)`` of length n."""
    if not 0 <= count_k_plus_1 <= n - 1:
        raise HypergraphError(f"count of k+1 entries must lie in 0..{n - 1}")
    if k < 0 or d < 0:
        raise HypergraphError("degrees must be non-negative")
    if count_k_plus_1 and k + 1 > n - 1:
        raise HypergraphError(f"k+1={k + 1} exceeds n-1={n - 1}")
    if k > n - 1:
        raise HypergraphError(f"k={k} exceeds n-1={n - 1}")
    if d > n:
        raise HypergraphError(f"d={d} exceeds n={n}")
    seq = (d,) + (k,) * (n - 1 - count_k_plus_1) + (k + 1,) * count_k_plus_1
    return havel_hakimi_bipartite(seq, seq)


def havel_hakimi_simple(degrees: Sequence[int]) -> FrozenSet[Tuple[int, int]]:
    """Simple graph with the given degrees (edges as ``(u, v)``, ``u < v``)."""
    res = list(degree_sequence(degrees))
    if sum(res) % 2:
        raise NotGraphic("odd degree sum")
    edges = set()
    while True:
        u = min(range(len(res)), key=lambda i: (-res[i], i))
        need = res[u]
        if need == 0:
            break
        partners = _largest_first(res, need, exclude=u)
        if partners is None:
            raise NotGraphic(f"vertex {u} needs {need} neighbours, too few remain")
        res[u] = 0
        for v in partners:
            res[v] -= 1
            edges.add((min(u, v), max(u, v)))
    return frozenset(edges)
