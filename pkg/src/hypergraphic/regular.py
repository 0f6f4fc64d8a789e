"""Rotational k-regular tripartite hypergraphs and almost-regular configurations.

Everything here works on ``n + n + n`` vertices where the three classes are
treated identically: a degree vector given for "a class" applies to all
three.  :class:`SymmetricBuilder` keeps that symmetry while edges are
exhibited, which is what lets the almost-regular residual blocks be finished
with aligned diagonal deletions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .bipartite import havel_hakimi_bipartite
from .core import (
    HypergraphError,
    InvariantViolation,
    NotGraphic,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
)


def regular_edges(n: int, k: int):
    """Edges of the rotational k-regular construction, 0-indexed.

    Vertex a_i takes rows r = 0, 1, ... of ``(a_i, b_{i+r}, c_{i+r+s})`` for
    s = 0..n-1, stopping after k edges; a final partial row is empty when
    n divides k.
    """
    if not 0 <= k <= n * n:
        raise HypergraphError(f"k={k} must lie in 0..{n * n}")
    out = []
    for i in range(n):
        for t in range(k):
            r, s = divmod(t, n)
            out.append((i, (i + r) % n, (i + r + s) % n))
    return out


def regular_tripartite(n: int, k: int) -> TripartiteHypergraph:
    return TripartiteHypergraph._trusted((n, n, n), frozenset(regular_edges(n, k)))


@dataclass(frozen=True)
class AlmostRegularSpec:
    n: int
    k: int
    count_k_plus_1: int

    def __post_init__(self):
        if not 0 <= self.count_k_plus_1 <= self.n:
            raise HypergraphError(f"count_k_plus_1 must lie in 0..{self.n}")
        top = self.k + 1 if self.count_k_plus_1 else self.k
        if self.k < 0 or top > self.n * self.n:
            raise HypergraphError(f"degree {top} exceeds n^2={self.n * self.n}")

    def degrees(self) -> Tuple[int, ...]:
        c = self.count_k_plus_1
        return (self.k + 1,) * c + (self.k,) * (self.n - c)


def almost_regular_edges(values: Sequence[int]):
    """Edges realizing ``(values, values, values)`` for an almost-regular vector.

    Builds the (k+1)-regular rotation and removes the diagonal triple
    ``(i, i, i)`` for each index whose value is k; that triple is always
    the first edge of a_i in the rotation.
    """
    m = len(values)
    if m == 0:
        return []
    lo, hi = min(values), max(values)
    if hi - lo > 1:
        raise HypergraphError(f"values {list(values)} are not almost regular")
    if hi > m * m:
        raise HypergraphError(f"degree {hi} exceeds {m}^2")
    edges = regular_edges(m, hi)
    if lo == hi:
        return edges
    drop = {(i, i, i) for i, v in enumerate(values) if v == lo}
    return [e for e in edges if e not in drop]


def almost_regular_tripartite(spec: AlmostRegularSpec) -> TripartiteHypergraph:
    """Degree k+1 on the first ``count_k_plus_1`` indices of every class, k elsewhere."""
    if spec.count_k_plus_1 == 0:
        return regular_tripartite(spec.n, spec.k)
    n = spec.n
    return TripartiteHypergraph._trusted((n, n, n), frozenset(almost_regular_edges(spec.degrees())))


class SymmetricBuilder:
    """Exhibit edges on n+n+n vertices while keeping the three classes' residuals equal.

    ``res[i]`` is the residual (prescribed minus exhibited) degree of index i,
    shared by a_i, b_i and c_i.  A "star" on hub index u uses one bipartite
    graph G on partner indices P; the A-copy contributes ``(a_u, b_p, c_q)``
    and the B- and C-copies are the cyclic rotations, so every class loses
    ``deg_left + deg_right`` at each partner.
    """

    def __init__(self, n: int, residual: Sequence[int]):
        self.n = n
        self.res = list(residual)
        self.edges = set()

    def _add(self, e):
        if e in self.edges:
            raise InvariantViolation(f"edge {e} exhibited twice")
        self.edges.add(e)

    def spread(self, partners: Sequence[int], amount: int, cap: int):
        """Remove ``amount`` units from the largest residuals, at most ``cap`` per partner.

        Ties prefer the partner that has given up least so far, then the lower
        index; starting from an almost-regular block this keeps both the new
        residuals and the taken amounts almost regular.
        """
        taken = {p: 0 for p in partners}
        for _ in range(amount):
            best = None
            for p in partners:
                if taken[p] >= cap:
                    continue
                key = (taken[p] - self.res[p], taken[p], p)
                if best is None or key < best[0]:
                    best = (key, p)
            if best is None:
                raise InvariantViolation(f"cannot spread {amount} over {list(partners)} with cap {cap}")
            taken[best[1]] += 1
        return taken

    @staticmethod
    def split(taken: Dict[int, int], partners: Sequence[int]):
        g, h = [], []
        flip = False
        for p in partners:
            q, r = divmod(taken[p], 2)
            if r:
                g.append(q + (0 if flip else 1))
                h.append(q + (1 if flip else 0))
                flip = not flip
            else:
                g.append(q)
                h.append(q)
        return g, h

    def star(self, hub: int, partners: Sequence[int], g: Sequence[int], h: Sequence[int]):
        try:
            graph = havel_hakimi_bipartite(g, h)
        except NotGraphic as exc:
            raise InvariantViolation(f"star on hub {hub}: {exc} (g={list(g)}, h={list(h)})") from None
        for p, q in graph.edges:
            bp, cq = partners[p], partners[q]
            self._add((hub, bp, cq))
            self._add((cq, hub, bp))
            self._add((bp, cq, hub))
        for idx, p in enumerate(partners):
            self.res[p] -= g[idx] + h[idx]
        self.res[hub] -= len(graph.edges)

    def exhibit(self, hub: int, partners: Sequence[int], count: int, fixed: Optional[Dict[int, int]] = None):
        """Give the hub ``count`` edges into partner pairs, flattening partner residuals.

        ``fixed`` pins the per-side degree of chosen partners (used to hand an
        exact share to an intermediate vertex).
        """
        if count == 0:
            return
        partners = list(partners)
        fixed = fixed or {}
        rest = [p for p in partners if p not in fixed]
        free = count - sum(fixed.values())
        if free < 0:
            raise InvariantViolation("fixed shares exceed the star size")
        taken = self.spread(rest, 2 * free, 2 * len(partners))
        g, h = self.split(taken, rest)
        gi, hi = dict(zip(rest, g)), dict(zip(rest, h))
        for p, f in fixed.items():
            gi[p] = hi[p] = f
        self.star(hub, partners, [gi[p] for p in partners], [hi[p] for p in partners])

    def pairs(self, hub: int, partners: Sequence[int], count: int):
        """For each two-class combination of the hub's copies add ``count`` edges.

        The third vertex comes from the remaining class; the ``count``
        highest-residual partners are used, the same ones in every class.
        """
        if count == 0:
            return
        if count > len(partners):
            raise InvariantViolation(f"{count} pair edges need distinct partners, only {len(partners)}")
        chosen = sorted(partners, key=lambda p: (-self.res[p], p))[:count]
        for t in chosen:
            self._add((hub, hub, t))
            self._add((t, hub, hub))
            self._add((hub, t, hub))
            self.res[t] -= 1
        self.res[hub] -= 2 * count

    def triple(self, hub: int):
        self._add((hub, hub, hub))
        self.res[hub] -= 1

    def block(self, indices: Sequence[int]):
        """Finish the residuals on ``indices`` with an almost-regular tripartite block."""
        indices = list(indices)
        values = [self.res[i] for i in indices]
        if not indices or max(values) == 0:
            return
        try:
            local = almost_regular_edges(values)
        except HypergraphError as exc:
            raise InvariantViolation(f"residual block {values}: {exc}") from None
        for i, j, k in local:
            self._add((indices[i], indices[j], indices[k]))
        for i in indices:
            self.res[i] = 0

    def hypergraph(self) -> TripartiteHypergraph:
        n = self.n
        return TripartiteHypergraph._trusted((n, n, n), frozenset(self.edges))


def clear_intermediate_vertices(n: int, d: int, k: int, count_k_plus_1: int):
    """Exhibit edges that use up the degree-d vertex (index 0) of each class.

    Per class the sequence is ``(d, k, ..., k, k+1, ..., k+1)``.  Returns the
    exhibited hypergraph and the residual sequence, in which the cleared
    vertices are 0 and the others are almost regular.
    """
    if not 0 <= d <= n * n:
        raise HypergraphError(f"d={d} must lie in 0..{n * n}")
    if k < 2 * n - 1:
        raise HypergraphError(f"k={k} must be at least 2n-1={2 * n - 1}")
    if not 0 <= count_k_plus_1 <= n - 1:
        raise HypergraphError(f"count_k_plus_1 must lie in 0..{n - 1}")
    residual = [d] + [k] * (n - 1 - count_k_plus_1) + [k + 1] * count_k_plus_1
    builder = SymmetricBuilder(n, residual)
    clear_vertex(builder, 0, list(range(1, n)))
    return builder.hypergraph(), TripartiteDegreeSequence.symmetric(builder.res)


def clear_vertex(builder: SymmetricBuilder, hub: int, others: List[int]):
    """The three-step clearing recipe: partner-pair star, pair edges, parity triple."""
    m = len(others)
    first = min(builder.res[hub], m * m)
    builder.exhibit(hub, others, first)
    rest = builder.res[hub]
    if rest > 0:
        builder.pairs(hub, others, rest // 2)
        if rest % 2:
            builder.triple(hub)
