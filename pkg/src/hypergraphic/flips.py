"""Balancing hinge flips and the extreme-to-target transformation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .core import (
    CLASSES,
    Hypergraph,
    HypergraphError,
    InvariantViolation,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    VertexRef,
    degree_sequence_of,
    degree_sequence_of_tripartite,
)


class FlipError(HypergraphError):
    code = "flip"


class FlipStep(NamedTuple):
    cls: Optional[str]
    source: VertexRef
    target: VertexRef
    removed: Tuple[int, int, int]
    added: Tuple[int, int, int]


@dataclass
class FlipTrace:
    """Flips applied, in order, after relabelling the start realization.

    ``relabel[k][old] = new`` is the per-class permutation that aligned the
    extreme realization with the target (one entry for a plain hypergraph);
    ``start`` holds the degrees right after relabelling.
    """

    steps: List[FlipStep] = field(default_factory=list)
    relabel: Tuple[Tuple[int, ...], ...] = ()
    start: Tuple[Tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def balancing_flip_sequence(d: Sequence[int], i: int, j: int) -> Tuple[int, ...]:
    d = list(d)
    if i == j or d[i] <= d[j]:
        raise FlipError(f"flip {i}->{j} on degrees {d[i]}, {d[j]} is not balancing")
    d[i] -= 1
    d[j] += 1
    return tuple(d)


class _TripartiteWork:
    """Mutable copy of a tripartite hypergraph indexed by vertex for fast flips."""

    def __init__(self, h: TripartiteHypergraph):
        self.sizes = h.sizes
        self.edges = set(h.edges)
        # co[k][v]: pairs completing an edge with vertex v of class k, in class order
        self.co = [[set() for _ in range(s)] for s in h.sizes]
        for a, b, c in h.edges:
            self.co[0][a].add((b, c))
            self.co[1][b].add((a, c))
            self.co[2][c].add((a, b))

    @staticmethod
    def _edge(k, v, pair):
        if k == 0:
            return (v, pair[0], pair[1])
        if k == 1:
            return (pair[0], v, pair[1])
        return (pair[0], pair[1], v)

    def flip(self, k: int, src: int, dst: int) -> FlipStep:
        co = self.co[k]
        if src == dst or len(co[src]) <= len(co[dst]):
            raise FlipError(
                f"{CLASSES[k]}{src} (deg {len(co[src])}) -> {CLASSES[k]}{dst} (deg {len(co[dst])}) is not balancing"
            )
        pair = min(co[src] - co[dst])
        old, new = self._edge(k, src, pair), self._edge(k, dst, pair)
        self.edges.remove(old)
        self.edges.add(new)
        co[src].remove(pair)
        co[dst].add(pair)
        for kk in range(3):
            if kk == k:
                continue
            w = old[kk]
            self.co[kk][w].remove(tuple(old[t] for t in range(3) if t != kk))
            self.co[kk][w].add(tuple(new[t] for t in range(3) if t != kk))
        return FlipStep(CLASSES[k], VertexRef(CLASSES[k], src), VertexRef(CLASSES[k], dst), old, new)

    def freeze(self) -> TripartiteHypergraph:
        return TripartiteHypergraph._trusted(self.sizes, frozenset(self.edges))


class _GeneralWork:
    def __init__(self, h: Hypergraph):
        self.n = h.n
        self.edges = set(h.edges)
        self.link = [set() for _ in range(h.n)]
        for e in h.edges:
            for v in e:
                self.link[v].add(tuple(u for u in e if u != v))

    def flip(self, src: int, dst: int) -> FlipStep:
        link = self.link
        if src == dst or len(link[src]) <= len(link[dst]):
            raise FlipError(f"v{src} (deg {len(link[src])}) -> v{dst} (deg {len(link[dst])}) is not balancing")
        # the shared pair must avoid both endpoints
        candidates = [p for p in link[src] - link[dst] if dst not in p]
        pair = min(candidates)
        old = tuple(sorted((src,) + pair))
        new = tuple(sorted((dst,) + pair))
        self.edges.remove(old)
        self.edges.add(new)
        link[src].remove(pair)
        link[dst].add(pair)
        for w in pair:
            link[w].remove(tuple(u for u in old if u != w))
            link[w].add(tuple(u for u in new if u != w))
        return FlipStep(None, VertexRef(None, src), VertexRef(None, dst), old, new)

    def freeze(self) -> Hypergraph:
        h = Hypergraph.__new__(Hypergraph)
        object.__setattr__(h, "n", self.n)
        object.__setattr__(h, "edges", frozenset(self.edges))
        return h


def apply_balancing_flip(h, source: VertexRef, target: VertexRef):
    """One balancing hinge flip moving a degree unit from ``source`` to ``target``."""
    if isinstance(h, TripartiteHypergraph):
        if source.cls not in CLASSES or source.cls != target.cls:
            raise FlipError("tripartite flips need two vertices of the same class")
        work = _TripartiteWork(h)
        step = work.flip(CLASSES.index(source.cls), source.index, target.index)
    else:
        if source.cls is not None or target.cls is not None:
            raise FlipError("plain hypergraph vertices carry no class")
        work = _GeneralWork(h)
        step = work.flip(source.index, target.index)
    return work.freeze(), step


def reverse_flip_path(target: Sequence[int], lo: int, hi: int):
    """Push ``target`` apart to an extreme shape with reverse hinge flips.

    While two or more values lie strictly inside (lo, hi), raise the largest
    (lowest index on ties) and lower the smallest (highest index on ties).
    Returns the final labelled extreme vector and the ``(up, down)`` moves;
    replayed backwards these are balancing flips from the extreme to the target.
    """
    cur = list(target)
    moves = []
    inner = {i for i, v in enumerate(cur) if lo < v < hi}
    while len(inner) >= 2:
        up = min(inner, key=lambda i: (-cur[i], i))
        down = min(inner, key=lambda i: (cur[i], -i))
        cur[up] += 1
        cur[down] -= 1
        moves.append((up, down))
        for i in (up, down):
            if not lo < cur[i] < hi:
                inner.discard(i)
    return cur, moves


def _check_extreme(values: Sequence[int]):
    lo, hi = min(values), max(values)
    inner = [v for v in values if lo < v < hi]
    if len(inner) > 1:
        raise FlipError(f"start degrees {list(values)} are not of extreme shape")
    return lo, hi


def _align(current: Sequence[int], wanted: Sequence[int]) -> Tuple[int, ...]:
    # permutation old->new sending the vertex of each current degree onto a wanted slot
    if sorted(current) != sorted(wanted):
        raise InvariantViolation(f"{sorted(current)} and {sorted(wanted)} differ as multisets")
    src = sorted(range(len(current)), key=lambda i: (-current[i], i))
    dst = sorted(range(len(wanted)), key=lambda i: (-wanted[i], i))
    perm = [0] * len(current)
    for s, t in zip(src, dst):
        perm[s] = t
    return tuple(perm)


def _plan(current: Sequence[int], target: Sequence[int], label: str):
    if len(current) != len(target):
        raise FlipError(f"class {label}: {len(current)} vertices but {len(target)} target degrees")
    if sum(current) != sum(target):
        raise FlipError(f"class {label}: degree sum {sum(current)} differs from target {sum(target)}")
    lo, hi = _check_extreme(current)
    for i, t in enumerate(target):
        if not lo <= t <= hi:
            raise FlipError(f"class {label}: target degree {t} at {i} outside [{lo}, {hi}]")
    start, moves = reverse_flip_path(target, lo, hi)
    return _align(current, start), tuple(start), moves


def transform_to_target(h, target):
    """Morph a realization of an extreme sequence into one of ``target``.

    Each class is first relabelled so its extreme degrees sit where the
    reverse path ends, then the path is replayed backwards as balancing
    flips.  Returns ``(new_hypergraph, FlipTrace)``.
    """
    if isinstance(h, TripartiteHypergraph):
        target = TripartiteDegreeSequence(*(tuple(t) for t in target))
        current = degree_sequence_of_tripartite(h)
        plans = [_plan(current[k], target[k], CLASSES[k]) for k in range(3)]
        perms = tuple(p[0] for p in plans)
        work = _TripartiteWork(h.relabel(perms))
        trace = FlipTrace(relabel=perms, start=tuple(p[1] for p in plans))
        for k, (_, _, moves) in enumerate(plans):
            for up, down in reversed(moves):
                trace.steps.append(work.flip(k, up, down))
        return work.freeze(), trace
    target = tuple(target)
    perm, start, moves = _plan(degree_sequence_of(h), target, "v")
    relabelled = Hypergraph(h.n, (tuple(perm[v] for v in e) for e in h.edges))
    work = _GeneralWork(relabelled)
    trace = FlipTrace(relabel=(perm,), start=(start,))
    for up, down in reversed(moves):
        trace.steps.append(work.flip(up, down))
    return work.freeze(), trace


def l1(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))
