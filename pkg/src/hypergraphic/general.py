"""Realizing general 3-uniform sequences in four phases.

Phase 1 satisfies the n mod 3 "extra" vertices with edges lifted from a
simple graph.  Phase 2 splits the rest into three equal classes with close
degree sums and adds at most one edge so the sums agree mod 3.  Phase 3
evens out the sums with edges inside a single class.  Phase 4 realizes the
leftover as a tripartite hypergraph.  The four edge types are told apart by
how they meet the classes, so the phases can never produce the same edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .bipartite import havel_hakimi_simple
from .core import (
    CLASSES,
    Hypergraph,
    InvariantViolation,
    OutOfDomain,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    degree_sequence,
    verify_realization,
)
from .regular import regular_tripartite
from .flips import FlipTrace
from .tripartite import realize_tripartite

MIN_VERTICES = 45


def general_bounds(n: int) -> Tuple[int, int]:
    """Integer degree window: ceil(2m^2/7) + 4*ceil(n/5) + 1 .. floor(5m^2/7), m = n // 3."""
    m = n // 3
    r = -(-n // 5)
    return -(-2 * m * m // 7) + 4 * r + 1, 5 * m * m // 7


def check_general_domain(seq: Sequence[int]) -> int:
    n = len(seq)
    if n < MIN_VERTICES:
        raise OutOfDomain(f"n={n} is below {MIN_VERTICES}", "n_below_45")
    lo, hi = general_bounds(n)
    for i, v in enumerate(seq):
        if v < lo:
            raise OutOfDomain(f"v{i}: degree {v} below {lo}", "below_lower_bound")
        if v > hi:
            raise OutOfDomain(f"v{i}: degree {v} above {hi}", "above_upper_bound")
    if sum(seq) % 3:
        raise OutOfDomain(f"degree sum {sum(seq)} is not divisible by 3", "sum_not_divisible_by_3")
    return n


@dataclass
class PhasePlan:
    """Where every edge of a general realization came from."""

    extra_vertices: Tuple[int, ...] = ()
    classes: Tuple[Tuple[int, ...], ...] = ()
    phase1_edges: FrozenSet[Tuple[int, int, int]] = frozenset()
    phase2_edge: Optional[Tuple[int, int, int]] = None
    phase3_edges: FrozenSet[Tuple[int, int, int]] = frozenset()
    phase4_edges: FrozenSet[Tuple[int, int, int]] = frozenset()
    swaps: int = 0
    class_sums: Tuple[int, ...] = ()
    # flips of the phase-4 tripartite step, in class-local indices
    phase4_trace: Optional[FlipTrace] = None

    @property
    def class_assignment(self) -> Dict[int, str]:
        return {v: CLASSES[k] for k, vs in enumerate(self.classes) for v in vs}

    def summary(self) -> List[str]:
        lines = [
            f"extra vertices: {list(self.extra_vertices)}",
            f"phase 1: {len(self.phase1_edges)} edges",
            f"phase 2: {self.swaps} swaps, class sums {list(self.class_sums)}, "
            f"parity edge {self.phase2_edge if self.phase2_edge else 'none'}",
            f"phase 3: {len(self.phase3_edges)} edges",
            f"phase 4: {len(self.phase4_edges)} edges",
        ]
        for k, vs in enumerate(self.classes):
            lines.append(f"class {CLASSES[k]}: {' '.join(map(str, vs))}")
        return lines


def _sorted_edge(e):
    return tuple(sorted(e))


def phase1_satisfy_extras(seq: Sequence[int]):
    """Clear the n mod 3 minimum-degree vertices.

    Returns ``(edges, residual, extras)``; ``residual`` is indexed like
    ``seq`` with zeros at the extras.
    """
    seq = list(degree_sequence(seq))
    n = len(seq)
    extras = tuple(sorted(sorted(range(n), key=lambda v: (seq[v], v))[: n % 3]))
    res = list(seq)
    if not extras:
        return frozenset(), tuple(res), extras
    rest = [v for v in range(n) if v not in extras]
    r = -(-n // 5)
    degs = [r] * len(rest)
    if len(rest) * r % 2:
        degs[-1] -= 1
    graph = [(rest[i], rest[j]) for i, j in havel_hakimi_simple(degs)]
    edges = set()
    for v in extras:
        if res[v] > len(graph):
            raise InvariantViolation(f"extra vertex {v} needs {res[v]} lifts, graph has {len(graph)} edges")
        free = set(graph)
        for _ in range(res[v]):
            u, w = max(free, key=lambda e: (res[e[0]] + res[e[1]], -e[0], -e[1]))
            free.remove((u, w))
            edges.add(_sorted_edge((v, u, w)))
            res[u] -= 1
            res[w] -= 1
        res[v] = 0
    return frozenset(edges), tuple(res), extras


class Split(NamedTuple):
    classes: Tuple[Tuple[int, ...], ...]
    edge: Optional[Tuple[int, int, int]]
    residual: TripartiteDegreeSequence
    swaps: int


def _spread(sums):
    # 3 * sum |x_i - x| with x the mean, kept integral
    total = sum(sums)
    return sum(abs(3 * s - total) for s in sums)


def phase2_split_and_parity(residual: Sequence[int], extras: Sequence[int] = (), initial=None) -> Split:
    """Three equal classes with close sums, then at most one edge to align sums mod 3.

    The starting split is snake order by descending degree unless ``initial``
    (three vertex lists) is given; swaps then run until the sums are close.
    """
    active = [v for v in range(len(residual)) if v not in set(extras)]
    if len(active) % 3:
        raise InvariantViolation(f"{len(active)} non-extra vertices do not split into three classes")
    m = len(active) // 3
    if initial is not None:
        classes = [list(c) for c in initial]
        if sorted(v for c in classes for v in c) != active or {len(c) for c in classes} != {m}:
            raise InvariantViolation("initial split must cover the non-extra vertices in three equal classes")
    else:
        order = sorted(active, key=lambda v: (-residual[v], v))
        classes = [[], [], []]
        for i, v in enumerate(order):
            turn, pos = divmod(i, 3)
            classes[pos if turn % 2 == 0 else 2 - pos].append(v)
    res = list(residual)
    swaps = 0
    while True:
        sums = [sum(res[v] for v in cls) for cls in classes]
        gap = _spread(sums)
        # loop while sum |x_i - x| > 6 m^2 / 7
        if 7 * gap <= 18 * m * m:
            break
        hi = max(range(3), key=lambda k: (sums[k], -k))
        lo = min(range(3), key=lambda k: (sums[k], k))
        big = max(classes[hi], key=lambda v: (res[v], -v))
        small = min(classes[lo], key=lambda v: (res[v], v))
        if res[big] <= res[small]:
            raise InvariantViolation("swap would not move degree mass between classes")
        classes[hi][classes[hi].index(big)] = small
        classes[lo][classes[lo].index(small)] = big
        sums = [sum(res[v] for v in cls) for cls in classes]
        if _spread(sums) >= gap:
            raise InvariantViolation("class-sum spread failed to decrease")
        swaps += 1
    classes = [sorted(cls) for cls in classes]
    sums = [sum(res[v] for v in cls) for cls in classes]
    edge = None
    if len({s % 3 for s in sums}) == 3:
        base = min(range(3), key=lambda k: (sums[k], k))
        one = next(k for k in range(3) if (sums[k] - sums[base]) % 3 == 1)
        two = next(k for k in range(3) if (sums[k] - sums[base]) % 3 == 2)
        picked = [classes[one][0]] + classes[two][:2]
        edge = _sorted_edge(picked)
        for v in picked:
            res[v] -= 1
    seq = TripartiteDegreeSequence(*(tuple(res[v] for v in cls) for cls in classes))
    return Split(tuple(tuple(c) for c in classes), edge, seq, swaps)


def phase3_equalize(classes: Sequence[Sequence[int]], residual: TripartiteDegreeSequence, n: int):
    """Bring every class sum down to the minimum using edges inside one class.

    Returns ``(edges, residual)``; edges use global vertex ids.
    """
    sums = residual.sums
    target = min(sums)
    r = -(-n // 5)
    res = [list(x) for x in residual]
    edges = set()
    for k in range(3):
        diff = sums[k] - target
        if diff == 0:
            continue
        if diff % 3:
            raise InvariantViolation(f"class {CLASSES[k]} is {diff} above the minimum, not a multiple of 3")
        m = len(classes[k])
        q = m // 3
        # three sub-classes of q, skipping the lowest residuals
        pos = sorted(range(m), key=lambda i: (-res[k][i], i))[: 3 * q]
        sub = [[], [], []]
        for i, p in enumerate(pos):
            turn, s = divmod(i, 3)
            sub[s if turn % 2 == 0 else 2 - s].append(p)
        pool = sorted(regular_tripartite(q, 2 * r).edges)
        need = diff // 3
        if need > len(pool):
            raise InvariantViolation(f"class {CLASSES[k]} needs {need} edges, regular block has {len(pool)}")
        used = [0] * m
        kept = []
        for _ in range(need):
            best = min(
                range(len(pool)),
                key=lambda t: (
                    max(used[sub[c][pool[t][c]]] for c in range(3)),
                    sum(used[sub[c][pool[t][c]]] for c in range(3)),
                    t,
                ),
            )
            e = pool.pop(best)
            kept.append(e)
            for c in range(3):
                used[sub[c][e[c]]] += 1
        for e in kept:
            local = [sub[c][e[c]] for c in range(3)]
            edges.add(_sorted_edge(classes[k][i] for i in local))
            for i in local:
                res[k][i] -= 1
    return frozenset(edges), TripartiteDegreeSequence(*(tuple(x) for x in res))


def _phase4(residual: TripartiteDegreeSequence):
    try:
        return realize_tripartite(residual)
    except OutOfDomain as exc:
        raise InvariantViolation(f"phase 4 residual left the tripartite domain: {exc}") from None


def phase4_tripartite(residual: TripartiteDegreeSequence) -> TripartiteHypergraph:
    return _phase4(residual)[0]


def _phase_of(e, extras, where) -> int:
    if any(v in extras for v in e):
        return 1
    touched = {where[v] for v in e}
    return {2: 2, 1: 3, 3: 4}[len(touched)]


def realize_hypergraph(seq) -> Tuple[Hypergraph, PhasePlan]:
    """Realize a general sequence on n >= 45 vertices inside the four-phase window."""
    seq = degree_sequence(seq)
    n = check_general_domain(seq)
    e1, res, extras = phase1_satisfy_extras(seq)
    split = phase2_split_and_parity(res, extras)
    e3, rest = phase3_equalize(split.classes, split.residual, n)
    local, trace = _phase4(rest)
    cls = split.classes
    e4 = frozenset(_sorted_edge((cls[0][a], cls[1][b], cls[2][c])) for a, b, c in local.edges)
    plan = PhasePlan(
        extra_vertices=extras,
        classes=cls,
        phase1_edges=e1,
        phase2_edge=split.edge,
        phase3_edges=e3,
        phase4_edges=e4,
        swaps=split.swaps,
        class_sums=tuple(sum(res[v] for v in c) for c in cls),
        phase4_trace=trace,
    )
    check_phase_disjointness(plan)
    all_edges = e1 | e3 | e4 | ({split.edge} if split.edge else set())
    h = Hypergraph(n, all_edges)
    check = verify_realization(h, seq)
    if not check:
        raise InvariantViolation(f"general realization failed: {check}")
    return h, plan


def check_phase_disjointness(plan: PhasePlan):
    """Every edge's signature must name the phase that produced it."""
    extras = set(plan.extra_vertices)
    where = {v: k for k, vs in enumerate(plan.classes) for v in vs}
    groups = [
        (1, plan.phase1_edges),
        (2, [plan.phase2_edge] if plan.phase2_edge else []),
        (3, plan.phase3_edges),
        (4, plan.phase4_edges),
    ]
    for phase, edges in groups:
        for e in edges:
            got = _phase_of(e, extras, where)
            if got != phase:
                raise InvariantViolation(f"edge {e} from phase {phase} has the signature of phase {got}")
