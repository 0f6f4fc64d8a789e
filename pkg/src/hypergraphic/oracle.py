"""Exhaustive graphicality checks for desk-scale instances, plus the constant c.

Both searches peel off one vertex at a time and branch over the degree
vector of its link (a bipartite graph for the tripartite case, a simple
graph otherwise).  Once a vertex is satisfied, the rest of the problem only
depends on the residual degrees, which makes failed states memoizable and
lets vertices with equal residuals be treated as interchangeable.

Nothing here calls into the constructors; links are rebuilt with a local
greedy so the oracle can be used to check them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .core import (
    Hypergraph,
    InvariantViolation,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    degree_sequence,
    verify_realization,
)

DEFAULT_NODES = 10**8
DEFAULT_SECONDS = 600.0


@dataclass(frozen=True)
class OracleResult:
    graphic: bool
    witness: Optional[object] = None
    nodes_explored: int = 0
    timed_out: bool = False

    def __bool__(self) -> bool:
        return self.graphic


class _Timeout(Exception):
    pass


class _Counter:
    def __init__(self, max_nodes, seconds):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = time.monotonic() + seconds

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Timeout
        if self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            raise _Timeout


def _vectors(res: Sequence[int], total: int, lo_of, hi_of) -> Iterator[List[int]]:
    """Vectors v with sum ``total`` and lo_of(r) <= v_i <= hi_of(r) for residual r.

    Positions holding equal residuals are interchangeable, so inside each
    such group only non-increasing assignments are produced.
    """
    order = sorted(range(len(res)), key=lambda i: (-res[i], i))
    lo = [lo_of(res[i]) for i in order]
    hi = [hi_of(res[i]) for i in order]
    if any(l > h for l, h in zip(lo, hi)):
        return
    m = len(order)
    min_tail = [0] * (m + 1)
    max_tail = [0] * (m + 1)
    for p in range(m - 1, -1, -1):
        min_tail[p] = min_tail[p + 1] + lo[p]
        max_tail[p] = max_tail[p + 1] + hi[p]
    out = [0] * len(res)

    def rec(p, left, prev):
        if p == m:
            if left == 0:
                yield list(out)
            return
        top = hi[p]
        if p and res[order[p]] == res[order[p - 1]]:
            top = min(top, prev)
        bottom = max(lo[p], left - max_tail[p + 1])
        top = min(top, left - min_tail[p + 1])
        for v in range(top, bottom - 1, -1):
            out[order[p]] = v
            yield from rec(p + 1, left - v, v)
        out[order[p]] = 0

    if min_tail[0] <= total <= max_tail[0]:
        yield from rec(0, total, None)


def _spread_key(res, take):
    # prefer links that leave the residuals flat
    return sum((r - t) ** 2 for r, t in zip(res, take))


def _fill(counts: Sequence[int], m: int, descending: bool) -> int:
    # extreme value of sum |e & X| over m distinct cells, given cell counts per weight
    total = 0
    weights = range(len(counts) - 1, -1, -1) if descending else range(len(counts))
    for w in weights:
        use = min(m, counts[w])
        total += use * w
        m -= use
        if m == 0:
            break
    return total


def _prefix(values):
    out = [0]
    for v in sorted(values, reverse=True):
        out.append(out[-1] + v)
    return out


# --- tripartite -------------------------------------------------------------


def _gale_ryser(left: Sequence[int], right: Sequence[int]) -> bool:
    if sum(left) != sum(right):
        return False
    acc = 0
    for k, v in enumerate(sorted(left, reverse=True), 1):
        acc += v
        if acc > sum(min(r, k) for r in right):
            return False
    return True


def _bipartite_link(left: Sequence[int], right: Sequence[int]) -> List[Tuple[int, int]]:
    res = list(right)
    edges = []
    for u in sorted(range(len(left)), key=lambda i: (-left[i], i)):
        picks = sorted((j for j in range(len(res)) if res[j] > 0), key=lambda j: (-res[j], j))[: left[u]]
        if len(picks) < left[u]:
            raise InvariantViolation("Gale-Ryser accepted a vector pair the greedy cannot realize")
        for j in picks:
            res[j] -= 1
            edges.append((u, j))
    return edges


def _tripartite_bound_ok(rows: Sequence[int], rb: Sequence[int], rc: Sequence[int]) -> bool:
    """Necessary condition on every set X of top-residual vertices.

    The m remaining edges are distinct cells of a rows x B x C box, so the
    degree mass on X lies between the smallest and largest possible
    values of sum |e & X| over m cells.
    """
    m = sum(rows)
    pa, pb, pc = _prefix(rows), _prefix(rb), _prefix(rc)
    na, nb, nc = len(rows), len(rb), len(rc)
    for ka in range(na + 1):
        for kb in range(nb + 1):
            for kc in range(nc + 1):
                counts = [0, 0, 0, 0]
                for ia, ca in ((1, ka), (0, na - ka)):
                    for ib, cb in ((1, kb), (0, nb - kb)):
                        for ic, cc in ((1, kc), (0, nc - kc)):
                            counts[ia + ib + ic] += ca * cb * cc
                dx = pa[ka] + pb[kb] + pc[kc]
                if dx > _fill(counts, m, True) or dx < _fill(counts, m, False):
                    return False
    return True


def oracle_tripartite(seq, budget: int = DEFAULT_NODES, time_limit: float = DEFAULT_SECONDS) -> OracleResult:
    """Decide whether a tripartite degree sequence has a simple realization."""
    if not isinstance(seq, TripartiteDegreeSequence):
        seq = TripartiteDegreeSequence.of(*seq)
    sizes = seq.sizes
    if len(set(seq.sums)) != 1:
        return OracleResult(False)
    for k in range(3):
        cap = sizes[(k + 1) % 3] * sizes[(k + 2) % 3]
        if any(v > cap for v in seq[k]):
            return OracleResult(False)
    # branch over the smallest class
    k0 = min(range(3), key=lambda k: (sizes[k], k))
    k1, k2 = [k for k in range(3) if k != k0]
    rows = seq[k0]
    order = sorted(range(len(rows)), key=lambda i: (-rows[i], i))
    deg = [rows[i] for i in order]
    n1, n2 = sizes[k1], sizes[k2]
    swap = n1 == n2
    counter = _Counter(budget, time_limit)
    failed = set()

    def key(idx, r1, r2):
        s1, s2 = tuple(sorted(r1)), tuple(sorted(r2))
        if swap and s2 < s1:
            s1, s2 = s2, s1
        return idx, s1, s2

    def solve(idx, r1, r2):
        if idx == len(deg):
            return [] if not any(r1) and not any(r2) else None
        counter.tick()
        k = key(idx, r1, r2)
        if k in failed:
            return None
        if not _tripartite_bound_ok(deg[idx:], r1, r2):
            failed.add(k)
            return None
        d = deg[idx]
        later = len(deg) - idx - 1
        betas = sorted(
            _vectors(r1, d, lambda r: max(0, r - later * n2), lambda r: min(r, n2)),
            key=lambda v: _spread_key(r1, v),
        )
        gammas = sorted(
            _vectors(r2, d, lambda r: max(0, r - later * n1), lambda r: min(r, n1)),
            key=lambda v: _spread_key(r2, v),
        )
        for beta in betas:
            n1_next = [r - b for r, b in zip(r1, beta)]
            for gamma in gammas:
                if not _gale_ryser(beta, gamma):
                    continue
                n2_next = [r - g for r, g in zip(r2, gamma)]
                rest = solve(idx + 1, n1_next, n2_next)
                if rest is not None:
                    return [(beta, gamma)] + rest
        failed.add(k)
        return None

    try:
        links = solve(0, list(seq[k1]), list(seq[k2]))
    except _Timeout:
        return OracleResult(False, None, counter.nodes, True)
    if links is None:
        return OracleResult(False, None, counter.nodes)
    edges = []
    for row, (beta, gamma) in zip(order, links):
        for j, l in _bipartite_link(beta, gamma):
            e = [0, 0, 0]
            e[k0], e[k1], e[k2] = row, j, l
            edges.append(tuple(e))
    h = TripartiteHypergraph(sizes, edges)
    if not verify_realization(h, seq):
        raise InvariantViolation("oracle witness does not realize the query")
    return OracleResult(True, h, counter.nodes)


# --- general 3-uniform --------------------------------------------------------


def _erdos_gallai(deg: Sequence[int]) -> bool:
    d = sorted(deg, reverse=True)
    if sum(d) % 2:
        return False
    acc = 0
    for k in range(1, len(d) + 1):
        acc += d[k - 1]
        if acc > k * (k - 1) + sum(min(v, k) for v in d[k:]):
            return False
    return True


def _simple_link(deg: Sequence[int]) -> List[Tuple[int, int]]:
    res = list(deg)
    edges = []
    while True:
        u = max(range(len(res)), key=lambda i: (res[i], -i))
        if res[u] == 0:
            return edges
        picks = sorted((j for j in range(len(res)) if j != u and res[j] > 0), key=lambda j: (-res[j], j))[: res[u]]
        if len(picks) < res[u]:
            raise InvariantViolation("Erdos-Gallai accepted a vector the greedy cannot realize")
        for j in picks:
            res[j] -= 1
            edges.append((u, j))
        res[u] = 0


def _general_bound_ok(res: Sequence[int]) -> bool:
    q = len(res)
    total = sum(res)
    if total % 3:
        return False
    m = total // 3
    pre = _prefix(res)
    for k in range(q + 1):
        counts = [comb(k, t) * comb(q - k, 3 - t) for t in range(4)]
        if pre[k] > _fill(counts, m, True) or pre[k] < _fill(counts, m, False):
            return False
    return True


def oracle_general(seq, budget: int = DEFAULT_NODES, time_limit: float = DEFAULT_SECONDS) -> OracleResult:
    """Decide whether a degree sequence has a simple 3-uniform realization."""
    seq = degree_sequence(seq)
    n = len(seq)
    counter = _Counter(budget, time_limit)
    failed = set()

    def solve(res: Dict[int, int]):
        if not res:
            return []
        counter.tick()
        k = tuple(sorted(res.values()))
        if k in failed:
            return None
        q = len(res)
        if max(res.values()) > comb(q - 1, 2) or not _general_bound_ok(list(res.values())):
            failed.add(k)
            return None
        v = min(res, key=lambda u: (-res[u], u))
        others = [u for u in sorted(res) if u != v]
        rv = [res[u] for u in others]
        room = comb(q - 2, 2)
        links = sorted(
            _vectors(rv, 2 * res[v], lambda r: max(0, r - room), lambda r: min(r, q - 2)),
            key=lambda d: _spread_key(rv, d),
        )
        for delta in links:
            if not _erdos_gallai(delta):
                continue
            nxt = {u: r - t for u, r, t in zip(others, rv, delta) if r - t > 0}
            rest = solve(nxt)
            if rest is not None:
                return [(v, others, delta)] + rest
        failed.add(k)
        return None

    try:
        plan = solve({u: r for u, r in enumerate(seq) if r > 0})
    except _Timeout:
        return OracleResult(False, None, counter.nodes, True)
    if plan is None:
        return OracleResult(False, None, counter.nodes)
    edges = []
    for v, others, delta in plan:
        for i, j in _simple_link(delta):
            edges.append((v, others[i], others[j]))
    h = Hypergraph(n, edges)
    if not verify_realization(h, seq):
        raise InvariantViolation("oracle witness does not realize the query")
    return OracleResult(True, h, counter.nodes)


# --- the constant c ---------------------------------------------------------


def _double_root_gap(c: float) -> float:
    # z^3 - (1 + c) z + 2c has a double root at z = 3c / (1 + c) exactly when this vanishes
    return (1 + c) ** 3 - 27 * c * c


def conjectured_constant(tol: float = 1e-12) -> float:
    """The c in (0, 1) for which z^3 = (1 - c) z - 2c (1 - z) has a positive double root."""
    lo, hi = 0.0, 1.0  # gap is 1 at c=0 and -19 at c=1, with a single sign change between
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _double_root_gap(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def cubic_positive_roots(c: float) -> List[float]:
    """Positive real roots of z^3 - (1 + c) z + 2c, Newton-polished, ascending."""
    coeffs = [1.0, 0.0, -(1.0 + c), 2.0 * c]
    out = []
    for z in np.roots(coeffs):
        if abs(z.imag) > 1e-7 or z.real <= 0:
            continue
        x = float(z.real)
        for _ in range(3):
            f = x ** 3 - (1 + c) * x + 2 * c
            fp = 3 * x * x - (1 + c)
            if fp == 0:
                break
            x -= f / fp
        out.append(x)
    return sorted(out)


def double_root_at(c: float) -> float:
    return 3 * c / (1 + c)
