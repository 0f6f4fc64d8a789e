"""Realizing tripartite sequences whose degrees lie in [2n^2/7, 5n^2/7].

The pipeline builds a realization of the extreme sequence with the same
class sum (large block, one intermediate degree, small block) and then
morphs it into the requested sequence with balancing hinge flips.

Vertex order inside an extreme realization is large, intermediate, small.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .core import (
    InvariantViolation,
    OutOfDomain,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    complement_tripartite,
    verify_realization,
)
from .flips import FlipTrace, transform_to_target
from .regular import SymmetricBuilder, clear_vertex, regular_tripartite


class CaseTag(enum.Enum):
    BASE_SMALL_N = "base_small_n"
    CASE1 = "case1"
    CASE2A = "case2a"
    CASE2B_I = "case2b_i"
    CASE2B_II = "case2b_ii"
    COMPLEMENTED = "complemented"


def small_degree(n: int) -> int:
    """ceil(2n^2/7)"""
    return -(-2 * n * n // 7)


def large_degree(n: int) -> int:
    """floor(5n^2/7)"""
    return 5 * n * n // 7


@dataclass(frozen=True)
class ExtremeSpec:
    """x - 1 large vertices, one intermediate of degree d, n - x small ones (per class)."""

    n: int
    x: int
    d: int

    def __post_init__(self):
        lo, hi = small_degree(self.n), large_degree(self.n)
        if not lo <= self.d <= hi:
            raise OutOfDomain(f"intermediate degree {self.d} outside [{lo}, {hi}]")
        if not 1 <= self.x <= self.n:
            raise OutOfDomain(f"x={self.x} outside 1..{self.n}")

    def degrees(self) -> Tuple[int, ...]:
        n = self.n
        return (large_degree(n),) * (self.x - 1) + (self.d,) + (small_degree(n),) * (n - self.x)

    @property
    def class_sum(self) -> int:
        return sum(self.degrees())


def extreme_spec_for(class_sum: int, n: int) -> ExtremeSpec:
    lo, hi = small_degree(n), large_degree(n)
    if not n * lo <= class_sum <= n * hi:
        raise OutOfDomain(f"class sum {class_sum} outside [{n * lo}, {n * hi}]", "sum_range")
    extra = class_sum - n * lo
    if extra == 0:
        return ExtremeSpec(n, 1, lo)
    width = hi - lo
    x = -(-extra // width)
    return ExtremeSpec(n, x, lo + extra - (x - 1) * width)


def _shape(n: int, x: int, d: int) -> List[int]:
    # x counts large + intermediate vertices; d == large_degree(n) means no intermediate
    return [large_degree(n)] * (x - 1) + [d] * (x > 0) + [small_degree(n)] * (n - x)


def _needs_complement(n: int, x: int, d: int) -> bool:
    if d == large_degree(n):
        return x < (n + 1) // 2
    return x <= n // 2


def _complement_shape(n: int, x: int, d: int) -> Tuple[int, int]:
    if d == large_degree(n):
        return n - x, d
    return n - x + 1, n * n - d


def _base_case(n: int) -> TripartiteHypergraph:
    # n = 2 admits only (2, 2) per class: the 2-regular rotation
    if n != 2:
        raise OutOfDomain(f"no fixed base case for n={n}")
    return regular_tripartite(2, 2)


def _case(n: int, x: int, d: int) -> CaseTag:
    lo, hi = small_degree(n), large_degree(n)
    if (x - 1) ** 2 >= lo:
        return CaseTag.CASE1
    if d == hi:
        return CaseTag.CASE2A
    if d <= x * x:
        return CaseTag.CASE2B_I
    return CaseTag.CASE2B_II


def _case1(b: SymmetricBuilder, n: int, x: int, d: int):
    lo = small_degree(n)
    body = list(range(x))
    for s in range(x, n):
        b.exhibit(s, body, lo)
    assert sum(b.res[v] for v in body) < x ** 3
    values = [b.res[v] for v in body]
    if max(values) - min(values) <= 1:
        b.block(body)
        return
    # the intermediate vertex was never reached: clear it against the large block
    clear_vertex(b, x - 1, body[:-1])
    b.block(body[:-1])


def _case2a(b: SymmetricBuilder, n: int, x: int):
    per_small = min(small_degree(n), x * x)
    body = list(range(x))
    for s in range(x, n):
        b.exhibit(s, body, per_small)
    assert max(b.res[v] for v in body) <= x * x
    assert max(b.res[v] for v in range(x, n)) <= (n - x) ** 2
    b.block(body)
    b.block(range(x, n))


def _shed_excess(b: SymmetricBuilder, large: List[int], tail: List[int]):
    """Move large residual above len(large)^2 onto (large, small, small) edges.

    Needed for a few small odd n where the large block would otherwise end
    one or two units above what its almost-regular realization can carry.
    """
    limit = len(large) ** 2
    for j in large:
        excess = b.res[j] - limit
        if excess > 0:
            b.exhibit(j, tail, excess)


def _case2b_i(b: SymmetricBuilder, n: int, x: int, d: int):
    lo = small_degree(n)
    mid = x - 1
    large = list(range(x - 1))
    square = (x - 1) ** 2
    # the intermediate vertex behaves like a small one
    b.exhibit(mid, large, square)
    spare = d - lo
    # an odd leftover stays on the intermediate vertex and is absorbed by the
    # small block; a separate (mid, mid, mid) edge could collide with it
    b.pairs(mid, large, spare // 2)
    for s in range(x, n):
        b.exhibit(s, large, square)
    tail = list(range(x - 1, n))
    if n % 2 and x == (n + 1) // 2:
        cap = (lo - square) // 2
        for j in large:
            b.exhibit(j, tail, min(b.res[j], cap))
    _shed_excess(b, large, tail)
    b.block(large)
    b.block(tail)


class Case2bIIWork(NamedTuple):
    """Quotas for handing the intermediate vertex to the small vertices.

    ``t`` small vertices give it ``f_floor`` edges per side, the others
    ``f_ceil``, for ``d_star / 2`` per side in total.
    """

    p: int
    d_star: int
    f_ceil: int
    f_floor: int
    t: int

    @classmethod
    def of(cls, n: int, x: int, d: int) -> "Case2bIIWork":
        p = (d - x * x) % 2
        d_star = d - x * x + p
        smalls = n - x
        f_ceil = -(-d_star // (2 * smalls))
        f_floor = d_star // (2 * smalls)
        return cls(p, d_star, f_ceil, f_floor, smalls * f_ceil - d_star // 2)


def _case2b_ii(b: SymmetricBuilder, n: int, x: int, d: int):
    lo = small_degree(n)
    mid = x - 1
    body = list(range(x))
    large = body[:-1]
    square = (x - 1) ** 2
    w = Case2bIIWork.of(n, x, d)
    assert w.f_ceil <= x
    for idx, s in enumerate(range(x, n)):
        f = w.f_floor if idx < w.t else w.f_ceil
        b.exhibit(s, body, min(lo, f + square), fixed={mid: f})
    if b.res[mid] != x * x - w.p:
        raise InvariantViolation(f"intermediate residual {b.res[mid]}, expected {x * x - w.p}")
    b.exhibit(mid, large, square)
    b.pairs(mid, large, x - 1)
    if w.p == 0:
        b.triple(mid)
    tail = list(range(x, n))
    _shed_excess(b, large, tail)
    b.block(large)
    b.block(tail)


def _build(n: int, x: int, d: int) -> Tuple[TripartiteHypergraph, CaseTag]:
    if n == 2:
        return _base_case(n), CaseTag.BASE_SMALL_N
    if _needs_complement(n, x, d):
        cx, cd = _complement_shape(n, x, d)
        inner, _ = _build(n, cx, cd)
        flipped = complement_tripartite(inner)
        rev = tuple(range(n - 1, -1, -1))
        return flipped.relabel((rev, rev, rev)), CaseTag.COMPLEMENTED
    tag = _case(n, x, d)
    b = SymmetricBuilder(n, _shape(n, x, d))
    if tag is CaseTag.CASE1:
        _case1(b, n, x, d)
    elif tag is CaseTag.CASE2A:
        _case2a(b, n, x)
    elif tag is CaseTag.CASE2B_I:
        _case2b_i(b, n, x, d)
    else:
        _case2b_ii(b, n, x, d)
    if any(b.res):
        raise InvariantViolation(f"{tag.name} left residual degrees {b.res}")
    return b.hypergraph(), tag


def realize_extreme(spec: ExtremeSpec) -> Tuple[TripartiteHypergraph, CaseTag]:
    """Realization of ``(D, D, D)`` for the extreme class sequence ``D`` of ``spec``."""
    n, x, d = spec.n, spec.x, spec.d
    if n < 2:
        raise OutOfDomain("class size must be at least 2")
    if d == small_degree(n):
        # no intermediate vertex: x - 1 large vertices, the rest small
        x, d = x - 1, large_degree(n)
    h, tag = _build(n, x, d)
    if n <= 3:
        # the general cases already work at n = 3; report it as a base case
        tag = CaseTag.BASE_SMALL_N
    check = verify_realization(h, TripartiteDegreeSequence.symmetric(spec.degrees()))
    if not check:
        raise InvariantViolation(f"extreme realization failed: {check}")
    return h, tag


def check_tripartite_domain(seq: TripartiteDegreeSequence) -> int:
    """Validate the input domain and return the common class size."""
    sizes = seq.sizes
    if len(set(sizes)) != 1:
        raise OutOfDomain(f"class sizes {sizes} differ", "unequal_lengths")
    n = sizes[0]
    if len(set(seq.sums)) != 1:
        raise OutOfDomain(f"class sums {seq.sums} differ", "unequal_sums")
    for k, cls in enumerate("ABC"):
        for i, v in enumerate(seq[k]):
            if 7 * v < 2 * n * n:
                raise OutOfDomain(f"{cls}{i}: degree {v} below 2n^2/7", "below_lower_bound")
            if 7 * v > 5 * n * n:
                raise OutOfDomain(f"{cls}{i}: degree {v} above 5n^2/7", "above_upper_bound")
    return n


class TripartiteReport(NamedTuple):
    spec: ExtremeSpec
    tag: CaseTag
    trace: FlipTrace


def realize_tripartite_report(seq) -> Tuple[TripartiteHypergraph, TripartiteReport]:
    """Like :func:`realize_tripartite`, also returning the extreme shape and its case."""
    if not isinstance(seq, TripartiteDegreeSequence):
        seq = TripartiteDegreeSequence.of(*seq)
    n = check_tripartite_domain(seq)
    spec = extreme_spec_for(seq.sums[0], n)
    h, tag = realize_extreme(spec)
    h, trace = transform_to_target(h, seq)
    check = verify_realization(h, seq)
    if not check:
        raise InvariantViolation(f"flip transformation failed: {check}")
    return h, TripartiteReport(spec, tag, trace)


def realize_tripartite(seq) -> Tuple[TripartiteHypergraph, FlipTrace]:
    """Realize a tripartite sequence on n+n+n vertices within the 2/7..5/7 band."""
    h, report = realize_tripartite_report(seq)
    return h, report.trace
