"""Domain types shared by every constructor, plus degree extraction and verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

Edge = Tuple[int, int, int]
DegreeSequence = Tuple[int, ...]

CLASSES = ("A", "B", "C")


class HypergraphError(ValueError):
    """Base class for input errors raised by this package."""

    code = "invalid"


class ShapeMismatch(HypergraphError):
    code = "shape"


class NotGraphic(HypergraphError):
    code = "not_graphic"


class OutOfDomain(HypergraphError):
    """Input is well formed but outside the domain a constructor guarantees."""

    def __init__(self, message: str, code: str = "domain"):
        super().__init__(message)
        self.code = code


class InvariantViolation(AssertionError):
    """A construction produced something it should never produce."""


def degree_sequence(values: Iterable[int]) -> DegreeSequence:
    seq = tuple(int(v) for v in values)
    if not seq:
        raise HypergraphError("degree sequence must have at least one entry")
    for i, v in enumerate(seq):
        if v < 0:
            raise HypergraphError(f"negative degree {v} at position {i}")
    return seq


class TripartiteDegreeSequence(NamedTuple):
    a: DegreeSequence
    b: DegreeSequence
    c: DegreeSequence

    @classmethod
    def of(cls, a: Iterable[int], b: Iterable[int], c: Iterable[int]) -> "TripartiteDegreeSequence":
        return cls(degree_sequence(a), degree_sequence(b), degree_sequence(c))

    @classmethod
    def symmetric(cls, d: Iterable[int]) -> "TripartiteDegreeSequence":
        d = degree_sequence(d)
        return cls(d, d, d)

    @property
    def sizes(self) -> Tuple[int, int, int]:
        return (len(self.a), len(self.b), len(self.c))

    @property
    def sums(self) -> Tuple[int, int, int]:
        return (sum(self.a), sum(self.b), sum(self.c))


class VertexRef(NamedTuple):
    cls: Optional[str]  # "A", "B", "C" or None for an unpartitioned hypergraph
    index: int

    def __str__(self) -> str:
        return f"{self.cls}{self.index}" if self.cls else f"v{self.index}"


@dataclass(frozen=True)
class Hypergraph:
    """Simple 3-uniform hypergraph on vertices ``0..n-1``; edges are sorted triples."""

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        canon = set()
        for e in edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != 3 or t[0] == t[1] or t[1] == t[2]:
                raise HypergraphError(f"edge {tuple(e)} is not a 3-set")
            if t[0] < 0 or t[2] >= n:
                raise HypergraphError(f"edge {t} has a vertex outside 0..{n - 1}")
            if t in canon:
                raise HypergraphError(f"duplicate edge {t}")
            canon.add(t)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(canon))

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class TripartiteHypergraph:
    """Three vertex classes; every edge is an (a, b, c) index triple."""

    sizes: Tuple[int, int, int]
    edges: frozenset

    def __init__(self, sizes: Sequence[int], edges: Iterable[Sequence[int]] = ()):
        sizes = tuple(int(s) for s in sizes)
        if len(sizes) != 3 or min(sizes) < 0:
            raise HypergraphError(f"bad class sizes {sizes}")
        canon = set()
        for e in edges:
            t = tuple(int(v) for v in e)
            if len(t) != 3:
                raise HypergraphError(f"edge {t} must have one vertex per class")
            for k in range(3):
                if not 0 <= t[k] < sizes[k]:
                    raise HypergraphError(f"edge {t}: index {t[k]} outside class {CLASSES[k]}")
            if t in canon:
                raise HypergraphError(f"duplicate edge {t}")
            canon.add(t)
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def _trusted(cls, sizes, edges: frozenset) -> "TripartiteHypergraph":
        # Skips validation; only for edge sets already known to be well formed.
        obj = cls.__new__(cls)
        object.__setattr__(obj, "sizes", tuple(sizes))
        object.__setattr__(obj, "edges", edges)
        return obj

    @classmethod
    def complete(cls, na: int, nb: int, nc: int) -> "TripartiteHypergraph":
        return cls._trusted(
            (na, nb, nc),
            frozenset((i, j, k) for i in range(na) for j in range(nb) for k in range(nc)),
        )

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def relabel(self, perms: Sequence[Sequence[int]]) -> "TripartiteHypergraph":
        """Apply per-class permutations: old index ``i`` of class k becomes ``perms[k][i]``."""
        pa, pb, pc = perms
        return TripartiteHypergraph._trusted(
            self.sizes, frozenset((pa[i], pb[j], pc[k]) for i, j, k in self.edges)
        )


@dataclass(frozen=True)
class BipartiteGraph:
    n_left: int
    n_right: int
    edges: frozenset

    def __init__(self, n_left: int, n_right: int, edges: Iterable[Sequence[int]] = ()):
        canon = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n_left and 0 <= v < n_right):
                raise HypergraphError(f"edge {(u, v)} out of range")
            if (u, v) in canon:
                raise HypergraphError(f"duplicate edge {(u, v)}")
            canon.add((u, v))
        object.__setattr__(self, "n_left", int(n_left))
        object.__setattr__(self, "n_right", int(n_right))
        object.__setattr__(self, "edges", frozenset(canon))

    def degrees(self) -> Tuple[DegreeSequence, DegreeSequence]:
        left = [0] * self.n_left
        right = [0] * self.n_right
        for u, v in self.edges:
            left[u] += 1
            right[v] += 1
        return tuple(left), tuple(right)


AnyHypergraph = Union[Hypergraph, TripartiteHypergraph]


def degree_sequence_of(h: Hypergraph) -> DegreeSequence:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return tuple(deg)


def degree_sequence_of_tripartite(h: TripartiteHypergraph) -> TripartiteDegreeSequence:
    degs = [[0] * s for s in h.sizes]
    for e in h.edges:
        for k in range(3):
            degs[k][e[k]] += 1
    return TripartiteDegreeSequence(*(tuple(d) for d in degs))


class Verification(NamedTuple):
    ok: bool
    vertex: Optional[VertexRef] = None
    expected: Optional[int] = None
    actual: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "realization verified"
        return f"degree mismatch at {self.vertex}: expected {self.expected}, found {self.actual}"


def verify_realization(h: AnyHypergraph, d) -> Verification:
    """Check that ``h`` realizes ``d``; report the first offending vertex.

    Raises ShapeMismatch when the vertex counts (or class sizes) of ``h`` and
    ``d`` disagree, since that is an input error rather than a failed check.
    Well-formedness (3-uniform, simple) is enforced when ``h`` is built.
    """
    if isinstance(h, TripartiteHypergraph):
        if not isinstance(d, tuple) or len(d) != 3 or isinstance(d[0], int):
            raise ShapeMismatch("tripartite hypergraph needs a three-class degree sequence")
        d = TripartiteDegreeSequence(*(tuple(x) for x in d))
        if h.sizes != d.sizes:
            raise ShapeMismatch(f"class sizes {h.sizes} differ from sequence sizes {d.sizes}")
        got = degree_sequence_of_tripartite(h)
        for k in range(3):
            for i, (want, have) in enumerate(zip(d[k], got[k])):
                if want != have:
                    return Verification(False, VertexRef(CLASSES[k], i), want, have)
        return Verification(True)
    d = tuple(d)
    if h.n != len(d):
        raise ShapeMismatch(f"hypergraph has {h.n} vertices, sequence has {len(d)}")
    for i, (want, have) in enumerate(zip(d, degree_sequence_of(h))):
        if want != have:
            return Verification(False, VertexRef(None, i), want, have)
    return Verification(True)


def complement_tripartite(h: TripartiteHypergraph) -> TripartiteHypergraph:
    n = h.sizes[0]
    if h.sizes != (n, n, n):
        raise ShapeMismatch(f"complement needs equal class sizes, got {h.sizes}")
    full = TripartiteHypergraph.complete(n, n, n).edges
    return TripartiteHypergraph._trusted(h.sizes, full - h.edges)
