"""Text formats for degree sequences, hypergraphs and flip traces, plus a seeded generator.

Degree files::

    # comments run to the end of the line
    3 3 3 3                 general: one line of degrees

    A: 2 2                  tripartite: three lines labelled A:, B:, C:
    B: 2 2
    C: 2 2

Hypergraph files start with ``hypergraph <n> <edges>`` or
``tripartite <a> <b> <c> <edges>`` and list one edge per line
(``v0 v1 v2`` or ``A0 B1 C2``) in sorted order, so equal hypergraphs give
byte-identical files.
"""

from __future__ import annotations

import re
from typing import Tuple, Union

from .core import (
    CLASSES,
    Hypergraph,
    HypergraphError,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
)
from .flips import FlipTrace
from .general import MIN_VERTICES, general_bounds
from .tripartite import large_degree, small_degree


class ParseError(HypergraphError):
    code = "parse"

    def __init__(self, message: str, line: int, column: int = 1, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\S+")
_LABEL = re.compile(r"^\s*([A-Za-z]+)\s*:")


def _logical_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield no, line


def _ints(line: str, no: int, start: int, source: str) -> Tuple[int, ...]:
    out = []
    for m in _TOKEN.finditer(line, start):
        tok = m.group()
        col = m.start() + 1
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise ParseError(f"malformed token {tok!r}", no, col, source)
        v = int(tok)
        if v < 0:
            raise ParseError(f"negative degree {v}", no, col, source)
        out.append(v)
    if not out:
        raise ParseError("no degrees on line", no, len(line) + 1, source)
    return tuple(out)


def parse_degree_text(text: str, source: str = "<input>") -> Union[Tuple[int, ...], TripartiteDegreeSequence]:
    lines = list(_logical_lines(text))
    if not lines:
        raise ParseError("no degree sequence found", 1, 1, source)
    labelled = [_LABEL.match(line) for _, line in lines]
    if not any(labelled):
        if len(lines) != 1:
            raise ParseError(f"a general sequence is one line, found {len(lines)}", lines[1][0], 1, source)
        no, line = lines[0]
        return _ints(line, no, 0, source)
    parts = {}
    for (no, line), m in zip(lines, labelled):
        if m is None:
            raise ParseError("expected a class label A:, B: or C:", no, 1, source)
        label = m.group(1).upper()
        if label not in CLASSES:
            raise ParseError(f"unknown class label {m.group(1)!r}", no, m.start(1) + 1, source)
        if label in parts:
            raise ParseError(f"class {label} given twice", no, m.start(1) + 1, source)
        parts[label] = _ints(line, no, m.end(), source)
    if len(parts) != 3:
        missing = ", ".join(k for k in CLASSES if k not in parts)
        raise ParseError(f"a tripartite sequence needs 3 lines, class {missing} missing", lines[-1][0], 1, source)
    return TripartiteDegreeSequence(parts["A"], parts["B"], parts["C"])


def parse_degree_file(path) -> Union[Tuple[int, ...], TripartiteDegreeSequence]:
    with open(path, encoding="utf-8") as fh:
        return parse_degree_text(fh.read(), str(path))


def format_degree_sequence(seq) -> str:
    if isinstance(seq, TripartiteDegreeSequence):
        return "".join(f"{k}: {' '.join(map(str, d))}\n" for k, d in zip(CLASSES, seq))
    return " ".join(map(str, seq)) + "\n"


def emit_hypergraph(h) -> str:
    if isinstance(h, TripartiteHypergraph):
        a, b, c = h.sizes
        lines = [f"tripartite {a} {b} {c} {len(h.edges)}"]
        lines += [f"A{i} B{j} C{k}" for i, j, k in sorted(h.edges)]
    else:
        lines = [f"hypergraph {h.n} {len(h.edges)}"]
        lines += [" ".join(f"v{v}" for v in e) for e in sorted(h.edges)]
    return "\n".join(lines) + "\n"


def write_hypergraph(h, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_hypergraph(h))


def parse_hypergraph_text(text: str, source: str = "<input>"):
    lines = list(_logical_lines(text))
    if not lines:
        raise ParseError("empty hypergraph file", 1, 1, source)
    no, header = lines[0]
    head = header.split()
    try:
        if head[0] == "hypergraph" and len(head) == 3:
            n, m = int(head[1]), int(head[2])
            tripartite = False
        elif head[0] == "tripartite" and len(head) == 5:
            sizes = tuple(int(x) for x in head[1:4])
            m = int(head[4])
            tripartite = True
        else:
            raise ValueError
    except ValueError:
        raise ParseError(f"bad header {header.strip()!r}", no, 1, source) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", no, 1, source)
    edges = []
    for no, line in body:
        toks = list(_TOKEN.finditer(line))
        if len(toks) != 3:
            raise ParseError(f"an edge needs 3 vertices, found {len(toks)}", no, 1, source)
        e = []
        for k, t in enumerate(toks):
            want = CLASSES[k] if tripartite else "v"
            tok = t.group()
            if not re.fullmatch(f"{want}\\d+", tok):
                raise ParseError(f"expected a vertex {want}<index>, got {tok!r}", no, t.start() + 1, source)
            e.append(int(tok[1:]))
        edges.append(tuple(e))
    try:
        if tripartite:
            return TripartiteHypergraph(sizes, edges)
        return Hypergraph(n, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc), no, 1, source) from None


def read_hypergraph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph_text(fh.read(), str(path))


def format_trace(trace: FlipTrace) -> str:
    """One flip per line: class, source, target, removed edge, added edge."""
    out = []
    for k, perm in enumerate(trace.relabel):
        name = CLASSES[k] if len(trace.relabel) == 3 else "v"
        out.append(f"# relabel {name}: {' '.join(map(str, perm))}")
    for s in trace.steps:
        cls = s.cls or "-"
        removed = ",".join(map(str, s.removed))
        added = ",".join(map(str, s.added))
        out.append(f"{cls} {s.source} {s.target} {removed} {added}")
    return "\n".join(out) + "\n"


# --- seeded instances -----------------------------------------------------

MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator (Steele, Lea and Flood), identical on every platform."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # rejection sampling keeps the draw exactly uniform
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            v = self.next()
            if v < limit:
                return v % bound

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def gen_random_sequence(mode: str, n: int, seed: int):
    """Uniform degrees inside the realizer's degree window, repaired to meet the sum constraints.

    ``mode`` is ``"tripartite"`` (equal class sums, n per class) or
    ``"general"`` (sum divisible by 3, n >= 45).
    """
    rng = SplitMix64(seed)
    if mode == "tripartite":
        if n < 1:
            raise HypergraphError("class size must be positive")
        lo, hi = small_degree(n), large_degree(n)
        classes = [[rng.between(lo, hi) for _ in range(n)] for _ in range(3)]
        target = min(sum(c) for c in classes)
        for c in classes:
            while sum(c) > target:
                i = max(range(n), key=lambda j: (c[j], -j))
                c[i] -= 1
        return TripartiteDegreeSequence(*(tuple(c) for c in classes))
    if mode == "general":
        if n < MIN_VERTICES:
            raise HypergraphError(f"general instances need n >= {MIN_VERTICES}")
        lo, hi = general_bounds(n)
        d = [rng.between(lo, hi) for _ in range(n)]
        while sum(d) % 3:
            i = max(range(n), key=lambda j: (d[j], -j))
            if d[i] > lo:
                d[i] -= 1
            else:
                d[min(range(n), key=lambda j: (d[j], j))] += 1
        return tuple(d)
    raise HypergraphError(f"unknown mode {mode!r}")
