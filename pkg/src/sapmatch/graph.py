"""
Graph and matching representation, DIMACS I/O and matching validation.

Vertices are numbered 0..n-1 internally; every file format on disk uses
1-based ids.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

log = logging.getLogger(__name__)


class ParseError(ValueError):
    """Malformed input file; ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0) -> None:
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """Immutable undirected simple graph.

    ``edges[e]`` is the pair ``(u, v)`` of edge ``e`` in input order, and
    ``adj[v]`` lists ``(neighbor, edge_id)`` in the order edges were given.
    That order is part of the contract: the solver scans adjacency lists
    front to back, so identical input gives identical traces.
    """

    __slots__ = ("n", "edges", "adj", "dropped_loops", "dropped_duplicates")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: list[tuple[int, int]] = []
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.dropped_loops = 0
        self.dropped_duplicates = 0
        seen: set[tuple[int, int]] = set()
        for (u, v) in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                self.dropped_loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                self.dropped_duplicates += 1
                continue
            seen.add(key)
            eid = len(self.edges)
            self.edges.append((u, v))
            self.adj[u].append((v, eid))
            self.adj[v].append((u, eid))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return [w for (w, _e) in self.adj[v]]

    def has_edge(self, u: int, v: int) -> bool:
        if len(self.adj[u]) > len(self.adj[v]):
            u, v = v, u
        return any(w == v for (w, _e) in self.adj[u])

    def shuffled(self, seed: int) -> Graph:
        """Return a copy whose adjacency lists are independently permuted.

        Edge ids and the edge list are preserved; only scan order changes.
        """
        rng = random.Random(seed)
        g = Graph(self.n)
        g.edges = list(self.edges)
        g.adj = [list(a) for a in self.adj]
        for a in g.adj:
            rng.shuffle(a)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class Matching:
    """Mate array; ``mate[v]`` is the partner of ``v`` or None if free."""

    mate: list[Optional[int]] = field(default_factory=list)

    @classmethod
    def empty(cls, n: int) -> Matching:
        return cls([None] * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Matching:
        m = cls.empty(n)
        for (u, v) in pairs:
            m.mate[u] = v
            m.mate[v] = u
        return m

    def copy(self) -> Matching:
        return Matching(list(self.mate))

    def pairs(self) -> list[tuple[int, int]]:
        """Matched edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for (u, v) in enumerate(self.mate)
                if v is not None and u < v]

    def is_free(self, v: int) -> bool:
        return self.mate[v] is None

    def __len__(self) -> int:
        return len(self.pairs())


def matching_size(m: Matching) -> int:
    """Number of matched pairs."""
    return sum(1 for v in m.mate if v is not None) // 2


def validate_matching(g: Graph, m: Matching) -> tuple[bool, list[str]]:
    """Check symmetry and edge existence of a mate array.

    Returns ``(ok, violations)``; violations are human-readable strings
    with 1-based vertex ids.
    """
    violations: list[str] = []
    if len(m.mate) != g.n:
        return False, [f"mate array has length {len(m.mate)}, expected {g.n}"]
    for u, v in enumerate(m.mate):
        if v is None:
            continue
        if not 0 <= v < g.n:
            violations.append(f"mate({u + 1}) = {v + 1} is out of range")
            continue
        if m.mate[v] != u:
            violations.append(f"mate({u + 1}) = {v + 1} but mate({v + 1}) = "
                              f"{'none' if m.mate[v] is None else m.mate[v] + 1}")
        elif u < v and not g.has_edge(u, v):
            violations.append(f"matched pair {u + 1} {v + 1} is not an edge")
    return (not violations), violations


# ---------------------------------------------------------------------------
# DIMACS edge format

def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse a DIMACS edge-format graph.

    Accepts ``c`` comment lines, one ``p edge <n> <m>`` header and ``e <u> <v>``
    edge lines with 1-based ids. Self-loops and repeated edges are dropped
    (counted on the returned graph and logged). The header edge count must
    match the number of ``e`` lines.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n: Optional[int] = None
    declared_m = 0
    header_line = 0
    raw: list[tuple[int, int]] = []
    for lineno, line in enumerate(lines, start=1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "edges", "col"):
                raise ParseError("malformed header, expected 'p edge <n> <m>'",
                                 lineno)
            try:
                n, declared_m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError("non-integer value in header", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative value in header", lineno)
            header_line = lineno
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(tok) < 3:
                raise ParseError("malformed edge line", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError("non-integer vertex id", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            raw.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if len(raw) != declared_m:
        raise ParseError(f"header declares {declared_m} edges, found {len(raw)}",
                         header_line)
    g = Graph(n, raw)
    if g.dropped_loops:
        log.warning("dropped %d self-loop(s)", g.dropped_loops)
    if g.dropped_duplicates:
        log.warning("dropped %d duplicate edge(s)", g.dropped_duplicates)
    return g


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p edge {g.n} {g.m}")
    out.extend(f"e {u + 1} {v + 1}" for (u, v) in g.edges)
    return "\n".join(out) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="ascii") as f:
        return parse_graph(f.read())


# ---------------------------------------------------------------------------
# Matching files: one "<u> <v>" line per matched edge, 1-based, u < v, sorted.

def format_matching(m: Matching) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for (u, v) in m.pairs())


def parse_matching(text: str, n: int) -> Matching:
    m = Matching.empty(n)
    for lineno, line in enumerate(text.splitlines(), start=1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        if len(tok) != 2:
            raise ParseError("expected '<u> <v>'", lineno)
        try:
            u, v = int(tok[0]) - 1, int(tok[1]) - 1
        except ValueError:
            raise ParseError("non-integer vertex id", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError("vertex id out of range", lineno)
        if m.mate[u] is not None or m.mate[v] is not None:
            raise ParseError("vertex matched twice", lineno)
        m.mate[u] = v
        m.mate[v] = u
    return m

