"""Optimality certificates: a vertex labeling whose counts bound every
matching from above."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, Matching, ParseError, matching_size, validate_matching
from .phase1 import EVEN, ODD, SearchState


@dataclass
class CertificateLabeling:
    """``labels[v]`` is a non-negative integer per vertex.

    Every edge must have an endpoint labeled 1 or both endpoints labeled
    with the same integer of at least 2. Then any matching has at most
    ``bound()`` edges.
    """

    labels: list[int]

    @property
    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.labels).items()))

    def bound(self) -> int:
        c = Counter(self.labels)
        return c.get(1, 0) + sum(k // 2 for lab, k in c.items() if lab >= 2)


class Verdict(enum.Enum):
    OK_EQUALITY = "OkEquality"
    OK_BOUND_ONLY = "OkBoundOnly"
    INVALID = "Invalid"


@dataclass
class Verification:
    verdict: Verdict
    reason: str = ""
    bound: Optional[int] = None
    size: Optional[int] = None
    bad_edge: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.verdict is not Verdict.INVALID

    def __str__(self) -> str:
        return self.verdict.value + (f": {self.reason}" if self.reason else "")


def label_vertices(state: SearchState, one_vertex: Optional[int] = None
                   ) -> CertificateLabeling:
    """Labeling read off a finished search.

    Vertices of each non-trivial blossom share a label of at least 2,
    assigned in ascending order of blossom base. Other even vertices get
    0 and odd vertices 1. Vertices never reached come in matched pairs:
    a single pair is labeled 0 (smaller id) and 1; with more pairs one
    vertex gets 1 and all the others one fresh shared label. That vertex is
    the smallest unreached id unless ``one_vertex`` names another.
    """
    n = state.g.n
    uf = state.base_uf
    label = state.label
    labels = [0] * n
    by_base: dict[int, list[int]] = {}
    for v in range(n):
        by_base.setdefault(uf.find_base(v), []).append(v)
    nxt = 2
    for b in sorted(by_base):
        block = by_base[b]
        if len(block) > 1:
            for v in block:
                labels[v] = nxt
            nxt += 1
    unreached = []
    for v in range(n):
        if len(by_base[uf.find_base(v)]) > 1:
            continue
        if label[v] == EVEN:
            labels[v] = 0
        elif label[v] == ODD:
            labels[v] = 1
        else:
            unreached.append(v)
    if len(unreached) == 2:
        a, b = unreached
        labels[a], labels[b] = 0, 1
    elif unreached:
        one = unreached[0] if one_vertex is None else one_vertex
        if one not in unreached:
            raise ValueError(f"vertex {one} was reached by the search")
        for v in unreached:
            labels[v] = 1 if v == one else nxt
    return CertificateLabeling(labels)


def verify_certificate(g: Graph, m: Matching, c: CertificateLabeling
                       ) -> Verification:
    """Check the edge condition, then compare the implied bound with |M|."""
    if len(c.labels) != g.n:
        return Verification(Verdict.INVALID,
                            f"labeling has {len(c.labels)} entries, "
                            f"graph has {g.n} vertices")
    if any(x < 0 for x in c.labels):
        return Verification(Verdict.INVALID, "negative label")
    ok, problems = validate_matching(g, m)
    if not ok:
        return Verification(Verdict.INVALID, "invalid matching: " + problems[0])
    lab = c.labels
    for (u, v) in g.edges:
        a, b = lab[u], lab[v]
        if a == 1 or b == 1 or (a == b and a >= 2):
            continue
        return Verification(
            Verdict.INVALID,
            f"edge {u + 1} {v + 1} joins labels {a} and {b}",
            bad_edge=(u, v))
    bound = c.bound()
    size = matching_size(m)
    if size > bound:
        # Unreachable for a valid matching, kept as a guard.
        return Verification(Verdict.INVALID,
                            f"matching size {size} exceeds bound {bound}",
                            bound, size)
    if size == bound:
        return Verification(Verdict.OK_EQUALITY, "", bound, size)
    return Verification(Verdict.OK_BOUND_ONLY,
                        f"matching size {size} below bound {bound}",
                        bound, size)


def build_certificate(g: Graph, m: Matching, state: SearchState
                      ) -> CertificateLabeling:
    """Labeling from an exhaustive search that found no augmenting path.
    Raises ``AssertionError`` unless it proves ``m`` maximum."""
    c = label_vertices(state)
    res = verify_certificate(g, m, c)
    if res.verdict is not Verdict.OK_EQUALITY:
        raise AssertionError(f"certificate does not prove optimality: {res}")
    return c


def format_certificate(c: CertificateLabeling) -> str:
    lines = ["c certificate"]
    lines.extend(f"{v + 1} {lab}" for v, lab in enumerate(c.labels))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, n: int) -> CertificateLabeling:
    """Read ``<v> <label>`` lines (1-based); every vertex must appear once."""
    labels: list[Optional[int]] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<vertex> <label>', got {line!r}", lineno)
        try:
            v, lab = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
        if lab < 0:
            raise ParseError(f"negative label {lab}", lineno)
        if labels[v - 1] is not None:
            raise ParseError(f"vertex {v} labeled twice", lineno)
        labels[v - 1] = lab
    missing = [i + 1 for i, x in enumerate(labels) if x is None]
    if missing:
        raise ParseError(f"no label for vertex {missing[0]}")
    return CertificateLabeling([int(x) for x in labels])  # type: ignore[arg-type]
