"""
Exponential reference computations for small graphs.

Everything here is brute force over vertex subsets and simple paths, with
no shared logic with the solver, so it can serve as ground truth in tests
and in ``verify --oracle``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import Graph, Matching

INF = math.inf


class OracleLimitError(ValueError):
    """Input exceeds the size limits of the brute-force procedures."""


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 12
    max_edges: int = 24
    # Opt-in for hand-made fixtures of up to 18 vertices.
    relaxed: bool = False

    def check(self, g: Graph) -> None:
        nv = 18 if self.relaxed else self.max_vertices
        ne = max(self.max_edges, 32) if self.relaxed else self.max_edges
        if g.n > nv or g.m > ne:
            raise OracleLimitError(
                f"graph with n={g.n}, m={g.m} exceeds oracle limits "
                f"(n <= {nv}, m <= {ne})")


DEFAULT_LIMITS = OracleLimits()
FIXTURE_LIMITS = OracleLimits(relaxed=True)


def oracle_max_matching(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Maximum matching size: the lowest remaining vertex is either left
    unmatched or matched to a remaining neighbor, memoized on the vertex
    set."""
    limits.check(g)
    nbr = [0] * g.n
    for (u, v) in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        # Drop vertices with no neighbor left.
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if nbr[v] & mask:
                break
            mask ^= low
        if not mask:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        top = best(rest)
        cand = nbr[v] & rest
        bound = 1 + (bin(rest).count("1") - 1) // 2
        while cand and top < bound:
            lu = cand & -cand
            cand ^= lu
            top = max(top, 1 + best(rest ^ lu))
        return top

    return best((1 << g.n) - 1)


def _alternating_states(g: Graph, m: Matching):
    """Yield ``(mask, v)`` for every simple alternating path that starts at
    a free vertex, visits exactly ``mask`` and ends at ``v``, in order of
    nondecreasing length. The path length is ``popcount(mask) - 1``; its
    parity fixes whether the next edge must be matched."""
    mate = m.mate
    adj = [[w for (w, _e) in g.adj[v]] for v in range(g.n)]
    layer = {(1 << v, v) for v in range(g.n) if mate[v] is None}
    length = 0
    while layer:
        yield from sorted(layer)
        nxt: set[tuple[int, int]] = set()
        for (mask, v) in layer:
            if length % 2 == 0:
                mv = mate[v]
                for w in adj[v]:
                    if w != mv and not (mask >> w) & 1:
                        nxt.add((mask | (1 << w), w))
            else:
                w = mate[v]
                if w is not None and not (mask >> w) & 1:
                    nxt.add((mask | (1 << w), w))
        layer = nxt
        length += 1


def oracle_lcp(g: Graph, m: Matching, limits: OracleLimits = DEFAULT_LIMITS
               ) -> tuple[list[float], list[float]]:
    """Per-vertex lengths of the shortest even and odd simple alternating
    paths from a free vertex (``math.inf`` when none exists)."""
    limits.check(g)
    even = [INF] * g.n
    odd = [INF] * g.n
    for (mask, v) in _alternating_states(g, m):
        length = bin(mask).count("1") - 1
        target = even if length % 2 == 0 else odd
        if length < target[v]:
            target[v] = length
    return even, odd


def oracle_saps(g: Graph, m: Matching, limits: OracleLimits = DEFAULT_LIMITS
                ) -> tuple[Optional[int], list[int]]:
    """Length of a shortest augmenting path and the distinct vertex sets
    (as bit masks) of all shortest augmenting paths."""
    limits.check(g)
    mate = m.mate
    best: Optional[int] = None
    found: set[int] = set()
    for (mask, v) in _alternating_states(g, m):
        length = bin(mask).count("1") - 1
        if best is not None and length > best:
            break
        if length % 2 == 1 and mate[v] is None:
            best = length
            found.add(mask)
    return best, sorted(found)


def oracle_sap_length(g: Graph, m: Matching,
                      limits: OracleLimits = DEFAULT_LIMITS) -> Optional[int]:
    return oracle_saps(g, m, limits)[0]


def oracle_max_disjoint_saps(g: Graph, m: Matching,
                             limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Largest number of pairwise vertex-disjoint shortest augmenting
    paths, by exhaustive packing."""
    _length, sets = oracle_saps(g, m, limits)

    @lru_cache(maxsize=None)
    def pack(i: int, used: int) -> int:
        while i < len(sets) and sets[i] & used:
            i += 1
        if i == len(sets):
            return 0
        return max(1 + pack(i + 1, used | sets[i]), pack(i + 1, used))

    return pack(0, 0)


def oracle_sap_paths(g: Graph, m: Matching,
                     limits: OracleLimits = DEFAULT_LIMITS) -> list[list[int]]:
    """Every shortest augmenting path as a vertex list, each listed once
    from its smaller endpoint."""
    length = oracle_sap_length(g, m, limits)
    if length is None:
        return []
    mate = m.mate
    out: list[list[int]] = []
    path: list[int] = []
    on_path = [False] * g.n

    def extend(v: int) -> None:
        path.append(v)
        on_path[v] = True
        k = len(path) - 1
        if k == length:
            if mate[v] is None and path[0] < v:
                out.append(list(path))
        elif k % 2 == 0:
            for (w, _e) in g.adj[v]:
                if w != mate[v] and not on_path[w]:
                    extend(w)
        else:
            w = mate[v]
            if w is not None and not on_path[w]:
                extend(w)
        on_path[v] = False
        path.pop()

    for f in range(g.n):
        if mate[f] is None:
            extend(f)
    return sorted(out)
