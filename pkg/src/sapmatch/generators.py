"""Benchmark graph families: short chains, short plus long chains, random."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, serialize_graph

FAMILIES = ("short", "short-long", "random")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    m: Optional[int] = None
    seed: Optional[int] = None

    def build(self) -> Graph:
        if self.family == "short":
            return gen_short_chains(self.n)
        if self.family == "short-long":
            return gen_short_long_chains(self.n)
        if self.family == "random":
            if self.m is None:
                raise ValueError("random family needs an edge count")
            return gen_random(self.n, self.m, self.seed or 0)
        raise ValueError(f"unknown family {self.family!r}; "
                         f"expected one of {', '.join(FAMILIES)}")

    def provenance(self) -> str:
        if self.family == "random":
            params = f"n={self.n} m={self.m}"
        else:
            params = f"n={self.n}"
        return f"generator {self.family} {params} {self.seed or 0}"

    def to_dimacs(self) -> str:
        return serialize_graph(self.build(), [self.provenance()])


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def chain(self, hub: int, count: int) -> None:
        """Hang a path of ``count`` (odd, at least 7) new vertices
        ``x_1 .. x_count`` off ``hub`` by the edge ``hub x_1``.

        The layout is adversarial for a first round that matches greedily
        in id order along adjacency lists: it leaves ``x_1``, ``x_b`` and
        ``x_count`` free and matches the rest in pairs, so the chain holds
        two augmenting paths of odd lengths ``b - 1`` and ``count - b``
        that are as long as possible. ``x_b`` and ``x_1`` get the last ids,
        and edges are listed from the far end so every vertex sees its
        successor first.
        """
        j = (count - 1) // 2
        b = j + 1 if j % 2 else j
        order = list(range(2, b)) + list(range(b + 1, count + 1)) + [b, 1]
        x = {pos: self.new() for pos in order}
        for pos in range(count - 1, 0, -1):
            self.edges.append((x[pos], x[pos + 1]))
        self.edges.append((hub, x[1]))

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _core(n_target: int) -> tuple[_Builder, int]:
    """Complete graph on about sqrt(n) vertices plus the short chains; the
    hub ``z`` is vertex 0 and the clique edges come first."""
    k = math.isqrt(n_target - 1) + 1  # ceil(sqrt(n_target))
    b = _Builder()
    clique = [b.new() for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            b.edges.append((clique[i], clique[j]))
    z = clique[0]
    for _ in range((n_target - k) // 7):
        b.chain(z, 7)
    return b, k


def gen_short_chains(n_target: int) -> Graph:
    """``K_k`` with ``k = ceil(sqrt(n_target))`` and ``(n_target - k) // 7``
    chains of seven edges hanging off one clique vertex."""
    if n_target < 16:
        raise ValueError("short-chain graphs need n_target >= 16")
    b, _k = _core(n_target)
    return b.graph()


def gen_short_long_chains(n_target: int) -> Graph:
    """The short-chain graph plus, for ``4 <= i <= ceil(sqrt(n_target))``,
    one chain of ``2i + 1`` edges hanging off the same hub."""
    if n_target < 100:
        raise ValueError("short-and-long-chain graphs need n_target >= 100")
    b, k = _core(n_target)
    for i in range(4, k + 1):
        b.chain(0, 2 * i + 1)
    return b.graph()


def gen_random(n: int, m: int, seed: int) -> Graph:
    """``m`` distinct edges drawn uniformly without replacement."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise ValueError(f"cannot place {m} distinct edges on {n} vertices")
    rng = random.Random(seed)
    edges = []
    for idx in rng.sample(range(total), m):
        # Row u holds pairs (u, v) for v > u; rows shrink by one each step.
        u = n - 2 - int((math.isqrt(8 * (total - 1 - idx) + 1) - 1) // 2)
        start = u * (2 * n - u - 1) // 2
        v = u + 1 + idx - start
        edges.append((u, v))
    return Graph(n, edges)
