from __future__ import annotations

import random
from pathlib import Path

import pytest

from sapmatch.generators import gen_random
from sapmatch.graph import Graph, Matching, parse_graph, parse_matching

DATA = Path(__file__).parent / "data"

EX18_NAMES = "abcdefghijklmnopqr"
EX7_NAMES = "abcdefg"


def vid(name: str, names: str = EX18_NAMES) -> int:
    return names.index(name)


def names_of(vs, names: str = EX18_NAMES) -> str:
    return "".join(names[v] for v in vs)


@pytest.fixture
def ex18() -> tuple[Graph, Matching]:
    g = parse_graph((DATA / "example18.dimacs").read_text())
    m = parse_matching((DATA / "example18_matching.txt").read_text(), g.n)
    return g, m


@pytest.fixture
def ex7() -> tuple[Graph, Matching]:
    g = parse_graph((DATA / "example7.dimacs").read_text())
    m = parse_matching((DATA / "example7_matching.txt").read_text(), g.n)
    return g, m


def random_matching(g: Graph, rng: random.Random, keep: float = 0.6) -> Matching:
    """A random, not necessarily maximal, matching of ``g``."""
    mate: list = [None] * g.n
    edges = list(g.edges)
    rng.shuffle(edges)
    for (u, v) in edges:
        if mate[u] is None and mate[v] is None and rng.random() < keep:
            mate[u], mate[v] = v, u
    return Matching(mate)


def random_pairs(count: int, seed: int, max_n: int = 10, max_m: int = 24):
    """Deterministic corpus of (graph, matching) pairs on at most ``max_n``
    vertices."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(0, min(max_m, n * (n - 1) // 2))
        g = gen_random(n, m, rng.randrange(2**32))
        yield g, random_matching(g, rng)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
