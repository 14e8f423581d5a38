import itertools
import math

import pytest

from sapmatch import Graph, Matching
from sapmatch.oracle import (FIXTURE_LIMITS, OracleLimitError, OracleLimits,
                             oracle_lcp, oracle_max_disjoint_saps,
                             oracle_max_matching, oracle_sap_length,
                             oracle_sap_paths, oracle_saps)

from conftest import random_pairs, vid


def complete(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def test_triangle():
    assert oracle_max_matching(complete(3)) == 1


def test_example7(ex7):
    g, _ = ex7
    assert oracle_max_matching(g) == 3


def test_example18_needs_relaxed_limits(ex18):
    g, m = ex18
    with pytest.raises(OracleLimitError):
        oracle_max_matching(g)
    assert oracle_max_matching(g, FIXTURE_LIMITS) == 9


@pytest.mark.parametrize("k", range(1, 6))
def test_complete_graphs(k):
    limits = OracleLimits(max_vertices=12, max_edges=64)
    assert oracle_max_matching(complete(2 * k), limits) == k


def test_example18_lcp(ex18):
    g, m = ex18
    even, odd = oracle_lcp(g, m, FIXTURE_LIMITS)
    assert even[vid("d")] == 4 and odd[vid("d")] == 3
    assert even[vid("b")] == 10 and odd[vid("b")] == 1
    assert even[vid("c")] == 2
    assert even[vid("a")] == 0 and odd[vid("a")] == 13


def test_example18_shortest_path(ex18):
    g, m = ex18
    assert oracle_sap_length(g, m, FIXTURE_LIMITS) == 13
    length, masks = oracle_saps(g, m, FIXTURE_LIMITS)
    assert length == 13 and len(masks) == 1
    assert oracle_max_disjoint_saps(g, m, FIXTURE_LIMITS) == 1


def test_no_augmenting_path():
    g = Graph(2, [(0, 1)])
    m = Matching.from_pairs(2, [(0, 1)])
    assert oracle_sap_length(g, m) is None
    assert oracle_max_disjoint_saps(g, m) == 0
    assert oracle_sap_paths(g, m) == []


def test_two_free_edges():
    g = Graph(4, [(0, 1), (2, 3)])
    assert oracle_max_disjoint_saps(g, Matching.empty(4)) == 2
    assert oracle_sap_paths(g, Matching.empty(4)) == [[0, 1], [2, 3]]


def test_lcp_parity():
    for g, m in random_pairs(300, seed=61):
        even, odd = oracle_lcp(g, m)
        for v in range(g.n):
            assert even[v] == math.inf or even[v] % 2 == 0
            assert odd[v] == math.inf or odd[v] % 2 == 1


def test_sap_paths_match_masks():
    for g, m in random_pairs(300, seed=62):
        length, masks = oracle_saps(g, m)
        paths = oracle_sap_paths(g, m)
        assert sorted({sum(1 << v for v in p) for p in paths}) == \
            sorted(set(masks))
        assert all(len(p) - 1 == length for p in paths)


def test_limits():
    with pytest.raises(OracleLimitError):
        oracle_max_matching(complete(13))
