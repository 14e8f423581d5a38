import random

from hypothesis import given, settings
from hypothesis import strategies as st

from sapmatch.unionfind import LoggedUnionFind, replay_log

from conftest import vid


class NaiveSets:
    def __init__(self, n):
        self.block = [{v} for v in range(n)]
        self.base = list(range(n))

    def union(self, a, b, base):
        if b in self.block[a]:
            return
        merged = self.block[a] | self.block[b]
        for v in merged:
            self.block[v] = merged
            self.base[v] = base

    def partition(self):
        return sorted({tuple(sorted(s)) for s in self.block})


def as_partition(uf):
    return sorted(tuple(b) for b in uf.blocks())


def test_fresh_structure_is_identity():
    uf = LoggedUnionFind(5)
    assert [uf.find_base(v) for v in range(5)] == list(range(5))


def test_blossom_cde_has_base_c():
    uf = LoggedUnionFind(18)
    c, d, e = vid("c"), vid("d"), vid("e")
    uf.union_with_base([d, e], c)
    assert uf.find_base(d) == c and uf.find_base(e) == c


def test_nested_merge_hijk_into_g():
    uf = LoggedUnionFind(18)
    g, h, i, j, k = (vid(x) for x in "ghijk")
    uf.union(h, i, h)
    uf.union(j, k, j)
    uf.union_with_base([h, j], g)
    assert uf.find_base(h) == uf.find_base(j) == uf.find_base(k) == g


def test_self_union_is_noop():
    uf = LoggedUnionFind(3)
    uf.union_with_base([1], 1)
    assert uf.log == []


def test_empty_log_replay_leaves_dst():
    src, dst = LoggedUnionFind(4), LoggedUnionFind(4)
    dst.union(0, 1, 0)
    replay_log(src, dst)
    assert as_partition(dst) == [(0, 1), (2,), (3,)]


def test_replay_of_phase_four_blossom():
    base, dbase = LoggedUnionFind(18), LoggedUnionFind(18)
    c, d, e = vid("c"), vid("d"), vid("e")
    base.union_with_base([d, e], c)
    assert as_partition(dbase) == [(v,) for v in range(18)]
    replay_log(base, dbase)
    assert base.log == []
    assert (c, d, e) in as_partition(dbase)
    assert dbase.find_base(e) == c


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 30), st.lists(st.tuples(st.integers(0, 29),
                                              st.integers(0, 29),
                                              st.booleans()), max_size=60),
       st.integers(0, 60))
def test_matches_naive_and_replay(n, ops, checkpoint):
    uf, dst, naive = LoggedUnionFind(n), LoggedUnionFind(n), NaiveSets(n)
    for i, (a, b, pick_a) in enumerate(ops):
        a, b = a % n, b % n
        base = a if pick_a else b
        uf.union(a, b, base)
        naive.union(a, b, base)
        if i == checkpoint:
            replay_log(uf, dst)
    assert as_partition(uf) == naive.partition()
    assert [uf.find_base(v) for v in range(n)] == naive.base
    replay_log(uf, dst)
    assert as_partition(dst) == as_partition(uf)
    assert [dst.find_base(v) for v in range(n)] == naive.base
    assert uf.all_bases() == naive.base


def test_block_sizes():
    rng = random.Random(3)
    uf = LoggedUnionFind(40)
    for _ in range(30):
        uf.union(rng.randrange(40), rng.randrange(40), 0)
    for v in range(40):
        assert uf.block_size(v) == sum(1 for w in range(40) if uf.same(v, w))
