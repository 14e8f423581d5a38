"""Union-find over vertices with a designated base per block and a union log."""

from __future__ import annotations


class LoggedUnionFind:
    """Disjoint sets with union by rank, path compression and base tracking.

    Each block has one designated *base* vertex, kept in a table indexed by
    the block representative so that path compression never disturbs it.
    Every merge is appended to ``log`` as ``(a, b, base)`` where ``a`` and
    ``b`` are members of the two merged blocks; ``replay_log`` folds these
    onto a second structure.
    """

    __slots__ = ("parent", "rank", "size", "base_of", "log")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n
        self.size = [1] * n
        self.base_of = list(range(n))
        self.log: list[tuple[int, int, int]] = []

    def find(self, v: int) -> int:
        """Representative of the block of ``v`` (not necessarily its base)."""
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def find_base(self, v: int) -> int:
        return self.base_of[self.find(v)]

    def all_bases(self) -> list[int]:
        """``find_base`` of every vertex, in one pass."""
        parent, base_of = self.parent, self.base_of
        out = []
        for v in range(len(parent)):
            r = v
            while parent[r] != r:
                r = parent[r]
            out.append(base_of[r])
        return out

    def same(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def _link(self, ra: int, rb: int) -> int:
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return ra

    def union(self, a: int, b: int, base: int) -> None:
        """Merge the blocks of ``a`` and ``b``; the result has base ``base``."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        r = self._link(ra, rb)
        self.base_of[r] = base
        self.log.append((a, b, base))

    def union_with_base(self, blocks: list[int], base: int) -> None:
        """Merge the blocks containing each vertex of ``blocks`` into one
        block whose base is ``base``. ``base`` must lie in one of them."""
        for v in blocks:
            self.union(base, v, base)

    def block_size(self, v: int) -> int:
        return self.size[self.find(v)]

    def blocks(self) -> list[list[int]]:
        """Partition as sorted lists, ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        return sorted(groups.values())

    def copy(self) -> LoggedUnionFind:
        c = LoggedUnionFind(0)
        c.parent = list(self.parent)
        c.rank = list(self.rank)
        c.size = list(self.size)
        c.base_of = list(self.base_of)
        c.log = list(self.log)
        return c


def replay_log(src: LoggedUnionFind, dst: LoggedUnionFind) -> None:
    """Apply the merges logged on ``src`` since its last checkpoint to
    ``dst`` and clear the log."""
    for (a, b, base) in src.log:
        ra, rb = dst.find(a), dst.find(b)
        if ra != rb:
            dst.base_of[dst._link(ra, rb)] = base
    src.log.clear()
