"""
Part I: phased growth of alternating search structures.

Phase ``delta`` first grows out of even vertices with lcp ``delta - 2``
(even phases only) and then processes bridges, non-matching even-even edges
with lcp-sum ``2*delta - 2``. A bridge joining two trees ends the search
with a shortest augmenting path of length ``2*delta - 1``; a bridge inside
one tree forms a blossom and makes its odd vertices even.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Union

from .graph import Graph, Matching
from .paths import BRIDGE, GROW, walk_down, edges_to_vertices
from .unionfind import LoggedUnionFind, replay_log

UNLABELED = 0
EVEN = 1
ODD = 2

Tracer = Optional[Callable[[str], None]]


class GrowFrom(NamedTuple):
    v: int


class Bridge(NamedTuple):
    x: int
    y: int


Event = Union[GrowFrom, Bridge]


class BucketQueue:
    """Events keyed by phase number, consumed in increasing phase order.

    Within a bucket all growth events come before any bridge event; bridge
    events leave in insertion order, including those appended while the
    bucket is being drained.
    """

    __slots__ = ("grow", "bridge", "cursor", "_pos", "pending")

    def __init__(self) -> None:
        self.grow: dict[int, list[int]] = {}
        self.bridge: dict[int, list[tuple[int, int]]] = {}
        self.cursor = 0
        self._pos = 0
        self.pending = 0

    def push_grow(self, bucket: int, v: int) -> None:
        if bucket < self.cursor:
            raise AssertionError(f"growth event for phase {bucket} scheduled "
                                 f"during phase {self.cursor}")
        self.grow.setdefault(bucket, []).append(v)
        self.pending += 1

    def push_bridge(self, bucket: int, x: int, y: int) -> None:
        if bucket < self.cursor:
            raise AssertionError(f"bridge event for phase {bucket} scheduled "
                                 f"during phase {self.cursor}")
        self.bridge.setdefault(bucket, []).append((x, y))
        self.pending += 1

    def advance(self, delta: int) -> None:
        self.cursor = delta
        self._pos = 0

    def take_grows(self) -> list[int]:
        vs = self.grow.pop(self.cursor, [])
        self.pending -= len(vs)
        return vs

    def pop(self) -> Optional[Event]:
        """Next event of the current bucket, or None once it is exhausted."""
        if self.cursor in self.grow:
            vs = self.grow[self.cursor]
            v = vs.pop(0)
            if not vs:
                del self.grow[self.cursor]
            self.pending -= 1
            return GrowFrom(v)
        br = self.bridge.get(self.cursor)
        if br is None or self._pos >= len(br):
            return None
        e = br[self._pos]
        self._pos += 1
        self.pending -= 1
        return Bridge(*e)

    def drop_current(self) -> None:
        br = self.bridge.pop(self.cursor, None)
        if br is not None:
            self.pending -= len(br) - self._pos
        gr = self.grow.pop(self.cursor, None)
        if gr is not None:
            self.pending -= len(gr)
        self._pos = 0


class SearchState:
    """Everything Part I knows about the search structures.

    Per-vertex arrays: ``label``, ``born_odd``, ``lcp`` and ``lcp_odd``
    (None when undefined), ``parent`` (tree edge toward the root; for an
    odd vertex this is the even vertex it was grown from), ``root`` (the
    free vertex of its tree) and ``bridge_of`` (``(near, far)`` for a
    vertex born odd and later made even, ``near`` being the bridge
    endpoint on its side). ``base_uf`` holds the current blossoms and
    ``dbase_uf`` the blossoms as of the end of the previous phase.
    Every write made during the current phase is recorded in ``lcp_log``
    as ``(array, vertex, old value)``; a growth step, which only touches
    two unlabeled vertices, is recorded as ``(None, odd vertex, its mate)``.
    """

    def __init__(self, g: Graph, m: Matching, tracer: Tracer = None) -> None:
        n = g.n
        self.g = g
        self.mate = m.mate
        self.label = [UNLABELED] * n
        self.born_odd = [False] * n
        self.lcp: list[Optional[int]] = [None] * n
        self.lcp_odd: list[Optional[int]] = [None] * n
        self.parent: list[Optional[int]] = [None] * n
        self.root: list[Optional[int]] = [None] * n
        self.bridge_of: list[Optional[tuple[int, int]]] = [None] * n
        self.base_uf = LoggedUnionFind(n)
        self.dbase_uf = LoggedUnionFind(n)
        self.delta = 0
        self.buckets = BucketQueue()
        self.lcp_log: list[tuple[list, int, object]] = []
        self.tracer = tracer
        # Lock-step walk marks: generation stamp and side per vertex.
        self._mark_gen = [0] * n
        self._mark_side = [0] * n
        self._gen = 0

    # -- logged writes -----------------------------------------------------

    def _set(self, arr: list, v: int, value: object) -> None:
        self.lcp_log.append((arr, v, arr[v]))
        arr[v] = value

    def _trace(self, line: str) -> None:
        if self.tracer is not None:
            self.tracer(line)

    # -- scheduling --------------------------------------------------------

    def _became_even(self, v: int) -> None:
        """Schedule growth out of ``v`` and bridges to even neighbors."""
        lv = self.lcp[v]
        q = self.buckets
        q.push_grow(lv + 2, v)
        label, lcp, mv = self.label, self.lcp, self.mate[v]
        find = self.base_uf.find
        rv = None
        for (w, _e) in self.g.adj[v]:
            if label[w] == EVEN and w != mv:
                if rv is None:
                    rv = find(v)
                if find(w) != rv:
                    q.push_bridge((lv + lcp[w]) // 2 + 1, w, v)

    # -- the two step kinds ------------------------------------------------

    def growth_step(self, v: int, x: int) -> None:
        """Add unlabeled ``x`` as odd child of ``v`` and its mate as even
        grandchild."""
        d = self.delta
        y = self.mate[x]
        if y is None:
            raise AssertionError(f"unlabeled vertex {x} is free")
        # Both vertices were untouched, so a single record undoes the step.
        self.lcp_log.append((None, x, y))
        r = self.root[v]
        label = self.label
        label[x] = ODD
        self.born_odd[x] = True
        self.lcp_odd[x] = d - 1
        self.parent[x] = v
        self.root[x] = r
        label[y] = EVEN
        self.lcp[y] = d
        self.parent[y] = x
        self.root[y] = r
        if self.tracer is not None:
            self._trace(f"phase {d} grow {v + 1} {x + 1} {y + 1}")
            self._trace(f"phase {d} lcp {y + 1} {d}")
        self._became_even(y)

    def record_lcp_odd_of_even(self, v: int, x: int) -> None:
        """Scanning ``vx`` from ``v`` (lcp ``delta - 2``) reaches even ``x``
        with lcp ``delta``: the odd path through ``v`` has length
        ``delta - 1``. First write wins."""
        if self.lcp_odd[x] is None:
            self._set(self.lcp_odd, x, self.delta - 1)

    def grow_from(self, v: int) -> None:
        d = self.delta
        label, lcp = self.label, self.lcp
        for (x, _e) in self.g.adj[v]:
            lab = label[x]
            if lab == UNLABELED:
                self.growth_step(v, x)
            elif lab == EVEN and lcp[x] == d:
                self.record_lcp_odd_of_even(v, x)

    def find_blossom_base(self, x: int, y: int
                          ) -> Optional[tuple[int, list[int], list[int], list[int]]]:
        """Walk from the blocks of ``x`` and ``y`` toward their roots in
        lock-step until one side reaches a block the other side visited.

        Returns ``(base, odd_x, odd_y, bases)`` where ``odd_x``/``odd_y``
        are the odd vertices passed on each side (nearest to the bridge
        first) and ``bases`` the bases of all blocks passed, or None if the
        walks end at two different roots.
        """
        uf = self.base_uf
        parent = self.parent
        bx, by = uf.find_base(x), uf.find_base(y)
        if bx == by:
            return bx, [], [], [bx]
        self._gen += 1
        gen = self._gen
        mark_gen, mark_side = self._mark_gen, self._mark_side
        cur = [bx, by]
        odd: list[list[int]] = [[], []]
        seen: list[list[int]] = [[bx], [by]]
        done = [False, False]
        for s in (0, 1):
            mark_gen[cur[s]] = gen
            mark_side[cur[s]] = s
        side = 0
        while not (done[0] and done[1]):
            if not done[side]:
                b = cur[side]
                p = parent[b]
                if p is None:
                    done[side] = True
                else:
                    nb = uf.find_base(parent[p])
                    odd[side].append(p)
                    seen[side].append(nb)
                    cur[side] = nb
                    if mark_gen[nb] == gen and mark_side[nb] != side:
                        other = 1 - side
                        k = seen[other].index(nb)
                        del seen[other][k + 1:]
                        del odd[other][k:]
                        return (nb, odd[0], odd[1],
                                seen[0] + seen[1][:-1] if side == 1
                                else seen[0][:-1] + seen[1])
                    mark_gen[nb] = gen
                    mark_side[nb] = side
            side = 1 - side
        return None

    def bridge_step(self, x: int, y: int) -> str:
        """Process bridge ``xy``; returns "stale", "blossom" or
        "breakthrough"."""
        d = self.delta
        lcp = self.lcp
        if lcp[x] + lcp[y] != 2 * d - 2:
            raise AssertionError(f"bridge ({x}, {y}) has lcp-sum "
                                 f"{lcp[x] + lcp[y]} in phase {d}")
        uf = self.base_uf
        if uf.find(x) == uf.find(y):
            return "stale"
        if self.root[x] != self.root[y]:
            self._trace(f"phase {d} bridge {x + 1} {y + 1} breakthrough")
            return "breakthrough"
        found = self.find_blossom_base(x, y)
        if found is None:
            raise AssertionError("same root but no common block")
        b, odd_x, odd_y, bases = found
        self._trace(f"phase {d} bridge {x + 1} {y + 1} base {b + 1}")
        total = lcp[x] + 1 + lcp[y]
        s = self._set
        newly: list[int] = []
        for (near, far, odds) in ((x, y, odd_x), (y, x, odd_y)):
            for z in odds:
                s(self.label, z, EVEN)
                s(self.lcp, z, total - self.lcp_odd[z])
                s(self.bridge_of, z, (near, far))
                newly.append(z)
        for v in bases:
            uf.union(b, v, b)
        for z in newly:
            uf.union(b, z, b)
        for z in newly:
            self._trace(f"phase {d} lcp {z + 1} {lcp[z]}")
            self._became_even(z)
        return "blossom"

    def revert_phase(self) -> None:
        """Undo every write recorded in ``lcp_log``, newest first."""
        label, lcp, lcp_odd = self.label, self.lcp, self.lcp_odd
        for (arr, v, old) in reversed(self.lcp_log):
            if arr is not None:
                arr[v] = old
                continue
            # Growth record: v was grown as odd vertex, ``old`` its mate.
            for w in (v, old):
                label[w] = UNLABELED
                lcp[w] = lcp_odd[w] = None
                self.parent[w] = self.root[w] = None
            self.born_odd[v] = False
        self.lcp_log.clear()

    def end_phase(self, was_breakthrough: bool) -> None:
        if was_breakthrough:
            return
        replay_log(self.base_uf, self.dbase_uf)
        self.lcp_log.clear()

    # -- canonical paths inside blossoms ----------------------------------

    def _link(self, v: int) -> Optional[tuple]:
        if self.bridge_of[v] is not None and self.born_odd[v]:
            near, far = self.bridge_of[v]
            return (BRIDGE, near, far)
        x = self.parent[v]
        if x is None:
            return None
        return (GROW, x, x, self.parent[x])

    def path_to(self, v: int, b: int) -> list[int]:
        """Vertices of the canonical path of even ``v`` from ``v`` down to
        ``b``, a vertex on it (typically the base of a blossom holding
        ``v``)."""
        ident = range(self.g.n)
        return edges_to_vertices(v, walk_down(v, b, self._link, ident,
                                              self.mate))

    def canonical_path(self, v: int) -> list[int]:
        """Canonical path of even ``v`` from its root to ``v``."""
        r = self.root[v]
        return list(reversed(self.path_to(v, r)))


@dataclass
class Phase1Result:
    found: bool
    delta_break: Optional[int]
    breakthrough_edge: Optional[tuple[int, int]]
    state: SearchState = field(repr=False)


def run_phase1(g: Graph, m: Matching, full_run: bool = False,
               tracer: Tracer = None, max_delta: Optional[int] = None,
               on_phase_end: Optional[Callable[[SearchState], None]] = None,
               debug: bool = False) -> Phase1Result:
    """Search for a shortest augmenting path.

    With ``full_run`` the phase loop continues until every event is
    consumed (at most ``n + 1`` phases) so the final state supports a
    certificate; otherwise it stops after phase ``n // 2``, beyond which no
    augmenting path can appear. ``max_delta`` overrides the bound.
    ``on_phase_end`` is called after every completed phase; ``debug``
    checks structural invariants as the search runs.
    """
    n = g.n
    st = SearchState(g, m, tracer)
    if max_delta is None:
        max_delta = n + 1 if full_run else n // 2
    mate = m.mate
    for v in range(n):
        if mate[v] is None:
            st.label[v] = EVEN
            st.lcp[v] = 0
            st.root[v] = v
            st._trace(f"phase 0 lcp {v + 1} 0")
            st._became_even(v)
    st.end_phase(False)
    if on_phase_end is not None:
        on_phase_end(st)
    q = st.buckets
    delta = 1
    while delta <= max_delta and q.pending:
        st.delta = delta
        q.advance(delta)
        if delta % 2 == 0:
            for v in q.take_grows():
                st.grow_from(v)
        while True:
            ev = q.pop()
            if ev is None:
                break
            if isinstance(ev, GrowFrom):
                st.grow_from(ev.v)
                continue
            outcome = st.bridge_step(ev.x, ev.y)
            if outcome == "breakthrough":
                st.end_phase(True)
                return Phase1Result(True, delta, (ev.x, ev.y), st)
            if debug and outcome == "blossom":
                size = st.base_uf.block_size(ev.x)
                if size % 2 == 0:
                    raise AssertionError(f"blossom of even size {size}")
        st.end_phase(False)
        if debug:
            check_phase_invariants(st)
        if on_phase_end is not None:
            on_phase_end(st)
        delta += 1
    st.delta = delta - 1
    return Phase1Result(False, None, None, st)


def check_phase_invariants(st: SearchState) -> None:
    """Assert the end-of-phase invariants that hold for any input."""
    g, label, lcp, lcp_odd, mate = st.g, st.label, st.lcp, st.lcp_odd, st.mate
    for v in range(g.n):
        if (label[v] == EVEN) != (lcp[v] is not None):
            raise AssertionError(f"vertex {v}: even label and lcp disagree")
        if lcp[v] is not None and lcp[v] % 2:
            raise AssertionError(f"vertex {v}: odd lcp {lcp[v]}")
        if lcp_odd[v] is not None and lcp_odd[v] % 2 == 0:
            raise AssertionError(f"vertex {v}: even lcp_odd {lcp_odd[v]}")
        w = mate[v]
        if w is not None and (label[v] == UNLABELED) != (label[w] == UNLABELED):
            raise AssertionError(f"matched pair {v}, {w} half labeled")
    for (u, v) in g.edges:
        for (a, b) in ((u, v), (v, u)):
            if label[a] == EVEN and lcp_odd[b] is not None:
                if lcp_odd[b] > lcp[a] + 1:
                    raise AssertionError(f"edge {a}-{b}: lcp_odd {lcp_odd[b]} "
                                         f"> lcp {lcp[a]} + 1")
    sizes: dict[int, int] = {}
    for v in range(g.n):
        r = st.base_uf.find(v)
        sizes[r] = sizes.get(r, 0) + 1
    for r, s in sizes.items():
        if s % 2 == 0:
            raise AssertionError(f"blossom with base {st.base_uf.base_of[r]} "
                                 f"has even size {s}")
