"""
Part III: a maximal set of disjoint augmenting paths in the contracted
graph, found by depth-first search with blossom steps, then lifted to the
original graph and augmented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import Matching
from .paths import BRIDGE, GROW, edges_to_vertices, walk_down
from .phase1 import SearchState, Tracer
from .phase2 import ContractedView
from .unionfind import LoggedUnionFind

UNUSED = 0
S_EVEN = 1
S_ODD = 2


@dataclass
class PathCollection:
    """Augmenting paths found in one iteration.

    ``contracted`` holds each path as a list of original edges, oriented
    from the first free node to the last; consecutive edges meet inside one
    contracted node. ``nodes`` is the matching list of contracted-node
    sequences and ``lifted`` the expanded vertex paths once lifted.
    """

    contracted: list[list[tuple[int, int]]] = field(default_factory=list)
    nodes: list[list[int]] = field(default_factory=list)
    used: set[int] = field(default_factory=set)
    lifted: list[list[int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.contracted)


class DfsForest:
    """Depth-first search structure over contracted nodes.

    Contracted nodes are named by their base vertex. ``label`` is
    UNUSED/S_EVEN/S_ODD, ``blossom`` tracks the bases of blossoms formed
    here (independent of the blossoms of Part I), ``eventime`` stamps
    nodes in the order they become even. An odd node remembers the edge
    it was reached by in ``odd_edge``; a node made even by a blossom step
    remembers the closing edge ``(far, near)`` in ``closing``.
    """

    def __init__(self, view: ContractedView, track_order: bool = False,
                 tracer: Tracer = None) -> None:
        n = view.g.n
        self.view = view
        self.node = view.node
        self.mate = view.mate
        self.label = [UNUSED] * n
        self.blossom = LoggedUnionFind(n)
        self.eventime = [0] * n
        self.t = 0
        self.odd_edge: list[Optional[tuple[int, int]]] = [None] * n
        self.closing: list[Optional[tuple[int, int]]] = [None] * n
        self.in_cp = [False] * n
        self.tracer = tracer
        # Left-to-right child lists of even bases; only kept on request.
        self.children: Optional[dict[int, list[int]]] = {} if track_order else None
        self._members = view.members()

    # -- scanning ----------------------------------------------------------

    def h_neighbors(self, x: int) -> Iterator[tuple[int, int, int]]:
        """Non-matching contracted edges out of node ``x`` as
        ``(x_end, y_end, y)``: member-by-member, adjacency order."""
        g, mate, node = self.view.g, self.mate, self.node
        classify = self.view.classify_edge
        for u in self._members.get(x, (x,)):
            mu = mate[u]
            for (w, _e) in g.adj[u]:
                if w == mu:
                    continue
                y = node[w]
                if y != x and classify(u, w) is not None:
                    yield (u, w, y)

    def make_even(self, v: int) -> None:
        self.label[v] = S_EVEN
        self.eventime[v] = self.t
        self.t += 1

    def grow(self, x: int, xe: int, ye: int, y: int) -> int:
        y2 = self.mate[y]
        self.label[y] = S_ODD
        self.odd_edge[y] = (xe, ye)
        self.make_even(y2)
        if self.children is not None:
            self.children.setdefault(self.blossom.find_base(x), []).append(y)
            self.children[y2] = []
        if self.tracer is not None:
            self.tracer(f"dfs grow {x + 1} {y + 1} {y2 + 1}")
        return y2

    def tree_parent(self, b: int) -> Optional[int]:
        """Blossom base above blossom base ``b`` (None at a root)."""
        u = self.mate[b]
        if u is None or self.odd_edge[u] is None:
            return None
        return self.blossom.find_base(self.node[self.odd_edge[u][0]])

    def is_proper_descendant(self, by: int, bx: int) -> bool:
        b = self.tree_parent(by)
        while b is not None:
            if b == bx:
                return True
            b = self.tree_parent(b)
        return False

    def blossom_step(self, x: int, xe: int, ye: int, bx: int, by: int
                     ) -> list[int]:
        """Merge the blossoms on the tree path from ``bx`` down to ``by``.
        Returns the formerly odd nodes ordered from nearest ``bx``."""
        us: list[int] = []
        vs = [by]
        v = by
        while v != bx:
            u = self.mate[v]
            us.append(u)
            v = self.blossom.find_base(self.node[self.odd_edge[u][0]])
            vs.append(v)
        us.reverse()
        vs.reverse()
        if self.children is not None:
            self._merge_children(vs, us)
        uf = self.blossom
        for w in vs:
            uf.union(bx, w, bx)
        for u in us:
            uf.union(bx, u, bx)
        for u in us:
            self.make_even(u)
            self.closing[u] = (xe, ye)
        if self.tracer is not None:
            self.tracer(f"dfs blossom {x + 1} {self.node[ye] + 1} base {bx + 1}")
        return us

    def _merge_children(self, vs: list[int], us: list[int]) -> None:
        # vs = v_0..v_k, us = u_1..u_k; u_{i+1} is a child of v_i.
        ch = self.children
        left: list[int] = []
        right: list[list[int]] = []
        for i, u in enumerate(us):
            lst = ch.get(vs[i], [])
            j = lst.index(u)
            left.extend(lst[:j])
            right.append(lst[j + 1:])
        merged = left + ch.get(vs[-1], [])
        for r in reversed(right):
            merged.extend(r)
        for w in vs[1:]:
            ch.pop(w, None)
        for u in us:
            ch.pop(u, None)
        ch[vs[0]] = merged

    # -- canonical paths ---------------------------------------------------

    def _link(self, v: int) -> Optional[tuple]:
        c = self.closing[v]
        if c is not None:
            far, near = c
            return (BRIDGE, near, far)
        y = self.mate[v]
        if y is None or self.odd_edge[y] is None:
            return None
        xe, ye = self.odd_edge[y]
        return (GROW, y, ye, xe)

    def canonical_path(self, x: int, root: int) -> list[tuple[int, int]]:
        """Edges of P(x) from ``root`` to even node ``x``."""
        return walk_down(x, root, self._link, self.node, self.mate,
                         reverse=True)

    def canonical_nodes(self, x: int, root: int) -> list[int]:
        node = self.node
        nodes = [root]
        for (p, q) in self.canonical_path(x, root):
            if node[p] != nodes[-1]:
                raise AssertionError("canonical path is not contiguous")
            nodes.append(node[q])
        return nodes


def find_ap_set(view: ContractedView, tracer: Tracer = None,
                debug: bool = False, forest: Optional[DfsForest] = None
                ) -> PathCollection:
    """Depth-first search from every free contracted node, in ascending
    order, collecting vertex-disjoint augmenting paths.

    The recursion of the textbook formulation runs on an explicit stack of
    (node, edge iterator) frames; finding a path clears the stack.
    """
    f = forest if forest is not None else DfsForest(view, track_order=debug,
                                                    tracer=tracer)
    cp = PathCollection()
    mate, node, label = f.mate, f.node, f.label
    find_base = f.blossom.find_base
    roots = [v for v in range(len(node)) if mate[v] is None and node[v] == v]
    for r in roots:
        if f.in_cp[r] or label[r] != UNUSED:
            continue
        f.make_even(r)
        if f.children is not None:
            f.children[r] = []
        stack: list[tuple[int, Iterator[tuple[int, int, int]]]] = [
            (r, f.h_neighbors(r))]
        while stack:
            x, it = stack[-1]
            step = next(it, None)
            if step is None:
                stack.pop()
                continue
            xe, ye, y = step
            if label[y] == UNUSED:
                if mate[y] is None:
                    edges = f.canonical_path(x, r) + [(xe, ye)]
                    label[y] = S_EVEN
                    _record_path(f, cp, r, edges)
                    stack.clear()
                else:
                    y2 = f.grow(x, xe, ye, y)
                    stack.append((y2, f.h_neighbors(y2)))
                continue
            bx, by = find_base(x), find_base(y)
            if label[by] == S_EVEN and f.eventime[by] > f.eventime[bx]:
                if debug and not f.is_proper_descendant(by, bx):
                    raise AssertionError(f"eventime test disagrees with tree "
                                         f"order for bases {bx}, {by}")
                us = f.blossom_step(x, xe, ye, bx, by)
                for u in reversed(us):
                    stack.append((u, f.h_neighbors(u)))
            elif debug and label[by] == S_EVEN and by != bx \
                    and f.is_proper_descendant(by, bx):
                raise AssertionError("descendant blossom missed by eventime test")
    if debug:
        check_scanned_blossoms(f)
    return cp


def _record_path(f: DfsForest, cp: PathCollection, root: int,
                 edges: list[tuple[int, int]]) -> None:
    node = f.node
    nodes = [root] + [node[q] for (_p, q) in edges]
    for h in nodes:
        if f.in_cp[h]:
            raise AssertionError(f"node {h} used by two paths")
        f.in_cp[h] = True
        cp.used.add(h)
    cp.contracted.append(edges)
    cp.nodes.append(nodes)


def check_scanned_blossoms(f: DfsForest) -> None:
    """Even nodes outside the collected paths are completely scanned, and
    two completely scanned even nodes joined by a contracted edge must
    share a blossom."""
    g = f.view.g
    node, label = f.node, f.label
    for (u, v) in g.edges:
        a, b = node[u], node[v]
        if a == b or label[a] != S_EVEN or label[b] != S_EVEN:
            continue
        if f.in_cp[a] or f.in_cp[b]:
            continue
        if f.view.classify_edge(u, v) is None:
            continue
        if f.blossom.find_base(a) != f.blossom.find_base(b):
            raise AssertionError(f"scanned even nodes {a}, {b} in different "
                                 f"blossoms")


# ---------------------------------------------------------------------------

def lift_path(state: SearchState, view: ContractedView,
              edges: list[tuple[int, int]]) -> list[int]:
    """Expand a contracted augmenting path into a vertex path of the
    original graph by filling in the even-length piece inside every
    contracted blossom it visits."""
    node = view.node
    first = node[edges[0][0]]
    out = list(reversed(state.path_to(edges[0][0], first)))
    for i, (p, q) in enumerate(edges):
        if out[-1] != p:
            raise AssertionError(f"lift broke before edge ({p}, {q})")
        h = node[q]
        if i + 1 < len(edges):
            nxt = edges[i + 1][0]
            if q == nxt:
                piece = [q]
            elif nxt == h:
                piece = state.path_to(q, h)
            elif q == h:
                piece = list(reversed(state.path_to(nxt, h)))
            else:
                raise AssertionError(f"path enters and leaves node {h} away "
                                     f"from its base")
        else:
            piece = state.path_to(q, h)
        out.extend(piece)
    return out


def augment(m: Matching, paths: list[list[int]]) -> None:
    """Flip each augmenting path: mate the endpoints of every second edge,
    starting with the first."""
    mate = m.mate
    for p in paths:
        if len(p) % 2:
            raise AssertionError("augmenting path with an even edge count")
        for i in range(0, len(p), 2):
            a, b = p[i], p[i + 1]
            mate[a] = b
            mate[b] = a


def run_phase3(state: SearchState, view: ContractedView, m: Matching,
               tracer: Tracer = None, debug: bool = False) -> PathCollection:
    """Find, lift and augment a maximal set of disjoint shortest
    augmenting paths."""
    cp = find_ap_set(view, tracer=tracer, debug=debug)
    for edges in cp.contracted:
        path = lift_path(state, view, edges)
        if tracer is not None:
            tracer("dfs path " + " ".join(str(v + 1) for v in path))
        cp.lifted.append(path)
    if debug:
        _check_lifted(state, cp, 2 * view.delta - 1)
    augment(m, cp.lifted)
    return cp


def _check_lifted(state: SearchState, cp: PathCollection, length: int) -> None:
    seen: set[int] = set()
    mate = state.mate
    for p in cp.lifted:
        if len(p) - 1 != length:
            raise AssertionError(f"lifted path has {len(p) - 1} edges, "
                                 f"expected {length}")
        if mate[p[0]] is not None or mate[p[-1]] is not None:
            raise AssertionError("lifted path endpoint is matched")
        for i in range(1, len(p) - 1, 2):
            if mate[p[i]] != p[i + 1]:
                raise AssertionError("lifted path does not alternate")
        for v in p:
            if v in seen:
                raise AssertionError(f"vertex {v} on two lifted paths or "
                                     f"twice on one")
            seen.add(v)
