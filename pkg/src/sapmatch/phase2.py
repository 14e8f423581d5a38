"""
Part II: undo the breakthrough phase and expose the contracted graph.

The contracted graph has one node per blossom that existed before the
breakthrough phase (a block of ``dbase``), named by its base vertex. It is
never built: ``ContractedView.classify_edge`` decides per original edge
whether it survives contraction.
"""

from __future__ import annotations

from typing import Optional

from .phase1 import EVEN, ODD, UNLABELED, SearchState

EVEN_EVEN = "even-even"
EVEN_ODD = "even-odd"
MATCHED_UNLABELED = "matched-unlabeled"
GROW_FRONTIER = "grow-frontier"


def revert_breakthrough_phase(state: SearchState) -> None:
    """Restore every per-vertex value written during the breakthrough
    phase. ``dbase`` is untouched by that phase and needs no undo."""
    state.revert_phase()


class ContractedView:
    """Read-only view of the contracted graph over a reverted state."""

    def __init__(self, state: SearchState, delta_break: int) -> None:
        self.state = state
        self.g = state.g
        self.mate = state.mate
        self.delta = delta_break
        #: node[v] is the contracted node (a base vertex) holding v.
        self.node = state.dbase_uf.all_bases()

    def members(self) -> dict[int, list[int]]:
        """Vertices of every contracted node with more than one vertex,
        ascending; other nodes consist of their base alone."""
        out: dict[int, list[int]] = {}
        for v, b in enumerate(self.node):
            if b != v:
                out.setdefault(b, [b]).append(v)
        return {b: sorted(vs) for b, vs in out.items()}

    def nodes(self) -> list[int]:
        return [v for v, b in enumerate(self.node) if b == v]

    def is_free(self, h: int) -> bool:
        return self.mate[h] is None

    def classify_edge(self, u: int, v: int) -> Optional[str]:
        """Kind of contracted edge induced by original edge ``uv``, or None
        when the edge is discarded."""
        node = self.node
        if node[u] == node[v]:
            return None
        st = self.state
        label = st.label
        lu, lv = label[u], label[v]
        if lu == ODD and lv == ODD:
            return None
        d = self.delta
        matched = self.mate[u] == v
        if lu == EVEN and lv == EVEN:
            if st.lcp[u] + st.lcp[v] == 2 * d - 2:
                return EVEN_EVEN
            return None
        if lu == ODD:
            u, v, lu, lv = v, u, lv, lu
        if lu == EVEN and lv == ODD:
            if matched:
                ok = st.lcp[u] == st.lcp_odd[v] + 1
            else:
                ok = st.lcp_odd[v] == st.lcp[u] + 1
            return EVEN_ODD if ok else None
        if lu == UNLABELED and lv == UNLABELED:
            return MATCHED_UNLABELED if matched else None
        if lv == EVEN:
            u, v, lu, lv = v, u, lv, lu
        if lu == EVEN and lv == UNLABELED:
            return GROW_FRONTIER if st.lcp[u] == d - 2 else None
        return None

    def h_edges(self) -> list[tuple[int, int, str, int, int]]:
        """All surviving edges as ``(u_H, v_H, kind, u, v)`` in edge order."""
        out = []
        node = self.node
        for (u, v) in self.g.edges:
            k = self.classify_edge(u, v)
            if k is not None:
                out.append((node[u], node[v], k, u, v))
        return out
