"""
Reconstruction of canonical alternating paths from per-node back-links.

Both search structures (the breadth-first one over vertices and the
depth-first one over contracted nodes) describe the canonical path of an
even node the same way:

* a root has the trivial path;
* a node made even by a growth step through odd node ``y`` reached along
  the non-matching edge ``(w, yg)``: its path is ``P(w) y v``;
* a node ``v`` made even by a blossom-closing edge ``(far, near)``, with
  ``v`` on the ``near`` side: its path is ``P(far)``, the edge, the
  reversed piece of ``P(near)`` from ``mate(v)``, then ``v``.

``walk_down`` turns those links into an explicit edge list without
recursion, since canonical paths can be as long as the graph.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

# Link kinds returned by the ``link`` callback.
GROW = 1
BRIDGE = 2

# ``link(v)`` returns None for a root, ``(GROW, y, y_end, w_end)`` where
# ``(y_end, w_end)`` is the growth edge oriented from y's side toward the
# parent, or ``(BRIDGE, near, far)`` with near on v's side.
Link = Callable[[int], Optional[tuple]]


def walk_down(v: int, b: int, link: Link, node: Sequence[int],
              mate: Sequence[Optional[int]], reverse: bool = False
              ) -> list[tuple[int, int]]:
    """Oriented edges of the canonical path of ``v`` from ``v`` back to ``b``.

    ``b`` must lie on the canonical path of ``v``. ``node`` maps an edge
    endpoint to the search node containing it (identity when nodes are
    vertices). With ``reverse=True`` the edges run from ``b`` to ``v``.
    """
    out: list[tuple[int, int]] = []
    # Items are ("e", p, q) for an edge or ("w", v, b, rev) for a sub-walk.
    stack: list[tuple] = [("w", v, b, reverse)]
    while stack:
        item = stack.pop()
        if item[0] == "e":
            out.append((item[1], item[2]))
            continue
        _, v, b, rev = item
        if v == b:
            continue
        lk = link(v)
        if lk is None:
            raise AssertionError(f"{b} is not on the canonical path of {v}")
        if lk[0] == GROW:
            _, y, y_end, w_end = lk
            pieces = [("e", v, y), ("e", y_end, w_end),
                      ("w", node[w_end], b, False)]
        else:
            _, near, far = lk
            mv = mate[v]
            pieces = [("e", v, mv), ("w", node[near], mv, True),
                      ("e", near, far), ("w", node[far], b, False)]
        if rev:
            pieces = [_flip(p) for p in reversed(pieces)]
        stack.extend(reversed(pieces))
    return out


def _flip(piece: tuple) -> tuple:
    if piece[0] == "e":
        return ("e", piece[2], piece[1])
    return ("w", piece[1], piece[2], not piece[3])


def edges_to_vertices(start: int, edges: list[tuple[int, int]]) -> list[int]:
    """Vertex sequence of a walk given as consecutive oriented edges."""
    out = [start]
    for (p, q) in edges:
        if p != out[-1]:
            raise AssertionError(f"broken walk at edge ({p}, {q})")
        out.append(q)
    return out
