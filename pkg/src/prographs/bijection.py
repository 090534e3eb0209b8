"""Tableaux <-> prographs.

Entries 1..3n are read in increasing order as construction events over an
ordered frontier of open wires, starting from the single global input:

* bottom row: a coproduct splits the leftmost unmarked wire;
* middle row: the leftmost unmarked wire is marked as a product's left input;
* top row: the leftmost marked wire whose right neighbour is unmarked is
  closed with that neighbour into a product.

The inverse replays the same rules against a given prograph, choosing at
each step the event kind consistent with its wiring.
"""
from __future__ import annotations

from .prograph import COP, GLOBAL_IN, LEFT, PROD, RIGHT, Edge, Operator, Prograph, PrographError
from .tableaux import StandardTableau, TableauError, validate_tableau

BOTTOM, MIDDLE, TOP = 0, 1, 2


class BijectionError(ValueError):
    pass


def _select(frontier, marked, kind):
    """Frontier index chosen for an event of row ``kind`` (None if stuck)."""
    if kind in (BOTTOM, MIDDLE):
        for i, w in enumerate(frontier):
            if w not in marked:
                return i
        return None
    for i in range(len(frontier) - 1):
        if frontier[i] in marked and frontier[i + 1] not in marked:
            return i
    return None


def tableau_to_prograph(t: StandardTableau) -> Prograph:
    if not validate_tableau(t):
        raise TableauError("not a standard tableau")
    frontier = [GLOBAL_IN]
    marked: set = set()
    ops: list[Operator] = []
    edges: list[Edge] = []
    next_id = 0
    for value, kind in enumerate(t.row_word(), start=1):
        i = _select(frontier, marked, kind)
        if i is None:
            raise BijectionError(f"no admissible wire for entry {value}")
        w = frontier[i]
        if kind == BOTTOM:
            v = next_id
            next_id += 1
            ops.append(Operator(v, COP))
            if w != GLOBAL_IN:
                edges.append(Edge(w[0], w[1], v, 0))
            frontier[i:i + 1] = [(v, LEFT), (v, RIGHT)]
        elif kind == MIDDLE:
            marked.add(w)
        else:
            v = next_id
            next_id += 1
            ops.append(Operator(v, PROD))
            right = frontier[i + 1]
            edges.append(Edge(w[0], w[1], v, LEFT))
            edges.append(Edge(right[0], right[1], v, RIGHT))
            marked.discard(w)
            frontier[i:i + 2] = [(v, 0)]
    return Prograph(t.n, tuple(ops), tuple(edges))


def prograph_to_tableau(p: Prograph) -> StandardTableau:
    """Recover the event word of ``p`` by replaying the selection rules."""
    if p.n == 0:
        return StandardTableau(0, ((), (), ()))
    gin, gout = p.global_input, p.global_output
    if gin is None or gout is None:
        raise PrographError("prograph has no unique global input/output")
    cons = {(e.src, e.out_port): (e.dst, e.in_port) for e in p.edges}
    cons[GLOBAL_IN] = (gin, 0)
    n = p.n
    word: list[int] = []

    def consistent(frontier, marked, kind):
        i = _select(frontier, marked, kind)
        if i is None:
            return None
        target = cons.get(frontier[i])
        if target is None:
            return None
        v, port = target
        if kind == BOTTOM:
            return i if p.kind(v) == COP else None
        if kind == MIDDLE:
            return i if p.kind(v) == PROD and port == LEFT else None
        return i if cons.get(frontier[i + 1]) == (v, RIGHT) else None

    def search(frontier, marked, counts):
        if len(word) == 3 * n:
            return True
        for kind in (BOTTOM, MIDDLE, TOP):
            if counts[kind] >= n or (kind and counts[kind] >= counts[kind - 1]):
                continue
            i = consistent(frontier, marked, kind)
            if i is None:
                continue
            w = frontier[i]
            if kind == BOTTOM:
                v = cons[w][0]
                nf = frontier[:i] + [(v, LEFT), (v, RIGHT)] + frontier[i + 1:]
                nm = marked
            elif kind == MIDDLE:
                nf, nm = frontier, marked | {w}
            else:
                v = cons[w][0]
                nf = frontier[:i] + [(v, 0)] + frontier[i + 2:]
                nm = marked - {w}
            counts[kind] += 1
            word.append(kind)
            if search(nf, nm, counts):
                return True
            word.pop()
            counts[kind] -= 1
        return False

    if not search([GLOBAL_IN], frozenset(), [0, 0, 0]):
        raise BijectionError("prograph is not reachable by the tableau construction")
    return StandardTableau.from_row_word(word)
