"""Finite posets from rewrite relations, lattice checks, Tamari lattices and
tree gluing.

Posets store elements as strings (canonical codes) and are backed by
reachability bitsets: bit ``j`` of ``down[i]`` is set when
``elements[j] <= elements[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .catalan_stats import enumerate_trees, mirror, size, tree_code
from .prograph import (
    COP, LEFT, PROD, RIGHT, Edge, EdgeType, Operator, Prograph, PrographError,
    avoids_type_vii, canonical_code, classify_edge, coproducts_first_prograph,
    enumerate_prographs,
)
from .rewriting import ALL_RULES, successors


class PosetError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass
class Poset:
    """Finite poset given by its elements and cover pairs (upper, lower)."""

    elements: list[str]
    covers: set[tuple[str, str]]
    down: list[int] = field(default=None, repr=False)
    up: list[int] = field(default=None, repr=False)

    def __post_init__(self):
        self.elements = list(self.elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError("duplicate elements")
        if self.down is None:
            self.down = _closure(self.elements, self.index, self.covers)
        m = len(self.elements)
        if self.up is None:
            up = [1 << i for i in range(m)]
            for i in range(m):
                for j in _bits(self.down[i]):
                    up[j] |= 1 << i
            self.up = up

    @classmethod
    def from_relation(cls, elements, pairs) -> "Poset":
        """Poset generated by ``x > y`` for each (x, y); covers are reduced."""
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        down = _closure(elements, index, pairs)
        covers = set()
        for i, x in enumerate(elements):
            strict = down[i] & ~(1 << i)
            below_others = 0
            for j in _bits(strict):
                below_others |= down[j] & ~(1 << j)
            for j in _bits(strict & ~below_others):
                covers.add((x, elements[j]))
        return cls(elements, covers, down=down)

    def __len__(self):
        return len(self.elements)

    def leq(self, x: str, y: str) -> bool:
        return bool(self.down[self.index[y]] >> self.index[x] & 1)

    def upper_bounds(self, x: str, y: str) -> list[str]:
        mask = self.up[self.index[x]] & self.up[self.index[y]]
        return [self.elements[j] for j in _bits(mask)]

    def lower_bounds(self, x: str, y: str) -> list[str]:
        mask = self.down[self.index[x]] & self.down[self.index[y]]
        return [self.elements[j] for j in _bits(mask)]

    def minimal(self, subset) -> list[str]:
        idx = [self.index[s] for s in subset]
        mask = 0
        for i in idx:
            mask |= 1 << i
        return [self.elements[i] for i in idx if self.down[i] & mask == 1 << i]

    def maximal(self, subset) -> list[str]:
        idx = [self.index[s] for s in subset]
        mask = 0
        for i in idx:
            mask |= 1 << i
        return [self.elements[i] for i in idx if self.up[i] & mask == 1 << i]

    def maxima(self) -> list[str]:
        return self.maximal(self.elements)

    def minima(self) -> list[str]:
        return self.minimal(self.elements)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": sorted([a, b] for a, b in self.covers)}

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        for key in ("elements", "covers"):
            if key not in data:
                raise PosetError(f"missing field {key!r}")
        return cls.from_relation(data["elements"], [tuple(c) for c in data["covers"]])


def _closure(elements, index, pairs) -> list[int]:
    """Reachability bitsets; raises on cycles."""
    m = len(elements)
    succ = [[] for _ in range(m)]
    indeg = [0] * m
    for x, y in pairs:
        if x == y:
            raise PosetError(f"self-loop on {x}")
        i, j = index[x], index[y]
        succ[i].append(j)
        indeg[j] += 1
    # topological order, sinks first
    order = []
    stack = [i for i in range(m) if indeg[i] == 0]
    deg = list(indeg)
    while stack:
        i = stack.pop()
        order.append(i)
        for j in succ[i]:
            deg[j] -= 1
            if deg[j] == 0:
                stack.append(j)
    if len(order) != m:
        raise PosetError("relation has a cycle; it does not define a poset")
    down = [1 << i for i in range(m)]
    for i in reversed(order):
        for j in succ[i]:
            down[i] |= down[j]
    return down


RESTRICTIONS = {
    "none": lambda p: True,
    "no-type-vii": avoids_type_vii,
    "coproducts-first": coproducts_first_prograph,
}


def build_rotation_poset(n: int, rules=ALL_RULES, restriction: str = "none", mirror: bool = False,
                         prographs=None) -> Poset:
    """Poset on size-n prographs: x > y when the rules rewrite x into y.

    Rewrites leaving the restricted family are ignored.
    """
    if restriction not in RESTRICTIONS:
        raise PosetError(f"unknown restriction {restriction!r}")
    keep = RESTRICTIONS[restriction]
    if prographs is None:
        prographs = enumerate_prographs(n)
    members = {canonical_code(p): p for p in prographs if keep(p)}
    elements = sorted(members)
    pairs = []
    for x in elements:
        for q in successors(members[x], rules, mirror):
            y = canonical_code(q)
            if y in members:
                pairs.append((x, y))
    return Poset.from_relation(elements, pairs)


@dataclass
class LatticeReport:
    is_lattice: bool
    pair: tuple[str, str] | None = None
    kind: str | None = None
    bounds: list[str] | None = None
    extremal: list[str] | None = None

    def __bool__(self):
        return self.is_lattice


def is_lattice(P: Poset) -> LatticeReport:
    """Check meets and joins pair by pair, in element order.

    On failure the report carries the first offending pair, whether the join
    or the meet is missing, the common bounds and their minimal (resp.
    maximal) members.
    """
    m = len(P)
    for i in range(m):
        for j in range(i + 1, m):
            x, y = P.elements[i], P.elements[j]
            for kind, bounds, pick in (
                ("join", P.upper_bounds(x, y), P.minimal),
                ("meet", P.lower_bounds(x, y), P.maximal),
            ):
                ext = pick(bounds)
                if len(ext) != 1:
                    return LatticeReport(False, (x, y), kind, bounds, ext)
    return LatticeReport(True)


def join_failures(P: Poset):
    """Every incomparable pair lacking a join, with its minimal upper bounds."""
    out = []
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            x, y = P.elements[i], P.elements[j]
            ext = P.minimal(P.upper_bounds(x, y))
            if len(ext) != 1:
                out.append(((x, y), ext))
    return out


# ---------------------------------------------------------------------------
# Tamari

def tamari_successors(t) -> list:
    """Trees obtained by one rotation (A, (B, C)) -> ((A, B), C) anywhere."""
    if t is None:
        return []
    left, right = t
    out = []
    if right is not None:
        out.append(((left, right[0]), right[1]))
    out.extend((l2, right) for l2 in tamari_successors(left))
    out.extend((left, r2) for r2 in tamari_successors(right))
    return out


def tamari(n: int) -> Poset:
    """Tamari lattice on n-node trees; the right comb is the top."""
    trees = enumerate_trees(n)
    pairs = [(tree_code(t), tree_code(s)) for t in trees for s in tamari_successors(t)]
    return Poset.from_relation(sorted(tree_code(t) for t in trees), pairs)


def chain(k: int) -> Poset:
    els = [str(i) for i in range(k)]
    return Poset.from_relation(els, [(els[i + 1], els[i]) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return Poset.from_relation([str(i) for i in range(k)], [])


def product_poset(a: Poset, b: Poset) -> Poset:
    els = [f"{x}*{y}" for x in a.elements for y in b.elements]
    pairs = []
    for x in a.elements:
        for (u, v) in b.covers:
            pairs.append((f"{x}*{u}", f"{x}*{v}"))
    for (u, v) in a.covers:
        for y in b.elements:
            pairs.append((f"{u}*{y}", f"{v}*{y}"))
    return Poset.from_relation(els, pairs)


def _signature(P: Poset, i: int):
    up = P.up[i]
    down = P.down[i]
    ucov = sum(1 for (a, b) in P.covers if b == P.elements[i])
    dcov = sum(1 for (a, b) in P.covers if a == P.elements[i])
    return (bin(up).count("1"), bin(down).count("1"), ucov, dcov)


def poset_isomorphic(a: Poset, b: Poset) -> bool:
    """Backtracking search for an order isomorphism.

    Candidates are restricted to elements with the same numbers of elements
    above/below and of upper/lower covers; assignments are extended along a
    linear extension and checked against every already-placed element.
    """
    if len(a) != len(b) or len(a.covers) != len(b.covers):
        return False
    m = len(a)
    sa = [_signature(a, i) for i in range(m)]
    sb = [_signature(b, i) for i in range(m)]
    if sorted(sa) != sorted(sb):
        return False
    order = sorted(range(m), key=lambda i: (bin(a.down[i]).count("1"), sa[i]))
    by_sig: dict = {}
    for j in range(m):
        by_sig.setdefault(sb[j], []).append(j)
    image = [-1] * m
    used = [False] * m

    def fits(i, j):
        for k in order:
            if image[k] < 0:
                continue
            jk = image[k]
            if (a.down[i] >> k & 1) != (b.down[j] >> jk & 1):
                return False
            if (a.down[k] >> i & 1) != (b.down[jk] >> j & 1):
                return False
        return True

    def rec(pos):
        if pos == m:
            return True
        i = order[pos]
        for j in by_sig[sa[i]]:
            if not used[j] and fits(i, j):
                image[i] = j
                used[j] = True
                if rec(pos + 1):
                    return True
                image[i] = -1
                used[j] = False
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# gluing a product tree and a coproduct tree

def glue_trees(product_tree, coproduct_tree) -> Prograph:
    """Glue the canopies of two same-size binary trees.

    The coproduct tree grows upward from the global input, the product tree
    hangs down from the global output, and the k-th coproduct leaf feeds the
    k-th product leaf, both counted left to right.
    """
    n = size(product_tree)
    if n != size(coproduct_tree):
        raise PrographError("trees must have the same size")
    if n == 0:
        return Prograph(0, (), ())
    ops: list[Operator] = []
    edges: list[Edge] = []
    cop_leaves: list[tuple[int, int]] = []
    prod_leaves: list[tuple[int, int]] = []

    def grow(t):
        v = len(ops)
        ops.append(Operator(v, COP))
        for port, child in ((LEFT, t[0]), (RIGHT, t[1])):
            if child is None:
                cop_leaves.append((v, port))
            else:
                w = grow(child)
                edges.append(Edge(v, port, w, 0))
        return v

    def hang(t):
        v = len(ops)
        ops.append(Operator(v, PROD))
        for port, child in ((LEFT, t[0]), (RIGHT, t[1])):
            if child is None:
                prod_leaves.append((v, port))
            else:
                w = hang(child)
                edges.append(Edge(w, 0, v, port))
        return v

    grow(coproduct_tree)
    hang(product_tree)
    for (c, cp), (q, qp) in zip(cop_leaves, prod_leaves):
        edges.append(Edge(c, cp, q, qp))
    return Prograph(n, tuple(ops), tuple(edges))


def unglue(p: Prograph):
    """Inverse of :func:`glue_trees` on prographs avoiding type VII.

    Returns ``(product_tree, coproduct_tree)``.
    """
    if not avoids_type_vii(p):
        raise PrographError("prograph has a type VII edge")
    if p.n == 0:
        return None, None
    outs = p.out_edges()
    ins = p.in_edges()

    def up(v):
        kids = []
        for port in (LEFT, RIGHT):
            e = outs[(v, port)]
            kids.append(up(e.dst) if p.kind(e.dst) == COP else None)
        return tuple(kids)

    def down(v):
        kids = []
        for port in (LEFT, RIGHT):
            e = ins[(v, port)]
            kids.append(down(e.src) if p.kind(e.src) == PROD else None)
        return tuple(kids)

    return down(p.global_output), up(p.global_input)


def glue_tamari_poset(n: int) -> Poset:
    """tamari(n) squared, read through the gluing.

    Elements are prograph codes; the coproduct tree is ordered by
    :func:`tamari`, the product tree by the mirrored Tamari order (rule B
    moves product subtrees to the right).
    """
    trees = enumerate_trees(n)
    code = {}
    for pt in trees:
        for ct in trees:
            code[(tree_code(pt), tree_code(ct))] = canonical_code(glue_trees(pt, ct))
    pairs = []
    for pt in trees:
        for ct in trees:
            x = code[(tree_code(pt), tree_code(ct))]
            for ct2 in tamari_successors(ct):
                pairs.append((x, code[(tree_code(pt), tree_code(ct2))]))
            for m2 in tamari_successors(mirror(pt)):
                pairs.append((x, code[(tree_code(mirror(m2)), tree_code(ct))]))
    return Poset.from_relation(sorted(code.values()), pairs)
