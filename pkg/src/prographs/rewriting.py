"""The four oriented rotations on prographs.

Each rule rewrites one internal edge together with its two endpoints; the
four boundary wires around the pair keep their attachments and their
cyclic order.

    A: IV -> I     coassociativity, c1.R -> c2 becomes c2.L -> c1
    B: VIII -> IX  associativity, p1 -> p2.L becomes p1 -> p2.R
    C: III -> VII  p(l, c_L(x)), c_R(x)  becomes  Delta(p(l, x))
    D: VII -> V    Delta(a x b)  becomes  c_L(a), c_R(a) x b

With ``mirror=True`` every rule runs backwards (I -> IV, IX -> VIII,
VII -> III, V -> VII), which is the opposite global orientation.
"""
from __future__ import annotations

from enum import Enum

from .prograph import (
    COP, LEFT, PROD, RIGHT, Edge, EdgeType, Operator, Prograph, PrographError,
    canonical_code, classify_edge,
)


class RotationRule(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self):
        return self.value


SOURCE_TYPE = {
    RotationRule.A: EdgeType.IV,
    RotationRule.B: EdgeType.VIII,
    RotationRule.C: EdgeType.III,
    RotationRule.D: EdgeType.VII,
}
TARGET_TYPE = {
    RotationRule.A: EdgeType.I,
    RotationRule.B: EdgeType.IX,
    RotationRule.C: EdgeType.VII,
    RotationRule.D: EdgeType.V,
}
ALL_RULES = tuple(RotationRule)


class RewriteError(ValueError):
    pass


def parse_rules(text: str | None) -> tuple[RotationRule, ...]:
    if not text:
        return ALL_RULES
    try:
        return tuple(sorted({RotationRule(s.strip().upper()) for s in text.split(",") if s.strip()},
                            key=lambda r: r.value))
    except ValueError:
        raise RewriteError(f"unknown rule in {text!r}; expected letters among A,B,C,D") from None


def rule_for(t: EdgeType, mirror: bool = False) -> RotationRule | None:
    table = TARGET_TYPE if mirror else SOURCE_TYPE
    for r, ty in table.items():
        if ty is t:
            return r
    return None


def applicable_rules(p: Prograph, rules=ALL_RULES, mirror: bool = False) -> list[tuple[int, RotationRule]]:
    """(edge index, rule) pairs in edge order."""
    out = []
    for k, e in enumerate(p.edges):
        r = rule_for(classify_edge(p, e), mirror)
        if r is not None and r in rules:
            out.append((k, r))
    return out


def _wires(p: Prograph, skip: Edge):
    ins = {}
    outs = {}
    for e in p.edges:
        if e == skip:
            continue
        ins[(e.dst, e.in_port)] = e
        outs[(e.src, e.out_port)] = e
    return ins, outs


def _rebuild(p: Prograph, skip: Edge, kinds: dict[int, str], old_in, old_out, new_in, new_out, inner: Edge):
    """Reattach boundary wires.

    ``old_in``/``new_in`` map boundary input slots (op, port) before/after,
    likewise for outputs; a boundary slot may be dangling (global port).
    """
    ins, outs = _wires(p, skip)
    moved = {}
    for label, slot in old_in.items():
        if slot in ins:
            moved[ins[slot]] = ("in", new_in[label])
    for label, slot in old_out.items():
        if slot in outs:
            e = outs[slot]
            if e in moved:
                # wire running between the two boundary sides cannot occur in a rewrite pattern
                raise RewriteError("boundary wire joins the pattern to itself")
            moved[e] = ("out", new_out[label])
    edges = []
    for e in p.edges:
        if e == skip:
            continue
        if e in moved:
            side, (v, port) = moved[e]
            e = Edge(e.src, e.out_port, v, port) if side == "in" else Edge(v, port, e.dst, e.in_port)
        edges.append(e)
    edges.append(inner)
    ops = tuple(Operator(op.id, kinds.get(op.id, op.kind)) for op in p.operators)
    return Prograph(p.n, ops, tuple(edges))


def apply_rotation(p: Prograph, edge: int | Edge, rule: RotationRule | str, mirror: bool = False) -> Prograph:
    rule = RotationRule(str(rule).upper()) if not isinstance(rule, RotationRule) else rule
    if isinstance(edge, int):
        if not 0 <= edge < len(p.edges):
            raise RewriteError(f"no edge with index {edge}")
        e = p.edges[edge]
    else:
        e = edge
    t = classify_edge(p, e)
    expected = TARGET_TYPE[rule] if mirror else SOURCE_TYPE[rule]
    if t is not expected:
        raise RewriteError(f"rule {rule} needs an edge of type {expected}, got {t}")
    a, b = e.src, e.dst
    fn = _MIRROR[rule] if mirror else _FORWARD[rule]
    return fn(p, e, a, b)


# Each pattern names its four boundary wires and says where they attach
# before and after.  a is the lower operator, b the upper one; ids persist.

def _rule_a(p, e, a, b):
    # a.R -> b ; boundary: x->a, a.L=o1, b.L=o2, b.R=o3
    old_in = {"x": (a, 0)}
    old_out = {"o1": (a, LEFT), "o2": (b, LEFT), "o3": (b, RIGHT)}
    new_in = {"x": (a, 0)}
    new_out = {"o1": (b, LEFT), "o2": (b, RIGHT), "o3": (a, RIGHT)}
    return _rebuild(p, e, {}, old_in, old_out, new_in, new_out, Edge(a, LEFT, b, 0))


def _rule_a_inv(p, e, a, b):
    old_in = {"x": (a, 0)}
    old_out = {"o1": (b, LEFT), "o2": (b, RIGHT), "o3": (a, RIGHT)}
    new_in = {"x": (a, 0)}
    new_out = {"o1": (a, LEFT), "o2": (b, LEFT), "o3": (b, RIGHT)}
    return _rebuild(p, e, {}, old_in, old_out, new_in, new_out, Edge(a, RIGHT, b, 0))


def _rule_b(p, e, a, b):
    # a -> b.L ; boundary: i1->a.L, i2->a.R, i3->b.R, b.out=y
    old_in = {"i1": (a, LEFT), "i2": (a, RIGHT), "i3": (b, RIGHT)}
    old_out = {"y": (b, 0)}
    new_in = {"i1": (b, LEFT), "i2": (a, LEFT), "i3": (a, RIGHT)}
    new_out = {"y": (b, 0)}
    return _rebuild(p, e, {}, old_in, old_out, new_in, new_out, Edge(a, 0, b, RIGHT))


def _rule_b_inv(p, e, a, b):
    old_in = {"i1": (b, LEFT), "i2": (a, LEFT), "i3": (a, RIGHT)}
    old_out = {"y": (b, 0)}
    new_in = {"i1": (a, LEFT), "i2": (a, RIGHT), "i3": (b, RIGHT)}
    new_out = {"y": (b, 0)}
    return _rebuild(p, e, {}, old_in, old_out, new_in, new_out, Edge(a, 0, b, LEFT))


def _rule_c(p, e, c, q):
    # c.L -> q.R ; boundary: l->q.L, x->c, q.out=y, c.R=r
    # after: q' = product(l, x) is the lower operator, c' = coproduct above it
    old_in = {"l": (q, LEFT), "x": (c, 0)}
    old_out = {"y": (q, 0), "r": (c, RIGHT)}
    new_in = {"l": (c, LEFT), "x": (c, RIGHT)}
    new_out = {"y": (q, LEFT), "r": (q, RIGHT)}
    # ids keep their position: c becomes the product, q the coproduct
    return _rebuild(p, e, {c: PROD, q: COP}, old_in, old_out, new_in, new_out, Edge(c, 0, q, 0))


def _rule_c_inv(p, e, a, b):
    # a.out -> b ; a = product(l, x), b.L=y, b.R=r
    old_in = {"l": (a, LEFT), "x": (a, RIGHT)}
    old_out = {"y": (b, LEFT), "r": (b, RIGHT)}
    new_in = {"l": (b, LEFT), "x": (a, 0)}
    new_out = {"y": (b, 0), "r": (a, RIGHT)}
    return _rebuild(p, e, {a: COP, b: PROD}, old_in, old_out, new_in, new_out, Edge(a, LEFT, b, RIGHT))


def _rule_d(p, e, q, c):
    # q.out -> c ; boundary: a->q.L, b->q.R, c.L=o1, c.R=o2
    # after: coproduct on a (lower), product(c_R(a), b) above it
    old_in = {"a": (q, LEFT), "b": (q, RIGHT)}
    old_out = {"o1": (c, LEFT), "o2": (c, RIGHT)}
    new_in = {"a": (q, 0), "b": (c, RIGHT)}
    new_out = {"o1": (q, LEFT), "o2": (c, 0)}
    return _rebuild(p, e, {q: COP, c: PROD}, old_in, old_out, new_in, new_out, Edge(q, RIGHT, c, LEFT))


def _rule_d_inv(p, e, a, b):
    # a.R -> b.L ; a.in=x, a.L=o1, b.R=y, b.out=o2
    old_in = {"a": (a, 0), "b": (b, RIGHT)}
    old_out = {"o1": (a, LEFT), "o2": (b, 0)}
    new_in = {"a": (a, LEFT), "b": (a, RIGHT)}
    new_out = {"o1": (b, LEFT), "o2": (b, RIGHT)}
    return _rebuild(p, e, {a: PROD, b: COP}, old_in, old_out, new_in, new_out, Edge(a, 0, b, 0))


_FORWARD = {RotationRule.A: _rule_a, RotationRule.B: _rule_b, RotationRule.C: _rule_c, RotationRule.D: _rule_d}
_MIRROR = {RotationRule.A: _rule_a_inv, RotationRule.B: _rule_b_inv, RotationRule.C: _rule_c_inv,
           RotationRule.D: _rule_d_inv}


def rewritten_edge(p: Prograph, edge: int, rule: RotationRule, mirror: bool = False) -> Edge:
    """The inner edge of the pattern after rewriting (always appended last)."""
    return apply_rotation(p, edge, rule, mirror).edges[-1]


def successors(p: Prograph, rules=ALL_RULES, mirror: bool = False) -> list[Prograph]:
    """One-step rewrites, deduplicated and sorted by canonical code."""
    seen = {}
    for k, r in applicable_rules(p, rules, mirror):
        q = apply_rotation(p, k, r, mirror)
        seen.setdefault(canonical_code(q), q)
    return [seen[c] for c in sorted(seen)]


def reduce_to_normal_forms(p: Prograph, limit: int = 100_000, rules=ALL_RULES,
                           mirror: bool = False) -> list[Prograph]:
    """Every rewrite-reachable prograph with no applicable rule.

    ``limit`` bounds the number of prographs expanded; exceeding it raises
    :class:`BudgetExhausted` carrying the normal forms found so far.
    """
    start = canonical_code(p)
    seen = {start}
    stack = [p]
    normal = {}
    expanded = 0
    while stack:
        if expanded >= limit:
            raise BudgetExhausted([normal[c] for c in sorted(normal)])
        q = stack.pop()
        expanded += 1
        nxt = successors(q, rules, mirror)
        if not nxt:
            normal[canonical_code(q)] = q
        for r in nxt:
            c = canonical_code(r)
            if c not in seen:
                seen.add(c)
                stack.append(r)
    return [normal[c] for c in sorted(normal)]


class BudgetExhausted(RewriteError):
    def __init__(self, partial):
        super().__init__(f"step budget exhausted with {len(partial)} normal forms found")
        self.partial = partial
