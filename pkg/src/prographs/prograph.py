"""Product-coproduct prographs.

A prograph of size ``n`` has ``n`` coproducts (one input, two outputs) and
``n`` products (two inputs, one output) wired into a connected, acyclic,
planar diagram with a single dangling input and a single dangling output.

Port conventions: a coproduct has input port 0 and output ports
``LEFT=0``/``RIGHT=1``; a product has input ports ``LEFT``/``RIGHT`` and
output port 0.  The planar embedding is entirely given by these port
orders, so two prographs with the same abstract graph but different port
wiring are different objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

COP = "cop"
PROD = "prod"
LEFT = 0
RIGHT = 1

# wire key for the dangling global input
GLOBAL_IN = (-1, 0)


class PrographError(ValueError):
    """Raised on structurally invalid prographs."""


class BoriefError(PrographError):
    """Raised when the readiness sweep starves (cycle or broken embedding)."""


@dataclass(frozen=True, order=True)
class Edge:
    src: int
    out_port: int
    dst: int
    in_port: int

    def to_json(self) -> dict:
        return {"from": [self.src, self.out_port], "to": [self.dst, self.in_port]}


@dataclass(frozen=True)
class Operator:
    id: int
    kind: str

    def to_json(self) -> dict:
        return {"id": self.id, "kind": self.kind}


class EdgeType(Enum):
    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6
    VII = 7
    VIII = 8
    IX = 9

    def __str__(self):
        return self.name


# (source kind, out port) x (target kind, in port) -> type
_TYPE_GRID = {
    ((COP, LEFT), (COP, 0)): EdgeType.I,
    ((COP, LEFT), (PROD, LEFT)): EdgeType.II,
    ((COP, LEFT), (PROD, RIGHT)): EdgeType.III,
    ((COP, RIGHT), (COP, 0)): EdgeType.IV,
    ((COP, RIGHT), (PROD, LEFT)): EdgeType.V,
    ((COP, RIGHT), (PROD, RIGHT)): EdgeType.VI,
    ((PROD, 0), (COP, 0)): EdgeType.VII,
    ((PROD, 0), (PROD, LEFT)): EdgeType.VIII,
    ((PROD, 0), (PROD, RIGHT)): EdgeType.IX,
}


def n_outputs(kind: str) -> int:
    return 2 if kind == COP else 1


def n_inputs(kind: str) -> int:
    return 1 if kind == COP else 2


@dataclass(frozen=True)
class Prograph:
    """Immutable prograph record.

    Operator identifiers are arbitrary integers; only the wiring matters.
    Use :func:`canonical_code` to compare prographs up to relabelling.
    """

    n: int
    operators: tuple[Operator, ...]
    edges: tuple[Edge, ...]
    _kind: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "operators", tuple(self.operators))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "_kind", {op.id: op.kind for op in self.operators})

    def kind(self, op_id: int) -> str:
        return self._kind[op_id]

    @property
    def ids(self) -> list[int]:
        return [op.id for op in self.operators]

    def out_edges(self) -> dict[tuple[int, int], Edge]:
        return {(e.src, e.out_port): e for e in self.edges}

    def in_edges(self) -> dict[tuple[int, int], Edge]:
        return {(e.dst, e.in_port): e for e in self.edges}

    @property
    def global_input(self) -> int | None:
        """The coproduct whose input is unattached (None if not unique)."""
        ins = self.in_edges()
        free = [op.id for op in self.operators if op.kind == COP and (op.id, 0) not in ins]
        return free[0] if len(free) == 1 else None

    @property
    def global_output(self) -> int | None:
        outs = self.out_edges()
        free = [op.id for op in self.operators if op.kind == PROD and (op.id, 0) not in outs]
        return free[0] if len(free) == 1 else None

    def relabel(self, mapping: dict[int, int]) -> "Prograph":
        ops = tuple(Operator(mapping[op.id], op.kind) for op in self.operators)
        edges = tuple(Edge(mapping[e.src], e.out_port, mapping[e.dst], e.in_port) for e in self.edges)
        return Prograph(self.n, ops, edges)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "operators": [op.to_json() for op in self.operators],
            "edges": [e.to_json() for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Prograph":
        for key in ("n", "operators", "edges"):
            if key not in data:
                raise PrographError(f"missing field {key!r}")
        ops = []
        for i, op in enumerate(data["operators"]):
            if op.get("kind") not in (COP, PROD):
                raise PrographError(f"operators[{i}].kind must be 'cop' or 'prod'")
            ops.append(Operator(int(op["id"]), op["kind"]))
        edges = []
        for i, e in enumerate(data["edges"]):
            try:
                (s, sp), (d, dp) = e["from"], e["to"]
            except (KeyError, TypeError, ValueError):
                raise PrographError(f"edges[{i}] must have 'from' and 'to' pairs") from None
            edges.append(Edge(int(s), int(sp), int(d), int(dp)))
        return cls(int(data["n"]), tuple(ops), tuple(edges))


def unit() -> Prograph:
    """The size-1 prograph: both coproduct outputs feed the product."""
    return Prograph(
        1,
        (Operator(0, COP), Operator(1, PROD)),
        (Edge(0, LEFT, 1, LEFT), Edge(0, RIGHT, 1, RIGHT)),
    )


def empty() -> Prograph:
    """The size-0 prograph (a bare wire)."""
    return Prograph(0, (), ())


# ---------------------------------------------------------------------------
# closure on the sphere

# extra vertices of the closed map
NORTH = -2
SOUTH = -3


@dataclass(frozen=True)
class ClosedMap:
    """Prograph closed on the sphere.

    ``edges`` are (tail, head) pairs with tails/heads being operator ids,
    ``NORTH`` or ``SOUTH``.  The first ``len(p.edges)`` entries are the
    prograph edges in order; then come the output wire, the input wire and
    the two dark-side edges ``NORTH -> SOUTH`` (west one, then east one).
    ``rotation[v]`` lists the darts ``(edge, end)`` around ``v``
    counter-clockwise, ``end`` being 0 at the tail and 1 at the head.
    """

    edges: tuple[tuple[int, int], ...]
    rotation: dict
    output_wire: int
    input_wire: int
    west_edge: int
    east_edge: int


def close_on_sphere(p: Prograph) -> ClosedMap:
    gin, gout = p.global_input, p.global_output
    if p.n > 0 and (gin is None or gout is None):
        raise PrographError("prograph has no unique global input/output")
    edges = [(e.src, e.dst) for e in p.edges]
    slots: dict[tuple[int, str, int], tuple[int, int]] = {}
    for k, e in enumerate(p.edges):
        slots[(e.src, "out", e.out_port)] = (k, 0)
        slots[(e.dst, "in", e.in_port)] = (k, 1)
    k_out = len(edges)
    if p.n == 0:
        edges.append((SOUTH, NORTH))
        k_in = k_out
    else:
        edges.append((gout, NORTH))
        slots[(gout, "out", 0)] = (k_out, 0)
        edges.append((SOUTH, gin))
        slots[(gin, "in", 0)] = (len(edges) - 1, 1)
        k_in = len(edges) - 1
    k_west = len(edges)
    edges.append((NORTH, SOUTH))
    k_east = len(edges)
    edges.append((NORTH, SOUTH))

    rotation: dict[int, list[tuple[int, int]]] = {}
    for op in p.operators:
        v = op.id
        if op.kind == COP:
            keys = [(v, "in", 0), (v, "out", RIGHT), (v, "out", LEFT)]
        else:
            keys = [(v, "out", 0), (v, "in", LEFT), (v, "in", RIGHT)]
        missing = [k for k in keys if k not in slots]
        if missing:
            raise PrographError(f"operator {v} has unattached ports {missing}")
        rotation[v] = [slots[k] for k in keys]
    rotation[NORTH] = [(k_out, 1), (k_east, 0), (k_west, 0)]
    rotation[SOUTH] = [(k_in, 0), (k_west, 1), (k_east, 1)]
    return ClosedMap(tuple(edges), rotation, k_out, k_in, k_west, k_east)


def trace_faces(edges, rotation) -> dict[tuple[int, int], int]:
    """Assign every dart to the face lying on its left.

    Walking along dart ``(k, end)`` away from its vertex, the next dart of
    the same face is the clockwise successor of the arrival dart.
    """
    position = {}
    for v, darts in rotation.items():
        for i, d in enumerate(darts):
            position[d] = (v, i)
    face_of: dict[tuple[int, int], int] = {}
    nfaces = 0
    for v in sorted(rotation):
        for d in rotation[v]:
            if d in face_of:
                continue
            cur = d
            while cur not in face_of:
                face_of[cur] = nfaces
                k, end = cur
                w, i = position[(k, 1 - end)]
                cur = rotation[w][(i - 1) % len(rotation[w])]
            nfaces += 1
    return face_of


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    checks: dict[str, bool]
    messages: list[str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __bool__(self):
        return self.ok

    def __str__(self):
        lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in self.checks.items()]
        return "\n".join(lines + self.messages)


def _is_acyclic(ids, edges) -> bool:
    succ = {v: [] for v in ids}
    indeg = {v: 0 for v in ids}
    for e in edges:
        if e.src in succ and e.dst in indeg:
            succ[e.src].append(e.dst)
            indeg[e.dst] += 1
    stack = [v for v in ids if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == len(ids)


def _is_connected(ids, edges) -> bool:
    if not ids:
        return True
    adj = {v: set() for v in ids}
    for e in edges:
        if e.src in adj and e.dst in adj:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(ids)


def validate_prograph(p: Prograph) -> ValidationReport:
    """Check every prograph invariant; never raises."""
    checks: dict[str, bool] = {}
    msgs: list[str] = []
    ids = p.ids
    kinds = [op.kind for op in p.operators]

    arity = (
        len(set(ids)) == len(ids)
        and kinds.count(COP) == p.n
        and kinds.count(PROD) == p.n
        and len(kinds) == 2 * p.n
    )
    for e in p.edges:
        if e.src not in p._kind or e.dst not in p._kind:
            arity = False
            msgs.append(f"edge {e} references an unknown operator")
        elif not (0 <= e.out_port < n_outputs(p.kind(e.src)) and 0 <= e.in_port < n_inputs(p.kind(e.dst))):
            arity = False
            msgs.append(f"edge {e} uses a port out of range")
    checks["arity"] = arity

    outs = [(e.src, e.out_port) for e in p.edges]
    ins = [(e.dst, e.in_port) for e in p.edges]
    checks["unique_ports"] = len(set(outs)) == len(outs) and len(set(ins)) == len(ins)

    free_in = [
        (op.id, port) for op in p.operators for port in range(n_inputs(op.kind))
        if (op.id, port) not in set(ins)
    ]
    free_out = [
        (op.id, port) for op in p.operators for port in range(n_outputs(op.kind))
        if (op.id, port) not in set(outs)
    ]
    if p.n == 0:
        checks["global_ports"] = not p.edges
    else:
        checks["global_ports"] = (
            len(free_in) == 1 and p.kind(free_in[0][0]) == COP
            and len(free_out) == 1 and p.kind(free_out[0][0]) == PROD
        )
        if not checks["global_ports"]:
            msgs.append(f"unattached inputs {free_in}, unattached outputs {free_out}")

    checks["edge_count"] = len(p.edges) == max(3 * p.n - 1, 0)
    checks["acyclic"] = _is_acyclic(ids, p.edges)
    checks["connected"] = _is_connected(ids, p.edges)

    planar = False
    if checks["arity"] and checks["unique_ports"] and checks["global_ports"]:
        cm = close_on_sphere(p)
        nv = len(cm.rotation)
        ne = len(cm.edges)
        nf = len(set(trace_faces(cm.edges, cm.rotation).values()))
        planar = nv - ne + nf == 2
        if not planar:
            msgs.append(f"embedding has Euler characteristic {nv - ne + nf}")
    else:
        msgs.append("planarity not checked: ports are inconsistent")
    checks["planar"] = planar
    return ValidationReport(checks, msgs)


# ---------------------------------------------------------------------------
# readiness sweep and canonical code


def _consumers(p: Prograph) -> dict[tuple[int, int], tuple[int, int] | None]:
    cons: dict[tuple[int, int], tuple[int, int] | None] = {}
    for e in p.edges:
        cons[(e.src, e.out_port)] = (e.dst, e.in_port)
    if p.n:
        gin, gout = p.global_input, p.global_output
        if gin is None or gout is None:
            raise PrographError("prograph has no unique global input/output")
        cons[GLOBAL_IN] = (gin, 0)
        cons[(gout, 0)] = None
    return cons


def boriefication(p: Prograph) -> dict[int, int]:
    """Label operators 1..2n bottom-to-top, left-to-right by readiness.

    An operator is ready once all its input wires are on the frontier; the
    one whose leftmost pending input sits leftmost on the frontier is
    labelled next.  A product is ready only when its two inputs are
    adjacent (left then right).
    """
    if p.n == 0:
        return {}
    cons = _consumers(p)
    frontier = [GLOBAL_IN]
    labels: dict[int, int] = {}
    while len(labels) < 2 * p.n:
        for i, w in enumerate(frontier):
            c = cons.get(w)
            if c is None:
                continue
            v, port = c
            if p.kind(v) == COP:
                frontier[i:i + 1] = [(v, LEFT), (v, RIGHT)]
                break
            if port == LEFT and i + 1 < len(frontier) and cons.get(frontier[i + 1]) == (v, RIGHT):
                frontier[i:i + 2] = [(v, 0)]
                break
        else:
            raise BoriefError(f"sweep starved after labelling {len(labels)} operators")
        if v in labels:
            raise BoriefError(f"operator {v} reached twice")
        labels[v] = len(labels) + 1
    return labels


def canonical_code(p: Prograph) -> str:
    """Relabelling-invariant string for the embedded prograph.

    Operators are renumbered by their boriefication labels; the code lists
    the kinds in label order, then the sorted edge list.
    """
    if p.n == 0:
        return "0|"
    lab = boriefication(p)
    order = sorted(lab, key=lab.get)
    kinds = "".join("c" if p.kind(v) == COP else "p" for v in order)
    edges = sorted((lab[e.src], e.out_port, lab[e.dst], e.in_port) for e in p.edges)
    return f"{p.n}|{kinds}|" + ",".join(f"{a}.{i}>{b}.{j}" for a, i, b, j in edges)


def normalized(p: Prograph) -> Prograph:
    """Copy of ``p`` whose operator ids are the boriefication labels."""
    if p.n == 0:
        return p
    lab = boriefication(p)
    q = p.relabel(lab)
    return Prograph(q.n, tuple(sorted(q.operators, key=lambda o: o.id)), tuple(sorted(q.edges)))


def coproducts_first_prograph(p: Prograph) -> bool:
    lab = boriefication(p)
    return all(lab[v] <= p.n for v in lab if p.kind(v) == COP)


# ---------------------------------------------------------------------------
# involution and edge types


def schuetzenberger_prograph(p: Prograph) -> Prograph:
    """Half-turn of the diagram: kinds swap, edges reverse, left <-> right."""
    ops = tuple(Operator(op.id, PROD if op.kind == COP else COP) for op in p.operators)
    edges = []
    for e in p.edges:
        out_port = 1 - e.in_port if p.kind(e.dst) == PROD else 0
        in_port = 1 - e.out_port if p.kind(e.src) == COP else 0
        edges.append(Edge(e.dst, out_port, e.src, in_port))
    return Prograph(p.n, ops, tuple(edges))


def classify_edge(p: Prograph, e: Edge | int) -> EdgeType:
    if isinstance(e, int):
        if not 0 <= e < len(p.edges):
            raise PrographError(f"no edge with index {e}")
        e = p.edges[e]
    elif e not in p.edges:
        raise PrographError(f"{e} is not an edge of this prograph")
    return _TYPE_GRID[((p.kind(e.src), e.out_port), (p.kind(e.dst), e.in_port))]


def avoids_type_vii(p: Prograph) -> bool:
    return all(classify_edge(p, e) is not EdgeType.VII for e in p.edges)


# ---------------------------------------------------------------------------
# direct enumeration


class _Wire:
    __slots__ = ("key", "born", "last_right")

    def __init__(self, key, born):
        self.key = key
        self.born = born
        self.last_right = None


def _generate(n: int) -> Iterator[list[tuple]]:
    """Yield readiness-ordered construction sequences of size-n prographs.

    Each prograph is produced by exactly one sequence: its boriefication
    order.  An operation applied at frontier position ``p`` certifies that
    nothing to its left was ready, which forbids later coproducts on those
    wires and later products joining two of them.
    """
    frontier = [_Wire(GLOBAL_IN, -1)]
    seq: list[tuple] = []
    counts = [0, 0]

    def rec():
        t = len(seq)
        if t == 2 * n:
            if len(frontier) == 1:
                yield list(seq)
            return
        for pos in range(len(frontier)):
            w = frontier[pos]
            if counts[0] < n and w.last_right is None:
                yield from apply(pos, 1, ("c", t + 1, w.key))
            if counts[1] < n and pos + 1 < len(frontier):
                w2 = frontier[pos + 1]
                if w2.last_right is None or w2.last_right < w.born:
                    yield from apply(pos, 2, ("p", t + 1, w.key, w2.key))

    def apply(pos, width, op):
        t = len(seq)
        saved = [w.last_right for w in frontier[:pos]]
        for w in frontier[:pos]:
            w.last_right = t
        old = frontier[pos:pos + width]
        v = op[1]
        if op[0] == "c":
            new = [_Wire((v, LEFT), t), _Wire((v, RIGHT), t)]
            counts[0] += 1
        else:
            new = [_Wire((v, 0), t)]
            counts[1] += 1
        frontier[pos:pos + width] = new
        seq.append(op)
        yield from rec()
        seq.pop()
        frontier[pos:pos + len(new)] = old
        counts[0 if op[0] == "c" else 1] -= 1
        for w, s in zip(frontier[:pos], saved):
            w.last_right = s

    yield from rec()


def _from_sequence(n: int, seq: list[tuple]) -> Prograph:
    ops = []
    edges = []
    for op in seq:
        v = op[1]
        if op[0] == "c":
            ops.append(Operator(v, COP))
            src = op[2]
            if src != GLOBAL_IN:
                edges.append(Edge(src[0], src[1], v, 0))
        else:
            ops.append(Operator(v, PROD))
            for port, src in ((LEFT, op[2]), (RIGHT, op[3])):
                edges.append(Edge(src[0], src[1], v, port))
    return Prograph(n, tuple(ops), tuple(sorted(edges)))


def enumerate_prographs(n: int) -> list[Prograph]:
    """All size-n prographs, generated directly and sorted by canonical code."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [empty()]
    found = [_from_sequence(n, s) for s in _generate(n)]
    return sorted(found, key=canonical_code)
