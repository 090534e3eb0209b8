"""Prographs on the sphere and their dual bipolar triangulations.

The prograph is closed on the sphere by two extra degree-3 vertices, N above
the global output and S below the global input, joined by two dark-side
edges.  The dual has one vertex per face of that map: the n inner faces,
the west and east outer faces W and E, and the digon X between the two
dark-side edges.  Triangles are the duals of the operators plus the two
pole triangles dual to N and S.

Each dual edge runs from the face on the left of its primal edge to the
face on its right, so that the triangle of the primal source lies on the
right of the dual edge and the triangle of the primal target on its left.
With that rule W is the unique source and E the unique sink, and the root
is the two-edge path W -> X -> E dual to the dark-side edges.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .prograph import (
    COP, PROD, Edge, EdgeType, Operator, Prograph, PrographError, ValidationReport,
    _TYPE_GRID, close_on_sphere, trace_faces, validate_prograph,
)
from .rewriting import SOURCE_TYPE, TARGET_TYPE, rule_for

NORTH_POLE = "north_pole"
SOUTH_POLE = "south_pole"
POLES = (NORTH_POLE, SOUTH_POLE)


class TriangulationError(ValueError):
    pass


@dataclass(frozen=True)
class Triangle:
    """A face: ``corners`` counter-clockwise, ``sides[i]`` joins corners i and i+1.

    ``tag`` is an operator id or one of the pole markers.
    """

    tag: int | str
    corners: tuple[int, int, int]
    sides: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"tag": self.tag, "corners": list(self.corners), "sides": list(self.sides)}


@dataclass(frozen=True)
class Triangulation:
    n: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[Triangle, ...]
    root: tuple[int, int]
    _rotation: dict = field(default=None, compare=False, repr=False)

    @property
    def source(self) -> int:
        return self.edges[self.root[0]][0]

    @property
    def sink(self) -> int:
        return self.edges[self.root[1]][1]

    def rotation(self) -> dict[int, list[int]]:
        """Edges around each vertex, counter-clockwise, starting from the smallest index."""
        if self._rotation is None:
            nxt: dict[int, dict[int, int]] = {}
            for t in self.triangles:
                for i in range(3):
                    nxt.setdefault(t.corners[i], {})[t.sides[i]] = t.sides[i - 1]
            rot = {}
            for v, succ in nxt.items():
                start = min(succ)
                cyc = [start]
                while succ.get(cyc[-1], start) != start and len(cyc) <= len(succ):
                    cyc.append(succ[cyc[-1]])
                rot[v] = cyc
            object.__setattr__(self, "_rotation", rot)
        return self._rotation

    def counts(self) -> tuple[int, int, int]:
        """(V, E, F)."""
        return len(self.vertices), len(self.edges), len(self.triangles)

    def to_json(self) -> dict:
        rot = self.rotation()
        return {
            "n": self.n,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "rotation": {str(v): rot.get(v, []) for v in self.vertices},
            "triangles": [t.to_json() for t in self.triangles],
            "root": list(self.root),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        for key in ("n", "vertices", "edges", "triangles", "root"):
            if key not in data:
                raise TriangulationError(f"missing field {key!r}")
        try:
            edges = tuple((int(a), int(b)) for a, b in data["edges"])
        except (TypeError, ValueError):
            raise TriangulationError("field 'edges' must be a list of [tail, head] pairs") from None
        tris = []
        for k, t in enumerate(data["triangles"]):
            for key in ("tag", "corners", "sides"):
                if key not in t:
                    raise TriangulationError(f"missing field 'triangles[{k}].{key}'")
            tag = t["tag"] if t["tag"] in POLES else int(t["tag"])
            tris.append(Triangle(tag, tuple(int(x) for x in t["corners"]), tuple(int(x) for x in t["sides"])))
        root = tuple(int(x) for x in data["root"])
        if len(root) != 2:
            raise TriangulationError("field 'root' must hold two edge indices")
        return cls(int(data["n"]), tuple(int(v) for v in data["vertices"]), edges, tuple(tris), root)


# ---------------------------------------------------------------------------
# duality


def prograph_to_triangulation(p: Prograph) -> Triangulation:
    """Dual triangulation; dual edge k crosses ``p.edges[k]`` for k < len(p.edges)."""
    report = validate_prograph(p)
    if not report.ok:
        raise PrographError("invalid prograph: " + "; ".join(report.messages))
    if p.n == 0:
        raise TriangulationError("the empty prograph has no dual triangulation")
    cm = close_on_sphere(p)
    face_of = trace_faces(cm.edges, cm.rotation)
    west_faces = {face_of[(cm.west_edge, 0)], face_of[(cm.west_edge, 1)]}
    east_faces = {face_of[(cm.east_edge, 0)], face_of[(cm.east_edge, 1)]}
    (x,) = west_faces & east_faces
    (w,) = west_faces - {x}
    (e,) = east_faces - {x}
    # number faces: W, X, E first, then the rest in order of first appearance
    ids = {w: 0, x: 1, e: 2}
    for k in range(len(cm.edges)):
        for end in (0, 1):
            ids.setdefault(face_of[(k, end)], len(ids))
    edges = tuple((ids[face_of[(k, 0)]], ids[face_of[(k, 1)]]) for k in range(len(cm.edges)))
    tris = []
    for op in p.operators:
        tris.append(_dual_triangle(op.id, cm.rotation[op.id], face_of, ids))
    tris.append(_dual_triangle(NORTH_POLE, cm.rotation[-2], face_of, ids))
    tris.append(_dual_triangle(SOUTH_POLE, cm.rotation[-3], face_of, ids))
    return Triangulation(p.n, tuple(range(len(ids))), edges, tuple(tris), (cm.west_edge, cm.east_edge))


def _dual_triangle(tag, darts, face_of, ids) -> Triangle:
    # the face between primal edges i and i+1 (ccw) is on the left of dart i
    f = [ids[face_of[d]] for d in darts]
    corners = (f[2], f[0], f[1])
    sides = tuple(k for k, _ in darts)
    return Triangle(tag, corners, sides)


def _is_input_side(tr: Triangulation, t: Triangle, i: int) -> bool:
    """A side traversed tail to head along the ccw boundary has ``t`` on its left."""
    return tr.edges[t.sides[i]] == (t.corners[i], t.corners[(i + 1) % 3])


def _operator_of(tr: Triangulation, t: Triangle):
    """(kind, {port key: edge}) read from the orientation of ``t``'s sides."""
    inputs = [i for i in range(3) if _is_input_side(tr, t, i)]
    if len(inputs) == 1:
        i = inputs[0]
        s = t.sides
        return COP, {("in", 0): s[i], ("out", 1): s[(i + 1) % 3], ("out", 0): s[(i + 2) % 3]}
    if len(inputs) == 2:
        (i,) = [j for j in range(3) if j not in inputs]
        s = t.sides
        return PROD, {("out", 0): s[i], ("in", 0): s[(i + 1) % 3], ("in", 1): s[(i + 2) % 3]}
    raise TriangulationError(f"triangle {t.tag} has {len(inputs)} incoming sides")


def _ports(tr: Triangulation):
    """Per edge: (source op, out port) and (target op, in port), or None near the poles."""
    src: dict[int, tuple] = {}
    dst: dict[int, tuple] = {}
    kinds = {}
    for t in tr.triangles:
        if t.tag in POLES:
            continue
        kind, ports = _operator_of(tr, t)
        kinds[t.tag] = kind
        for (side, port), k in ports.items():
            (src if side == "out" else dst)[k] = (t.tag, port)
    return kinds, src, dst


def triangulation_to_prograph(tr: Triangulation) -> Prograph:
    report = validate_triangulation(tr)
    if not report.ok:
        raise TriangulationError("invalid triangulation: " + "; ".join(report.messages))
    kinds, src, dst = _ports(tr)
    edges = []
    for k in range(len(tr.edges)):
        if k in src and k in dst:
            (a, i), (b, j) = src[k], dst[k]
            edges.append(Edge(a, i, b, j))
    ops = tuple(Operator(v, kinds[v]) for v in sorted(kinds))
    return Prograph(tr.n, ops, tuple(edges))


def dual_edge_type(tr: Triangulation, k: int) -> EdgeType | None:
    """Type of the primal edge crossing dual edge ``k``; None if it touches a pole triangle."""
    kinds, src, dst = _ports(tr)
    if k not in src or k not in dst:
        return None
    (a, i), (b, j) = src[k], dst[k]
    return _TYPE_GRID[((kinds[a], i), (kinds[b], j))]


# ---------------------------------------------------------------------------
# validation


def validate_triangulation(tr: Triangulation) -> ValidationReport:
    checks: dict[str, bool] = {}
    msgs: list[str] = []
    V, E, F = len(tr.vertices), len(tr.edges), len(tr.triangles)
    vset = set(tr.vertices)

    # faces are triangles glued along every edge once on each side
    ok = True
    sides_seen: dict[int, list[bool]] = {}
    for t in tr.triangles:
        if len(t.corners) != 3 or len(t.sides) != 3:
            ok = False
            msgs.append(f"face {t.tag} is not a triangle")
            continue
        for i in range(3):
            k = t.sides[i]
            a, b = t.corners[i], t.corners[(i + 1) % 3]
            if not 0 <= k < E or set(tr.edges[k]) != {a, b} or a == b:
                ok = False
                msgs.append(f"face {t.tag}: side {i} does not join its corners")
                continue
            sides_seen.setdefault(k, []).append(tr.edges[k] == (a, b))
    for k in range(E):
        if sorted(sides_seen.get(k, [])) != [False, True]:
            ok = False
            msgs.append(f"edge {k} is not bordered by one face on each side")
    if any(a not in vset or b not in vset for a, b in tr.edges):
        ok = False
        msgs.append("edge endpoint outside the vertex set")
    checks["triangle_faces"] = ok

    # each vertex link is a single cycle, then Euler
    link_ok = ok
    if ok:
        rot = tr.rotation()
        for v in tr.vertices:
            deg = sum((a == v) + (b == v) for a, b in tr.edges)
            if v not in rot or len(rot[v]) != deg:
                link_ok = False
                msgs.append(f"vertex {v} is not a disc neighbourhood")
    checks["vertex_links"] = link_ok
    checks["euler"] = V - E + F == 2
    if not checks["euler"]:
        msgs.append(f"V - E + F = {V - E + F}")
    checks["counts"] = (V, E, F) == (tr.n + 3, 3 * tr.n + 3, 2 * tr.n + 2)
    if not checks["counts"]:
        msgs.append(f"(V, E, F) = {(V, E, F)} for n = {tr.n}")

    # bipolar orientation
    succ = {v: [] for v in vset}
    indeg = {v: 0 for v in vset}
    for a, b in tr.edges:
        if a in vset and b in vset:
            succ[a].append(b)
            indeg[b] += 1
    stack = [v for v in vset if indeg[v] == 0]
    deg = dict(indeg)
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            deg[w] -= 1
            if deg[w] == 0:
                stack.append(w)
    checks["acyclic"] = seen == len(vset)
    sources = sorted(v for v in vset if indeg[v] == 0)
    sinks = sorted(v for v in vset if not succ[v])
    root_ok = (len(tr.root) == 2 and all(0 <= k < E for k in tr.root)
               and tr.edges[tr.root[0]][1] == tr.edges[tr.root[1]][0])
    checks["root_path"] = root_ok
    if not root_ok:
        msgs.append("root is not a two-edge path")
    checks["unique_source"] = root_ok and sources == [tr.source]
    checks["unique_sink"] = root_ok and sinks == [tr.sink]
    if not checks["unique_source"] or not checks["unique_sink"]:
        msgs.append(f"sources {sources}, sinks {sinks}")

    tags = [t.tag for t in tr.triangles]
    poles_ok = tags.count(NORTH_POLE) == 1 and tags.count(SOUTH_POLE) == 1 and root_ok
    if poles_ok:
        for t in tr.triangles:
            if t.tag in POLES and not set(tr.root) <= set(t.sides):
                poles_ok = False
    checks["poles"] = poles_ok
    if not poles_ok:
        msgs.append("pole triangles are not the two faces along the root")

    ops_ok = all(checks.values())
    if ops_ok:
        try:
            _ports(tr)
        except TriangulationError as exc:
            ops_ok = False
            msgs.append(str(exc))
    checks["operator_faces"] = ops_ok
    return ValidationReport(checks, msgs)


# ---------------------------------------------------------------------------
# flips


def _faces_of_edge(tr: Triangulation, k: int):
    """(left triangle index, right triangle index) of edge k."""
    left = right = None
    for idx, t in enumerate(tr.triangles):
        for i in range(3):
            if t.sides[i] == k:
                if _is_input_side(tr, t, i):
                    left = idx
                else:
                    right = idx
    return left, right


def flip_obstruction(tr: Triangulation, k: int, mirror: bool = False) -> str | None:
    """Why edge ``k`` cannot be flipped, or None if it can."""
    if not 0 <= k < len(tr.edges):
        raise TriangulationError(f"no edge with index {k}")
    if k in tr.root:
        return "root"
    li, ri = _faces_of_edge(tr, k)
    t1, t2 = tr.triangles[li], tr.triangles[ri]
    if t1.tag in POLES or t2.tag in POLES:
        return "pole"
    if len(set(t1.sides) & set(t2.sides)) > 1:
        return "shared-two-edges"
    ty = dual_edge_type(tr, k)
    if rule_for(ty, mirror) is None:
        return "orientation"
    p = _apex(t1, k)
    q = _apex(t2, k)
    if p == q:
        return "shared-two-edges"
    return None


def flippable(tr: Triangulation, k: int, mirror: bool = False) -> bool:
    return flip_obstruction(tr, k, mirror) is None


def _apex(t: Triangle, k: int) -> int:
    i = t.sides.index(k)
    return t.corners[(i + 2) % 3]


def flip_edge(tr: Triangulation, k: int, mirror: bool = False) -> Triangulation:
    """Replace diagonal ``k`` by the other diagonal of its quadrilateral.

    The four outer sides keep their orientation; the new diagonal is oriented
    so that its dual edge has the type produced by the matching rotation rule.
    """
    reason = flip_obstruction(tr, k, mirror)
    if reason is not None:
        raise TriangulationError(f"edge {k} is not flippable ({reason})")
    rule = rule_for(dual_edge_type(tr, k), mirror)
    target = SOURCE_TYPE[rule] if mirror else TARGET_TYPE[rule]
    li, ri = _faces_of_edge(tr, k)
    t1, t2 = tr.triangles[li], tr.triangles[ri]
    tail, head = tr.edges[k]
    i1 = t1.sides.index(k)
    i2 = t2.sides.index(k)
    # t1 = (tail, head, p) with sides (k, hp, pt); t2 = (head, tail, q) with sides (k, tq, qh)
    p = t1.corners[(i1 + 2) % 3]
    hp, pt = t1.sides[(i1 + 1) % 3], t1.sides[(i1 + 2) % 3]
    q = t2.corners[(i2 + 2) % 3]
    tq, qh = t2.sides[(i2 + 1) % 3], t2.sides[(i2 + 2) % 3]
    new1 = Triangle(t1.tag, (q, head, p), (qh, hp, k))
    new2 = Triangle(t2.tag, (p, tail, q), (pt, tq, k))
    tris = list(tr.triangles)
    tris[li], tris[ri] = new1, new2
    for orient in ((p, q), (q, p)):
        edges = list(tr.edges)
        edges[k] = orient
        cand = Triangulation(tr.n, tr.vertices, tuple(edges), tuple(tris), tr.root)
        try:
            if dual_edge_type(cand, k) is target and validate_triangulation(cand).ok:
                return cand
        except TriangulationError:
            continue
    raise TriangulationError(f"no orientation of the new diagonal realises rule {rule}")


def flippable_edges(tr: Triangulation, mirror: bool = False) -> list[int]:
    return [k for k in range(len(tr.edges)) if flippable(tr, k, mirror)]


# ---------------------------------------------------------------------------
# involution and equivalence


def antipodal_involution(tr: Triangulation) -> Triangulation:
    """Reverse every edge and exchange the pole markers.

    Reversal turns coproduct triangles into product triangles and swaps the
    left and right sides, which is the half-turn of the primal diagram; the
    root path is read backwards so the new source is the old sink.
    """
    edges = tuple((b, a) for a, b in tr.edges)
    swap = {NORTH_POLE: SOUTH_POLE, SOUTH_POLE: NORTH_POLE}
    tris = tuple(Triangle(swap.get(t.tag, t.tag), t.corners, t.sides) for t in tr.triangles)
    return Triangulation(tr.n, tr.vertices, edges, tris, (tr.root[1], tr.root[0]))


def triangulation_code(tr: Triangulation) -> str:
    """Canonical string of the rooted oriented map.

    Vertices and edges are numbered in breadth-first order starting from the
    source, the first root edge and the counter-clockwise rotation; the pole
    triangle to the left of the first root edge is recorded.
    """
    rot = tr.rotation()
    vlab = {tr.source: 0}
    elab: dict[int, int] = {}
    start = {tr.source: tr.root[0]}
    queue = deque([tr.source])
    parts = []
    while queue:
        v = queue.popleft()
        cyc = rot[v]
        i = cyc.index(start[v])
        entries = []
        for k in cyc[i:] + cyc[:i]:
            a, b = tr.edges[k]
            w = b if a == v else a
            if w not in vlab:
                vlab[w] = len(vlab)
                start[w] = k
                queue.append(w)
            if k not in elab:
                elab[k] = len(elab)
            entries.append(f"{elab[k]}{'>' if a == v else '<'}{vlab[w]}")
        parts.append(" ".join(entries))
    li, _ = _faces_of_edge(tr, tr.root[0])
    pole = "N" if tr.triangles[li].tag == NORTH_POLE else "S"
    return f"{tr.n}|{pole}|" + ";".join(parts)


def relabel_triangulation(tr: Triangulation, vmap: dict, emap: dict) -> Triangulation:
    """Rename vertices and edge indices (both bijections); triangles are reordered."""
    m = len(tr.edges)
    edges = [None] * m
    for k, (a, b) in enumerate(tr.edges):
        edges[emap[k]] = (vmap[a], vmap[b])
    tris = tuple(sorted(
        (Triangle(t.tag, tuple(vmap[c] for c in t.corners), tuple(emap[s] for s in t.sides))
         for t in tr.triangles),
        key=lambda t: t.sides,
    ))
    verts = tuple(sorted(vmap[v] for v in tr.vertices))
    return Triangulation(tr.n, verts, tuple(edges), tris, (emap[tr.root[0]], emap[tr.root[1]]))


def triangulations_equivalent(a: Triangulation, b: Triangulation) -> bool:
    """Same tableau after converting both to prographs."""
    from .bijection import prograph_to_tableau

    return prograph_to_tableau(triangulation_to_prograph(a)) == prograph_to_tableau(triangulation_to_prograph(b))
