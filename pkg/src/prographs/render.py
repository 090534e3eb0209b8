"""DOT, TikZ and plain-text renderings.

Prographs are drawn bottom to top: coproducts as circles, products as
squares, the global input entering from below.  Triangulations are drawn
as graphs with the source, sink and middle root vertex highlighted.
Posets are drawn as Hasse diagrams with the maxima on top.
"""
from __future__ import annotations

from .prograph import COP, Prograph, boriefication, classify_edge
from .order import Poset
from .tableaux import StandardTableau
from .duality import NORTH_POLE, POLES, Triangulation


def _layers(p: Prograph) -> dict[int, int]:
    """Longest-path depth of each operator from the global input."""
    depth = {p.global_input: 0} if p.n else {}
    preds = {}
    for e in p.edges:
        preds.setdefault(e.dst, []).append(e.src)
    lab = boriefication(p) if p.n else {}
    for v in sorted(lab, key=lab.get):
        depth[v] = 1 + max((depth[u] for u in preds.get(v, [])), default=-1)
    return depth


def _positions(p: Prograph) -> dict[int, tuple[float, float]]:
    depth = _layers(p)
    lab = boriefication(p) if p.n else {}
    rows: dict[int, list[int]] = {}
    for v in sorted(lab, key=lab.get):
        rows.setdefault(depth[v], []).append(v)
    pos = {}
    for d, vs in rows.items():
        for i, v in enumerate(vs):
            pos[v] = (i - (len(vs) - 1) / 2, float(d))
    return pos


def prograph_dot(p: Prograph, name: str = "prograph") -> str:
    lab = boriefication(p) if p.n else {}
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [fontname="Helvetica"];',
             '  in [shape=point]; out [shape=point];']
    for v in sorted(lab, key=lab.get):
        shape = "circle" if p.kind(v) == COP else "square"
        lines.append(f'  v{v} [shape={shape}, label="{lab[v]}"];')
    for e in sorted(p.edges):
        t = classify_edge(p, e).name
        lines.append(f'  v{e.src} -> v{e.dst} [taillabel="{e.out_port}", headlabel="{e.in_port}", label="{t}"];')
    if p.n:
        lines.append(f"  in -> v{p.global_input};")
        lines.append(f"  v{p.global_output} -> out;")
    lines.append("}")
    return "\n".join(lines)


def prograph_tikz(p: Prograph, scale: float = 1.2) -> str:
    lab = boriefication(p) if p.n else {}
    pos = _positions(p)
    out = [f"\\begin{{tikzpicture}}[scale={scale}, >=stealth]"]
    for v in sorted(lab, key=lab.get):
        x, y = pos[v]
        shape = "circle" if p.kind(v) == COP else "rectangle"
        out.append(f"  \\node[draw, {shape}, minimum size=5mm] (v{v}) at ({x:.2f},{y:.2f}) {{{lab[v]}}};")
    if p.n:
        gx = pos[p.global_input][0]
        ox, oy = pos[p.global_output]
        out.append(f"  \\draw[->] ({gx:.2f},-1) -- (v{p.global_input});")
        out.append(f"  \\draw[->] (v{p.global_output}) -- ({ox:.2f},{oy + 1:.2f});")
    for e in sorted(p.edges):
        bend = ""
        if p.kind(e.src) == COP:
            bend = "out=120, in=-90" if e.out_port == 0 else "out=60, in=-90"
        elif p.kind(e.dst) != COP:
            bend = "out=90, in=-60" if e.in_port == 1 else "out=90, in=-120"
        opt = f"[->, {bend}]" if bend else "[->]"
        out.append(f"  \\draw{opt} (v{e.src}) to (v{e.dst});")
    out.append("\\end{tikzpicture}")
    return "\n".join(out)


def prograph_text(p: Prograph) -> str:
    if p.n == 0:
        return "empty prograph"
    lab = boriefication(p)
    lines = [f"prograph of size {p.n}"]
    for v in sorted(lab, key=lab.get):
        lines.append(f"  {lab[v]}: {'coproduct' if p.kind(v) == COP else 'product'}")
    for e in sorted(p.edges, key=lambda e: (lab[e.src], e.out_port)):
        lines.append(f"  {lab[e.src]}.{e.out_port} -> {lab[e.dst]}.{e.in_port}  ({classify_edge(p, e).name})")
    return "\n".join(lines)


def tableau_tikz(t: StandardTableau) -> str:
    out = ["\\begin{tikzpicture}[scale=0.6]"]
    for i, row in enumerate(t.rows):
        for j, v in enumerate(row):
            out.append(f"  \\draw ({j},{i}) rectangle ({j + 1},{i + 1}); \\node at ({j + 0.5},{i + 0.5}) {{{v}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out)


def tableau_dot(t: StandardTableau) -> str:
    cells = "|".join("{" + "|".join(str(v) for v in row) + "}" for row in reversed(t.rows))
    return f'digraph tableau {{\n  node [shape=record];\n  t [label="{{{cells}}}"];\n}}'


def triangulation_dot(tr: Triangulation) -> str:
    root_mid = tr.edges[tr.root[0]][1]
    lines = ["digraph triangulation {", "  node [shape=diamond, color=red];"]
    for v in tr.vertices:
        if v == tr.source:
            lines.append(f'  t{v} [label="W", style=filled, fillcolor=lightblue];')
        elif v == tr.sink:
            lines.append(f'  t{v} [label="E", style=filled, fillcolor=lightblue];')
        elif v == root_mid:
            lines.append(f'  t{v} [label="X", style=filled, fillcolor=lightgrey];')
        else:
            lines.append(f'  t{v} [label="{v}"];')
    for k, (a, b) in enumerate(tr.edges):
        style = ", penwidth=2" if k in tr.root else ""
        lines.append(f'  t{a} -> t{b} [label="{k}"{style}];')
    lines.append("}")
    return "\n".join(lines)


def triangulation_text(tr: Triangulation) -> str:
    V, E, F = tr.counts()
    lines = [f"triangulation of size {tr.n}: V={V} E={E} F={F}",
             f"  source {tr.source}, sink {tr.sink}, root edges {tr.root[0]} {tr.root[1]}"]
    for k, (a, b) in enumerate(tr.edges):
        lines.append(f"  edge {k}: {a} -> {b}")
    for t in tr.triangles:
        tag = ("N" if t.tag == NORTH_POLE else "S") if t.tag in POLES else f"op {t.tag}"
        lines.append(f"  face {tag}: corners {t.corners} sides {t.sides}")
    return "\n".join(lines)


def triangulation_tikz(tr: Triangulation) -> str:
    """Vertices on a circle, source at the bottom, sink on top."""
    import math

    others = [v for v in tr.vertices if v not in (tr.source, tr.sink)]
    pos = {tr.source: (0.0, -2.5), tr.sink: (0.0, 2.5)}
    for i, v in enumerate(others):
        a = math.pi * (i + 1) / (len(others) + 1)
        pos[v] = (-2.0 * math.sin(a) if i % 2 else 2.0 * math.sin(a), -2.5 * math.cos(a))
    out = ["\\begin{tikzpicture}[>=stealth]"]
    for v in tr.vertices:
        x, y = pos[v]
        out.append(f"  \\node[draw=red, diamond, inner sep=1pt] (t{v}) at ({x:.2f},{y:.2f}) {{{v}}};")
    for k, (a, b) in enumerate(tr.edges):
        style = "->, thick" if k in tr.root else "->"
        out.append(f"  \\draw[{style}] (t{a}) to[bend left=8] (t{b});")
    out.append("\\end{tikzpicture}")
    return "\n".join(out)


def _ranks(P: Poset) -> dict[str, int]:
    """Length of the longest chain down to a minimal element."""
    below = {x: [] for x in P.elements}
    for a, b in P.covers:
        below[a].append(b)
    rank: dict[str, int] = {}

    def r(x):
        if x not in rank:
            rank[x] = 1 + max((r(y) for y in below[x]), default=-1)
        return rank[x]

    for x in P.elements:
        r(x)
    return rank


def poset_dot(P: Poset, labels: dict | None = None) -> str:
    labels = labels or {}
    idx = {x: i for i, x in enumerate(P.elements)}
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box, fontsize=9];"]
    for x in P.elements:
        lab = labels.get(x, x).replace('"', "'").replace("\n", "\\n")
        lines.append(f'  e{idx[x]} [label="{lab}"];')
    for a, b in sorted(P.covers):
        lines.append(f"  e{idx[b]} -> e{idx[a]} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines)


def poset_tikz(P: Poset, labels: dict | None = None) -> str:
    labels = labels or {}
    rank = _ranks(P)
    levels: dict[int, list[str]] = {}
    for x in P.elements:
        levels.setdefault(rank[x], []).append(x)
    idx = {x: i for i, x in enumerate(P.elements)}
    out = ["\\begin{tikzpicture}[xscale=2.5, yscale=1.8]"]
    for r, xs in sorted(levels.items()):
        for i, x in enumerate(xs):
            out.append(f"  \\node (e{idx[x]}) at ({i - (len(xs) - 1) / 2:.2f},{r}) {{\\tiny {labels.get(x, x)}}};")
    for a, b in sorted(P.covers):
        out.append(f"  \\draw (e{idx[b]}) -- (e{idx[a]});")
    out.append("\\end{tikzpicture}")
    return "\n".join(out)


def poset_text(P: Poset, labels: dict | None = None) -> str:
    labels = labels or {}
    lines = [f"poset with {len(P)} elements and {len(P.covers)} covers"]
    rank = _ranks(P)
    for x in sorted(P.elements, key=lambda x: (-rank[x], x)):
        ups = sorted(labels.get(b, b) for (b, a) in P.covers if a == x)
        lines.append(f"  [{rank[x]}] {labels.get(x, x)}  <  {', '.join(ups) if ups else '(maximal)'}")
    return "\n".join(lines)
