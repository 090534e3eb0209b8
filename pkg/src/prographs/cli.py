"""Command-line interface.

JSON goes to stdout unless ``--format`` asks for text, DOT or TikZ.  Exit
status is 0 on success, 1 when the input is well-formed but the operation
does not apply, 2 on usage errors and malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import render
from .bijection import BijectionError, prograph_to_tableau, tableau_to_prograph
from .cache import EnumerationCache
from .catalan_stats import (
    a274969, cat_poly, enumerate_trees, pair_bound_sum, tree_code, tree_from_code,
    truncated_square_sum,
)
from .checks import format_report, run_checks
from .duality import (
    Triangulation, TriangulationError, antipodal_involution, dual_edge_type, flip_edge,
    flip_obstruction, prograph_to_triangulation, triangulation_to_prograph,
)
from .order import PosetError, build_rotation_poset, glue_trees, is_lattice, tamari
from .prograph import (
    Prograph, PrographError, canonical_code, classify_edge, coproducts_first_prograph,
    schuetzenberger_prograph,
)
from .rewriting import RewriteError, RotationRule, applicable_rules, apply_rotation, parse_rules, rule_for
from .tableaux import StandardTableau, TableauError, coproducts_first, schuetzenberger_tableau

DOMAIN_ERRORS = (PrographError, TableauError, BijectionError, RewriteError, TriangulationError, PosetError)


class InputError(Exception):
    """Malformed input; reported with exit status 2."""


# ---------------------------------------------------------------------------
# input and output


def _read_input(args):
    if args.json is not None:
        text = args.json
    elif args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON (line {exc.lineno}, column {exc.colno})") from None
    if isinstance(data, list) and len(data) == 3 and all(isinstance(r, list) for r in data):
        data = {"rows": data}
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    return _decode(data)


def _decode(data: dict):
    try:
        if "triangles" in data:
            return Triangulation.from_json(data)
        if "operators" in data or "edges" in data:
            return Prograph.from_json(data)
        if "rows" in data:
            return StandardTableau.from_json(data)
    except (PrographError, TableauError, TriangulationError) as exc:
        raise InputError(str(exc)) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed input: {exc}") from None
    raise InputError("input has none of the fields 'rows', 'operators' or 'triangles'")


def _as_prograph(obj) -> Prograph:
    if isinstance(obj, Prograph):
        return obj
    if isinstance(obj, StandardTableau):
        return tableau_to_prograph(obj)
    return triangulation_to_prograph(obj)


def _render(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(obj), indent=2, sort_keys=True)
    kind = {Prograph: "prograph", StandardTableau: "tableau", Triangulation: "triangulation"}.get(type(obj))
    if kind is None:
        if fmt == "text":
            return json.dumps(_jsonable(obj), sort_keys=True) if not isinstance(obj, str) else obj
        raise InputError(f"format {fmt!r} is not available for this output")
    if kind == "tableau":
        return {"text": str, "dot": render.tableau_dot, "tikz": render.tableau_tikz}[fmt](obj)
    table = {
        "prograph": {"text": render.prograph_text, "dot": render.prograph_dot, "tikz": render.prograph_tikz},
        "triangulation": {"text": render.triangulation_text, "dot": render.triangulation_dot,
                          "tikz": render.triangulation_tikz},
    }
    return table[kind][fmt](obj)


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    return obj


def _emit(obj, args):
    print(_render(obj, args.format))


def _emit_many(items, args):
    if args.format == "json":
        print(json.dumps([_jsonable(x) for x in items], indent=2, sort_keys=True))
    else:
        print("\n\n".join(_render(x, args.format) for x in items))


def _cache(args) -> EnumerationCache:
    return EnumerationCache(args.cache_dir)


def _need_n(args):
    if args.n is None:
        raise InputError("--n is required")
    if args.n < 0:
        raise InputError("--n must be non-negative")
    return args.n


# ---------------------------------------------------------------------------
# verbs


def cmd_enumerate(args):
    n = _need_n(args)
    fam = args.family
    if fam == "trees":
        items = [tree_code(t) for t in enumerate_trees(n)]
    elif fam == "triangulations":
        items = [prograph_to_triangulation(p) for p in _cache(args).load("prographs", n)] if n else []
    else:
        items = _cache(args).load(fam, n)
    if args.seed is not None:
        if not items:
            raise PrographError("nothing to pick from")
        items = [random.Random(args.seed).choice(items)]
    _emit_many(items, args)


def cmd_count(args):
    n = _need_n(args)
    if args.family == "trees":
        print(len(enumerate_trees(n)))
    else:
        fam = "prographs" if args.family == "triangulations" else args.family
        print(len(_cache(args).load(fam, n)))


def cmd_convert(args, target=None):
    obj = _read_input(args)
    target = target or args.to
    if target is None:
        target = "prograph" if not isinstance(obj, Prograph) else "tableau"
    p = _as_prograph(obj)
    out = {"prograph": lambda: p, "tableau": lambda: prograph_to_tableau(p),
           "triangulation": lambda: prograph_to_triangulation(p)}[target]()
    _emit(out, args)


def cmd_involution(args):
    obj = _read_input(args)
    if isinstance(obj, StandardTableau):
        out = schuetzenberger_tableau(obj)
    elif isinstance(obj, Prograph):
        out = schuetzenberger_prograph(obj)
    else:
        out = antipodal_involution(obj)
    _emit(out, args)


def cmd_dual(args):
    obj = _read_input(args)
    if isinstance(obj, Triangulation):
        _emit(triangulation_to_prograph(obj), args)
    else:
        _emit(prograph_to_triangulation(_as_prograph(obj)), args)


def cmd_flip(args):
    obj = _read_input(args)
    tr = obj if isinstance(obj, Triangulation) else prograph_to_triangulation(_as_prograph(obj))
    if args.edge is None:
        rows = []
        for k in range(len(tr.edges)):
            ty = dual_edge_type(tr, k)
            rows.append({"edge": k, "type": ty.name if ty else None,
                         "flippable": flip_obstruction(tr, k, args.mirror) is None,
                         "reason": flip_obstruction(tr, k, args.mirror)})
        _emit(rows, args)
        return
    _emit(flip_edge(tr, args.edge, args.mirror), args)


def cmd_rotate(args):
    p = _as_prograph(_read_input(args))
    if args.edge is None:
        raise InputError("--edge is required")
    if not 0 <= args.edge < len(p.edges):
        raise RewriteError(f"no edge with index {args.edge}")
    if args.rule:
        rule = RotationRule(args.rule.upper())
    else:
        rule = rule_for(classify_edge(p, args.edge), args.mirror)
        if rule is None:
            raise RewriteError(f"edge {args.edge} of type {classify_edge(p, args.edge).name} admits no rule")
    _emit(apply_rotation(p, args.edge, rule, args.mirror), args)


def cmd_successors(args):
    p = _as_prograph(_read_input(args))
    rules = parse_rules(args.rules)
    out = []
    for k, rule in applicable_rules(p, rules, args.mirror):
        q = apply_rotation(p, k, rule, args.mirror)
        out.append({"edge": k, "rule": rule.value, "code": canonical_code(q),
                    "tableau": prograph_to_tableau(q).to_json()["rows"], "prograph": q.to_json()})
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for row in out:
            print(f"edge {row['edge']} rule {row['rule']}: {row['tableau']}")


def _poset(args):
    n = _need_n(args)
    return build_rotation_poset(n, parse_rules(args.rules), args.restrict, args.mirror,
                                prographs=_cache(args).load("prographs", n))


def _tableau_labels(P, n, cache):
    labels = {}
    for p in cache.load("prographs", n):
        c = canonical_code(p)
        if c in P.index:
            labels[c] = str(prograph_to_tableau(p).to_json()["rows"])
    return labels


def cmd_poset(args):
    P = _poset(args)
    labels = _tableau_labels(P, args.n, _cache(args))
    if args.format == "json":
        data = P.to_json()
        data["tableaux"] = {c: json.loads(labels[c]) for c in P.elements}
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        fn = {"text": render.poset_text, "dot": render.poset_dot, "tikz": render.poset_tikz}[args.format]
        print(fn(P, labels))


def cmd_lattice_check(args):
    P = _poset(args)
    rep = is_lattice(P)
    if args.format == "json":
        print(json.dumps({"lattice": rep.is_lattice, "elements": len(P), "covers": len(P.covers),
                          "pair": list(rep.pair) if rep.pair else None, "missing": rep.kind,
                          "bounds": rep.bounds, "extremal": rep.extremal}, indent=2, sort_keys=True))
        return
    print(f"lattice: {str(rep.is_lattice).lower()}")
    if not rep.is_lattice:
        labels = _tableau_labels(P, args.n, _cache(args))
        x, y = rep.pair
        print(f"no {rep.kind} for {labels[x]} and {labels[y]}")
        print(f"{len(rep.bounds)} common {'upper' if rep.kind == 'join' else 'lower'} bounds, "
              f"{len(rep.extremal)} {'minimal' if rep.kind == 'join' else 'maximal'}:")
        for z in rep.extremal:
            print(f"  {labels[z]}")


def cmd_tamari(args):
    P = tamari(_need_n(args))
    if args.format == "json":
        print(json.dumps(P.to_json(), indent=2, sort_keys=True))
    else:
        fn = {"text": render.poset_text, "dot": render.poset_dot, "tikz": render.poset_tikz}[args.format]
        print(fn(P))


def cmd_glue(args):
    if args.product is None or args.coproduct is None:
        raise InputError("--product and --coproduct tree codes are required")
    try:
        pt, ct = tree_from_code(args.product), tree_from_code(args.coproduct)
    except (ValueError, IndexError):
        raise InputError("tree codes use '.' for a leaf and '(LR)' for a node") from None
    _emit(glue_trees(pt, ct), args)


def cmd_stats(args):
    n = _need_n(args)
    if args.a274969:
        print(a274969(n))
        return
    if args.cat_poly:
        print(cat_poly(n) if args.format != "json" else json.dumps(cat_poly(n).to_json()))
        return
    if args.truncated:
        print(truncated_square_sum(n))
        return
    if args.coproducts_first:
        print(sum(coproducts_first_prograph(p) for p in _cache(args).load("prographs", n)) if n else 1)
        return
    ps = _cache(args).load("prographs", n)
    ts = _cache(args).load("tableaux", n)
    data = {
        "n": n,
        "cat_poly": list(cat_poly(n).coeffs),
        "truncated_square_sum": truncated_square_sum(n),
        "a274969": a274969(n),
        "pair_bound_sum": pair_bound_sum(n - 1, n) if n else 1,
        "coproducts_first_tableaux": sum(coproducts_first(t) for t in ts) if n else 1,
        "coproducts_first_labels": sum(coproducts_first_prograph(p) for p in ps) if n else 1,
    }
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for k in sorted(data):
            print(f"{k}: {data[k]}")


def cmd_check_all(args):
    max_n = args.max_n if args.max_n is not None else 3
    rows = run_checks(max_n, _cache(args))
    if args.format == "json":
        print(json.dumps([{"check": a, "n": b, "pass": c, "detail": d} for a, b, c, d in rows],
                         indent=2, sort_keys=True))
    else:
        sys.stdout.write(format_report(rows))
    return 0 if all(r[2] for r in rows) else 1


def cmd_export(args):
    n = _need_n(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ext = {"json": "json", "dot": "dot", "tikz": "tex", "text": "txt"}[args.format]
    cache = _cache(args)
    written = 0
    for i, p in enumerate(cache.load("prographs", n)):
        objs = {"prograph": p, "tableau": prograph_to_tableau(p)}
        if n:
            objs["triangulation"] = prograph_to_triangulation(p)
        for name, obj in objs.items():
            (out / f"{name}-{n}-{i:04d}.{ext}").write_text(_render(obj, args.format) + "\n", encoding="utf-8")
            written += 1
    P = build_rotation_poset(n, prographs=cache.load("prographs", n))
    labels = _tableau_labels(P, n, cache)
    if args.format == "json":
        text = json.dumps(P.to_json(), indent=2, sort_keys=True)
    else:
        text = {"text": render.poset_text, "dot": render.poset_dot, "tikz": render.poset_tikz}[args.format](P, labels)
    (out / f"poset-{n}.{ext}").write_text(text + "\n", encoding="utf-8")
    print(f"wrote {written + 1} files to {out}")


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, fmt: str) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("json", "text", "dot", "tikz"), default=fmt)
    p.add_argument("--cache-dir", help="enumeration cache directory (default: $PROGRAPHS_CACHE_DIR)")
    p.add_argument("--input", "-i", help="input JSON file, '-' for stdin")
    p.add_argument("--json", help="input JSON given inline")
    p.add_argument("--rules", help="comma-separated subset of A,B,C,D")
    p.add_argument("--restrict", choices=("none", "no-type-vii", "coproducts-first"), default="none")
    p.add_argument("--mirror", action="store_true", help="run the rules in the reversed orientation")
    p.add_argument("--seed", type=int, help="pick one enumerated object at random")
    p.add_argument("--max-n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prographs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_text, fmt="json"):
        p = sub.add_parser(name, help=help_text)
        _add_common(p, fmt)
        p.set_defaults(fn=fn)
        return p

    fam = ("prographs", "tableaux", "triangulations", "trees")
    add("enumerate", cmd_enumerate, "list all objects of size n").add_argument(
        "--family", choices=fam, default="prographs")
    add("count", cmd_count, "number of objects of size n").add_argument(
        "--family", choices=fam, default="prographs")
    add("convert", cmd_convert, "convert between tableau, prograph and triangulation").add_argument(
        "--to", choices=("prograph", "tableau", "triangulation"))
    add("to-prograph", lambda a: cmd_convert(a, "prograph"), "convert the input to a prograph")
    add("to-tableau", lambda a: cmd_convert(a, "tableau"), "convert the input to a tableau")
    add("involution", cmd_involution, "apply the Schuetzenberger involution")
    add("dual", cmd_dual, "prograph to triangulation and back")
    add("flip", cmd_flip, "flip a triangulation edge, or list flippable edges").add_argument("--edge", type=int)
    rot = add("rotate", cmd_rotate, "apply a rotation rule to a prograph edge")
    rot.add_argument("--edge", type=int)
    rot.add_argument("--rule", choices=("A", "B", "C", "D", "a", "b", "c", "d"))
    add("successors", cmd_successors, "one-step rewrites of the input")
    add("poset", cmd_poset, "rewrite poset of size n")
    add("lattice-check", cmd_lattice_check, "is the rewrite poset a lattice", fmt="text")
    add("tamari", cmd_tamari, "Tamari lattice on binary trees")
    glue = add("glue", cmd_glue, "glue a product tree onto a coproduct tree")
    glue.add_argument("--product")
    glue.add_argument("--coproduct")
    st = add("stats", cmd_stats, "Catalan statistics")
    st.add_argument("--a274969", action="store_true")
    st.add_argument("--cat-poly", action="store_true")
    st.add_argument("--truncated", action="store_true")
    st.add_argument("--coproducts-first", action="store_true")
    add("check-all", cmd_check_all, "run every invariant check up to --max-n", fmt="text")
    add("export", cmd_export, "write every object of size n to a directory").add_argument(
        "--out", default="export")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
