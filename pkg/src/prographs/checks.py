"""Exhaustive invariant checks up to a given size, as used by ``check-all``.

Every check returns a row ``(name, n, passed, detail)``; rows come out in a
fixed order and carry no timings, so reports are reproducible byte for byte.
"""
from __future__ import annotations

from .bijection import prograph_to_tableau, tableau_to_prograph
from .catalan_stats import (
    a274969, cat_poly, catalan, catalan_triangle, enumerate_trees, truncated_square_sum,
)
from .duality import (
    antipodal_involution, flip_edge, flippable_edges, prograph_to_triangulation,
    triangulation_code, triangulation_to_prograph, validate_triangulation,
)
from .order import (
    build_rotation_poset, glue_trees, is_lattice, poset_isomorphic, product_poset, tamari,
)
from .prograph import (
    EdgeType, canonical_code, classify_edge, coproducts_first_prograph, schuetzenberger_prograph,
    validate_prograph,
)
from .rewriting import ALL_RULES, TARGET_TYPE, RotationRule, applicable_rules, apply_rotation
from .tableaux import coproducts_first, count_3d_catalan, schuetzenberger_tableau


class Suite:
    def __init__(self, cache=None):
        self.cache = cache
        self._prographs = {}
        self._tableaux = {}

    def prographs(self, n):
        if n not in self._prographs:
            if self.cache is not None:
                self._prographs[n] = self.cache.load("prographs", n)
            else:
                from .prograph import enumerate_prographs
                self._prographs[n] = enumerate_prographs(n)
        return self._prographs[n]

    def tableaux(self, n):
        if n not in self._tableaux:
            if self.cache is not None:
                self._tableaux[n] = self.cache.load("tableaux", n)
            else:
                from .tableaux import enumerate_tableaux
                self._tableaux[n] = enumerate_tableaux(n)
        return self._tableaux[n]

    # each check below covers one size

    def counting(self, n):
        a, b, c = len(self.prographs(n)), len(self.tableaux(n)), count_3d_catalan(n)
        return a == b == c, f"{a} prographs, {b} tableaux, formula {c}"

    def validity(self, n):
        bad = sum(not validate_prograph(p).ok for p in self.prographs(n))
        return bad == 0, f"{bad} invalid"

    def bijection(self, n):
        codes = set()
        for t in self.tableaux(n):
            p = tableau_to_prograph(t)
            if prograph_to_tableau(p) != t:
                return False, f"round trip fails on {t.rows}"
            codes.add(canonical_code(p))
        target = {canonical_code(p) for p in self.prographs(n)}
        return codes == target, f"{len(codes)} images"

    def equivariance(self, n):
        for t in self.tableaux(n):
            lhs = canonical_code(tableau_to_prograph(schuetzenberger_tableau(t)))
            rhs = canonical_code(schuetzenberger_prograph(tableau_to_prograph(t)))
            if lhs != rhs:
                return False, f"square fails on {t.rows}"
        return True, f"{len(self.tableaux(n))} tableaux"

    def duality(self, n):
        if n == 0:
            return True, "no dual at size 0"
        codes = set()
        for p in self.prographs(n):
            tr = prograph_to_triangulation(p)
            if not validate_triangulation(tr).ok:
                return False, f"invalid dual of {canonical_code(p)}"
            if tr.counts() != (n + 3, 3 * n + 3, 2 * n + 2):
                return False, f"counts {tr.counts()}"
            if canonical_code(triangulation_to_prograph(tr)) != canonical_code(p):
                return False, f"round trip fails on {canonical_code(p)}"
            codes.add(triangulation_code(tr))
        return len(codes) == count_3d_catalan(n), f"{len(codes)} distinct triangulations"

    def antipodal(self, n):
        if n == 0:
            return True, "no dual at size 0"
        for p in self.prographs(n):
            lhs = triangulation_code(antipodal_involution(prograph_to_triangulation(p)))
            rhs = triangulation_code(prograph_to_triangulation(schuetzenberger_prograph(p)))
            if lhs != rhs:
                return False, f"fails on {canonical_code(p)}"
        return True, "antipodal map matches the involution"

    def flips(self, n):
        total = 0
        for p in self.prographs(n):
            if n == 0:
                break
            tr = prograph_to_triangulation(p)
            rules = applicable_rules(p)
            if sorted(k for k, _ in rules) != flippable_edges(tr):
                return False, f"flippable edges differ on {canonical_code(p)}"
            for k, rule in rules:
                flipped = flip_edge(tr, k)
                rotated = apply_rotation(p, k, rule)
                if triangulation_code(flipped) != triangulation_code(prograph_to_triangulation(rotated)):
                    return False, f"square fails on {canonical_code(p)} edge {k}"
                total += 1
        return True, f"{total} flips"

    def rewriting(self, n):
        total = 0
        for p in self.prographs(n):
            for k, e in enumerate(p.edges):
                if classify_edge(p, e) in (EdgeType.II, EdgeType.VI) and any(j == k for j, _ in applicable_rules(p)):
                    return False, "a type II or VI edge admits a rule"
            for k, rule in applicable_rules(p):
                q = apply_rotation(p, k, rule)
                if not validate_prograph(q).ok or classify_edge(q, q.edges[-1]) is not TARGET_TYPE[rule]:
                    return False, f"rule {rule} misbehaves on {canonical_code(p)}"
                total += 1
        return True, f"{total} rewrites"

    def acyclic_order(self, n):
        P = build_rotation_poset(n, prographs=self.prographs(n))
        return len(P) == count_3d_catalan(n), f"{len(P)} elements, {len(P.covers)} covers"

    def lattice(self, n):
        P = build_rotation_poset(n, prographs=self.prographs(n))
        rep = is_lattice(P)
        expected = n <= 2
        return rep.is_lattice == expected, f"lattice: {str(rep.is_lattice).lower()}"

    def tamari_square(self, n):
        Q = build_rotation_poset(n, rules=(RotationRule.A, RotationRule.B), restriction="no-type-vii",
                                 prographs=self.prographs(n))
        glued = {canonical_code(glue_trees(a, b)) for a in enumerate_trees(n) for b in enumerate_trees(n)}
        ok = (set(Q.elements) == glued and len(glued) == catalan(n) ** 2
              and is_lattice(Q).is_lattice and poset_isomorphic(Q, product_poset(tamari(n), tamari(n))))
        return ok, f"{len(Q)} elements"

    def statistics(self, n):
        by_tab = sum(coproducts_first(t) for t in self.tableaux(n)) if n else 1
        by_lab = sum(coproducts_first_prograph(p) for p in self.prographs(n)) if n else 1
        closed = cat_poly(n, bound=-1) if n else cat_poly(0)
        ok = (truncated_square_sum(n) == a274969(n) == by_tab == by_lab and cat_poly(n) == closed)
        return ok, f"a274969 = {a274969(n)}, tableaux {by_tab}, labels {by_lab}"


CHECKS = (
    "counting", "validity", "bijection", "equivariance", "duality", "antipodal", "flips",
    "rewriting", "acyclic_order", "lattice", "tamari_square", "statistics",
)


def run_checks(max_n: int, cache=None) -> list[tuple[str, int, bool, str]]:
    suite = Suite(cache)
    rows = []
    for name in CHECKS:
        for n in range(max_n + 1):
            try:
                ok, detail = getattr(suite, name)(n)
            except Exception as exc:  # a crash is a failed check, not a crashed report
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            rows.append((name, n, bool(ok), detail))
    return rows


def format_report(rows) -> str:
    width = max(len(r[0]) for r in rows)
    lines = [f"{name.ljust(width)}  n={n}  {'PASS' if ok else 'FAIL'}  {detail}" for name, n, ok, detail in rows]
    passed = sum(r[2] for r in rows)
    lines.append(f"{passed}/{len(rows)} checks passed")
    return "\n".join(lines) + "\n"
