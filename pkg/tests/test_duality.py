import dataclasses

import pytest

from prographs.bijection import prograph_to_tableau, tableau_to_prograph
from prographs.duality import (
    NORTH_POLE, SOUTH_POLE, Triangle, Triangulation, TriangulationError, antipodal_involution,
    dual_edge_type, flip_edge, flip_obstruction, flippable, flippable_edges,
    prograph_to_triangulation, relabel_triangulation, triangulation_code, triangulation_to_prograph,
    triangulations_equivalent, validate_triangulation,
)
from prographs.prograph import EdgeType, canonical_code, enumerate_prographs, schuetzenberger_prograph, unit
from prographs.rewriting import applicable_rules, apply_rotation
from prographs.tableaux import StandardTableau, count_3d_catalan


def dual_of(rows):
    return prograph_to_triangulation(tableau_to_prograph(StandardTableau.from_rows(rows)))


def test_size_one_dual():
    tr = prograph_to_triangulation(unit())
    assert tr.counts() == (4, 6, 4)
    assert validate_triangulation(tr).ok
    assert canonical_code(triangulation_to_prograph(tr)) == canonical_code(unit())
    assert [flippable(tr, k) for k in range(6)] == [False] * 6
    assert flip_obstruction(tr, tr.root[0]) == "root"


def test_size_one_orientation_tampering():
    tr = prograph_to_triangulation(unit())
    for k in range(len(tr.edges)):
        edges = list(tr.edges)
        edges[k] = edges[k][::-1]
        bad = dataclasses.replace(tr, edges=tuple(edges), _rotation=None)
        report = validate_triangulation(bad)
        assert not report.ok
        assert not (report.checks["unique_source"] and report.checks["unique_sink"])


def test_second_source_is_caught():
    tr = prograph_to_triangulation(unit())
    # reversing the edge from W into the inner vertex makes that vertex a source too
    k = next(k for k, (a, b) in enumerate(tr.edges) if a == tr.source and b not in (1, tr.sink))
    edges = list(tr.edges)
    edges[k] = edges[k][::-1]
    report = validate_triangulation(dataclasses.replace(tr, edges=tuple(edges), _rotation=None))
    assert not report.checks["unique_source"]


def test_deleting_the_root_edge_fails():
    tr = prograph_to_triangulation(unit())
    k = tr.root[0]
    keep = [j for j in range(len(tr.edges)) if j != k]
    renum = {j: i for i, j in enumerate(keep)}
    tris = tuple(Triangle(t.tag, t.corners, tuple(renum.get(s, -1) for s in t.sides)) for t in tr.triangles)
    bad = Triangulation(tr.n, tr.vertices, tuple(tr.edges[j] for j in keep), tris,
                        (renum.get(tr.root[0], -1), renum[tr.root[1]]))
    report = validate_triangulation(bad)
    assert not report.checks["triangle_faces"]
    assert not report.checks["euler"] or not report.checks["counts"]


def test_self_dual_example(self_dual_tableau):
    tr = dual_of(self_dual_tableau.rows)
    assert tr.counts() == (7, 15, 10)
    assert prograph_to_tableau(triangulation_to_prograph(tr)) == self_dual_tableau
    assert triangulation_code(antipodal_involution(tr)) == triangulation_code(tr)


@pytest.mark.parametrize("n", range(1, 5))
def test_duals_are_bipolar_and_round_trip(n):
    codes = set()
    for p in enumerate_prographs(n):
        tr = prograph_to_triangulation(p)
        assert validate_triangulation(tr).ok
        assert tr.counts() == (n + 3, 3 * n + 3, 2 * n + 2)
        assert canonical_code(triangulation_to_prograph(tr)) == canonical_code(p)
        tags = [t.tag for t in tr.triangles]
        assert tags.count(NORTH_POLE) == tags.count(SOUTH_POLE) == 1
        codes.add(triangulation_code(tr))
    assert len(codes) == count_3d_catalan(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_antipodal_commutes_with_duality(n):
    for p in enumerate_prographs(n):
        tr = prograph_to_triangulation(p)
        a = antipodal_involution(tr)
        assert validate_triangulation(a).ok
        assert triangulation_code(a) == triangulation_code(prograph_to_triangulation(schuetzenberger_prograph(p)))
        assert antipodal_involution(a) == tr


def test_type_four_dual_edge_flips():
    p = tableau_to_prograph(StandardTableau.from_rows([[1, 3], [2, 5], [4, 6]]))
    tr = prograph_to_triangulation(p)
    [k] = [k for k, e in enumerate(p.edges) if dual_edge_type(tr, k) is EdgeType.IV]
    assert flippable(tr, k)
    rule = next(r for j, r in applicable_rules(p) if j == k)
    flipped = flip_edge(tr, k)
    assert triangulation_code(flipped) == triangulation_code(prograph_to_triangulation(apply_rotation(p, k, rule)))


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("mirror", [False, True])
def test_flip_rotation_square(n, mirror):
    for p in enumerate_prographs(n):
        tr = prograph_to_triangulation(p)
        rules = applicable_rules(p, mirror=mirror)
        assert flippable_edges(tr, mirror) == sorted(k for k, _ in rules)
        for k, r in rules:
            flipped = flip_edge(tr, k, mirror)
            assert validate_triangulation(flipped).ok
            assert flipped.counts() == tr.counts()
            rotated = prograph_to_triangulation(apply_rotation(p, k, r, mirror))
            assert triangulation_code(flipped) == triangulation_code(rotated)


def test_unflippable_edges_raise_with_reason():
    tr = prograph_to_triangulation(unit())
    with pytest.raises(TriangulationError, match="root"):
        flip_edge(tr, tr.root[1])
    with pytest.raises(TriangulationError, match="pole|orientation|shared"):
        flip_edge(tr, 0)
    with pytest.raises(TriangulationError):
        flippable(tr, 99)


def test_equivalence():
    duals = [prograph_to_triangulation(p) for p in enumerate_prographs(2)]
    assert triangulations_equivalent(duals[0], duals[0])
    assert not any(triangulations_equivalent(duals[i], duals[j]) for i in range(5) for j in range(i))


def test_relabelled_copy_is_equivalent():
    tr = prograph_to_triangulation(enumerate_prographs(3)[11])
    vs = list(tr.vertices)
    vmap = {v: 40 - v for v in vs}
    emap = {k: (k * 7) % len(tr.edges) for k in range(len(tr.edges))}
    copy = relabel_triangulation(tr, vmap, emap)
    assert validate_triangulation(copy).ok
    assert triangulation_code(copy) == triangulation_code(tr)
    assert triangulations_equivalent(copy, tr)


def test_json_round_trip():
    tr = prograph_to_triangulation(enumerate_prographs(3)[5])
    back = Triangulation.from_json(tr.to_json())
    assert back == tr
    with pytest.raises(TriangulationError, match="root"):
        data = tr.to_json()
        del data["root"]
        Triangulation.from_json(data)


def test_invalid_triangulation_is_rejected():
    tr = prograph_to_triangulation(unit())
    bad = dataclasses.replace(tr, edges=tuple(e[::-1] for e in tr.edges[:1]) + tr.edges[1:], _rotation=None)
    with pytest.raises(TriangulationError):
        triangulation_to_prograph(bad)
