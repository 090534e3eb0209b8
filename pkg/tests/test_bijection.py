import pytest

from prographs.bijection import prograph_to_tableau, tableau_to_prograph
from prographs.prograph import (
    boriefication, canonical_code, coproducts_first_prograph, enumerate_prographs,
    schuetzenberger_prograph, unit, validate_prograph,
)
from prographs.tableaux import (
    StandardTableau, TableauError, coproducts_first, enumerate_tableaux, schuetzenberger_tableau,
)


def test_size_one():
    p = tableau_to_prograph(StandardTableau.from_rows([[1], [2], [3]]))
    assert canonical_code(p) == canonical_code(unit())
    assert prograph_to_tableau(unit()) == StandardTableau.from_rows([[1], [2], [3]])


def test_self_dual_example(self_dual_tableau):
    p = tableau_to_prograph(self_dual_tableau)
    assert validate_prograph(p).ok
    assert canonical_code(schuetzenberger_prograph(p)) == canonical_code(p)


def test_invalid_tableau_rejected():
    with pytest.raises(TableauError):
        tableau_to_prograph(StandardTableau.from_rows([[2, 1], [3, 4], [5, 6]]))


@pytest.mark.parametrize("n", range(6))
def test_bijective_with_exact_round_trip(n):
    images = set()
    for t in enumerate_tableaux(n):
        p = tableau_to_prograph(t)
        assert validate_prograph(p).ok
        assert prograph_to_tableau(p) == t
        images.add(canonical_code(p))
    assert images == {canonical_code(p) for p in enumerate_prographs(n)}


@pytest.mark.parametrize("n", range(4))
def test_inverse_on_enumerated_prographs(n):
    for p in enumerate_prographs(n):
        assert canonical_code(tableau_to_prograph(prograph_to_tableau(p))) == canonical_code(p)


@pytest.mark.parametrize("n", range(5))
def test_equivariance(n):
    for p in enumerate_prographs(n):
        assert prograph_to_tableau(schuetzenberger_prograph(p)) == schuetzenberger_tableau(prograph_to_tableau(p))


@pytest.mark.parametrize("n", range(1, 6))
def test_label_coherence(n):
    for t in enumerate_tableaux(n):
        assert coproducts_first(t) == coproducts_first_prograph(tableau_to_prograph(t))

