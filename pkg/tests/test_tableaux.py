import pytest
from hypothesis import given, strategies as st

from prographs.catalan_stats import a274969
from prographs.tableaux import (
    StandardTableau, TableauError, coproducts_first, count_3d_catalan, enumerate_tableaux,
    schuetzenberger_tableau, validate_tableau,
)


def T(rows):
    return StandardTableau.from_rows(rows)


@pytest.mark.parametrize("rows, ok", [
    ([[1, 2], [3, 4], [5, 6]], True),
    ([[1, 3], [2, 5], [4, 6]], True),
    ([[2, 1], [3, 4], [5, 6]], False),
    ([[1, 4], [2, 3], [5, 6]], False),
    ([[1, 2], [3, 4], [5, 7]], False),
])
def test_validate(rows, ok):
    assert validate_tableau(T(rows)) is ok


def test_ragged_rows_are_invalid():
    assert not validate_tableau(StandardTableau(2, ((1, 2), (3,), (4, 5, 6))))


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 5), (3, 42), (4, 462), (5, 6006), (6, 87516)])
def test_count_formula(n, expected):
    assert count_3d_catalan(n) == expected


@pytest.mark.parametrize("n", range(7))
def test_enumeration_matches_formula(n):
    ts = enumerate_tableaux(n)
    assert len(ts) == count_3d_catalan(n)
    assert all(validate_tableau(t) for t in ts)
    words = [t.reading_word() for t in ts]
    assert words == sorted(set(words))


def test_size_one():
    assert enumerate_tableaux(1) == [T([[1], [2], [3]])]


def test_involution_fixes_self_dual(self_dual_tableau):
    assert schuetzenberger_tableau(self_dual_tableau) == self_dual_tableau
    assert schuetzenberger_tableau(T([[1, 2], [3, 4], [5, 6]])) == T([[1, 2], [3, 4], [5, 6]])


@pytest.mark.parametrize("n", range(6))
def test_involution_is_involutive_and_valid(n):
    for t in enumerate_tableaux(n):
        s = schuetzenberger_tableau(t)
        assert validate_tableau(s)
        assert schuetzenberger_tableau(s) == t


@given(st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.sampled_from(enumerate_tableaux(n))))
def test_row_word_round_trip(t):
    assert StandardTableau.from_row_word(t.row_word()) == t
    assert StandardTableau.from_json(t.to_json()) == t


def test_coproducts_first_examples():
    assert coproducts_first(T([[1, 2], [3, 4], [5, 6]]))
    assert not coproducts_first(T([[1, 4], [2, 5], [3, 6]]))
    assert coproducts_first(T([[1], [2], [3]]))
    assert sum(coproducts_first(t) for t in enumerate_tableaux(2)) == 4
    with pytest.raises(TableauError):
        coproducts_first(T([[], [], []]))


@pytest.mark.parametrize("n", range(1, 6))
def test_coproducts_first_counts(n):
    assert sum(coproducts_first(t) for t in enumerate_tableaux(n)) == a274969(n)


def test_json_errors_name_fields():
    with pytest.raises(TableauError, match="rows"):
        StandardTableau.from_json({"n": 1})
    with pytest.raises(TableauError, match="'n'"):
        StandardTableau.from_json({"n": 2, "rows": [[1], [2], [3]]})


def test_text_rendering_puts_top_row_first():
    assert str(T([[1, 2], [3, 4], [5, 6]])).splitlines() == ["|5|6|", "|3|4|", "|1|2|"]
