import pytest
from hypothesis import given, strategies as st

from prographs.catalan_stats import (
    QPolynomial, a274969, cat_poly, cat_poly_enumerated, catalan, catalan_triangle, dg,
    enumerate_trees, mirror, pair_bound_sum, size, tree_code, tree_from_code, truncated_square_sum,
)

# the printed table of Cat_n(q), n = 0..6
TABLE = {
    0: [1],
    1: [1],
    2: [1, 1],
    3: [1, 2, 2],
    4: [1, 3, 5, 5],
    5: [1, 4, 9, 14, 14],
    6: [1, 5, 14, 28, 42, 42],
}


@pytest.mark.parametrize("n, count", [(0, 1), (3, 5), (5, 42)])
def test_tree_counts(n, count):
    trees = enumerate_trees(n)
    assert len(trees) == count == catalan(n)
    assert len({tree_code(t) for t in trees}) == count
    assert all(size(t) == n for t in trees)


def test_dg_examples():
    assert dg((None, None)) == 0
    assert dg((None, (None, None))) == 1
    assert dg((None, (None, (None, None)))) == 2
    assert sorted(dg(t) for t in enumerate_trees(2)) == [0, 1]
    assert sorted(dg(t) for t in enumerate_trees(3)) == [0, 1, 1, 2, 2]
    with pytest.raises(ValueError):
        dg(None)


@pytest.mark.parametrize("n", sorted(TABLE))
def test_cat_poly_table(n):
    assert cat_poly(n).coeffs == tuple(TABLE[n])


def test_cat_poly_format():
    assert str(cat_poly(4)) == "1 + 3q + 5q^2 + 5q^3"
    assert str(cat_poly(0)) == "1"


@pytest.mark.parametrize("n", range(1, 10))
def test_closed_form_with_index_shift(n):
    assert cat_poly_enumerated(n).coeffs == tuple(catalan_triangle(n - 1, k) for k in range(n))
    assert cat_poly(n, bound=0) == cat_poly_enumerated(n)
    assert cat_poly(n)(1) == catalan(n)


def test_catalan_triangle_examples():
    assert catalan_triangle(3, 2) == 5
    assert catalan_triangle(5, 4) == 42
    assert all(catalan_triangle(n, 0) == 1 for n in range(10))
    assert catalan_triangle(3, 4) == 0 and catalan_triangle(3, -1) == 0


def test_a274969_values():
    assert [a274969(n) for n in range(7)] == [1, 1, 4, 21, 121, 728, 4488]


@pytest.mark.parametrize("n", range(9))
def test_truncated_square_sum(n):
    assert truncated_square_sum(n) == a274969(n)


def test_truncated_square_examples():
    assert (cat_poly(3) * cat_poly(3)).truncate(3).coeffs == (1, 4, 8, 8)
    assert truncated_square_sum(5) == 728
    assert truncated_square_sum(6) == 4488


def test_pair_sum_needs_the_index_shift():
    # read literally with Cat_3's coefficients the pair bound overshoots
    assert pair_bound_sum(2, 4) == 25
    assert all(pair_bound_sum(n - 1, n) == a274969(n) for n in range(1, 9))
    assert all(pair_bound_sum(n, n + 1) == a274969(n + 1) for n in range(8))


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6), st.lists(st.integers(0, 9), min_size=1, max_size=6))
def test_polynomial_product_evaluates_pointwise(a, b):
    p, q = QPolynomial(a), QPolynomial(b)
    assert (p * q)(2) == p(2) * q(2)
    assert p * q == q * p
    assert QPolynomial.from_json((p * q).to_json()) == p * q


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(enumerate_trees(n))))
def test_tree_code_round_trip(t):
    assert tree_from_code(tree_code(t)) == t
    assert mirror(mirror(t)) == t
