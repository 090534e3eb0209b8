"""
The dg statistic and a274969
============================

Refine Catalan numbers by dg, square the polynomial, truncate, and compare
with the coproducts-first prographs.
"""

from prographs import a274969, cat_poly, coproducts_first_prograph, enumerate_prographs, truncated_square_sum

for n in range(8):
    sq = (cat_poly(n) * cat_poly(n)).truncate(n)
    print(f"Cat_{n}(q) = {cat_poly(n)}")
    print(f"   square mod q^{n + 1} = {sq}  ->  {sq(1)}")

print([truncated_square_sum(n) for n in range(8)])
print([a274969(n) for n in range(8)])
print([sum(coproducts_first_prograph(p) for p in enumerate_prographs(n)) for n in range(1, 5)])
