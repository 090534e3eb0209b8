"""
Rotation posets
===============

The four oriented rotations turn each size into a poset.  Size 2 is a
lattice, size 3 is not, and two of the rules alone rebuild the square of
the Tamari lattice.
"""

from prographs import (
    RotationRule, StandardTableau, build_rotation_poset, canonical_code, is_lattice,
    poset_isomorphic, product_poset, tableau_to_prograph, tamari,
)
from prographs.order import join_failures
from prographs.render import poset_text


def code(rows):
    return canonical_code(tableau_to_prograph(StandardTableau.from_rows(rows)))


P2 = build_rotation_poset(2)
print(poset_text(P2))
print("lattice:", bool(is_lattice(P2)))

P3 = build_rotation_poset(3)
print(len(P3), "elements,", len(P3.covers), "covers, lattice:", bool(is_lattice(P3)))
print(len(join_failures(P3)), "pairs without a join")

a = code([[1, 3, 5], [2, 4, 6], [7, 8, 9]])
b = code([[1, 3, 4], [2, 6, 7], [5, 8, 9]])
ub = P3.upper_bounds(a, b)
print("common upper bounds:", len(ub), "minimal ones:", len(P3.minimal(ub)))

for n in range(1, 5):
    Q = build_rotation_poset(n, (RotationRule.A, RotationRule.B), "no-type-vii")
    print(n, len(Q), poset_isomorphic(Q, product_poset(tamari(n), tamari(n))))
