"""
From tableaux to prographs to triangulations
============================================

Walk one 3x4 tableau through every representation in the package.
"""

from prographs import (
    StandardTableau, antipodal_involution, prograph_to_tableau, prograph_to_triangulation,
    schuetzenberger_prograph, schuetzenberger_tableau, tableau_to_prograph, triangulation_code,
)
from prographs.render import prograph_text, triangulation_text

# a tableau fixed by the rotate-and-complement involution
t = StandardTableau.from_rows([[1, 2, 5, 6], [3, 4, 9, 10], [7, 8, 11, 12]])
print(t)
print("fixed by the involution:", schuetzenberger_tableau(t) == t)

# read it as a construction sequence: bottom row = coproduct, middle = mark, top = close
p = tableau_to_prograph(t)
print(prograph_text(p))

# the half-turn of the diagram gives back the same prograph
print("self-dual prograph:", prograph_to_tableau(schuetzenberger_prograph(p)) == t)

# close it on the sphere and take the dual
tr = prograph_to_triangulation(p)
print(triangulation_text(tr))
print("stable under the antipodal map:",
      triangulation_code(antipodal_involution(tr)) == triangulation_code(tr))
