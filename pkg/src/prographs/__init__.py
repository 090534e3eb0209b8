"""Product-coproduct prographs, 3-row standard tableaux and bipolar sphere
triangulations, with the bijections, rotation rules and posets relating them."""
from .tableaux import (
    StandardTableau, TableauError, count_3d_catalan, coproducts_first, enumerate_tableaux,
    schuetzenberger_tableau, validate_tableau,
)
from .prograph import (
    COP, PROD, Edge, EdgeType, Operator, Prograph, PrographError, boriefication, canonical_code,
    classify_edge, coproducts_first_prograph, enumerate_prographs, schuetzenberger_prograph,
    validate_prograph,
)
from .bijection import BijectionError, prograph_to_tableau, tableau_to_prograph
from .rewriting import (
    BudgetExhausted, RewriteError, RotationRule, applicable_rules, apply_rotation,
    reduce_to_normal_forms, successors,
)
from .duality import (
    Triangulation, TriangulationError, antipodal_involution, flip_edge, flippable,
    prograph_to_triangulation, triangulation_code, triangulation_to_prograph,
    triangulations_equivalent, validate_triangulation,
)
from .order import (
    Poset, PosetError, build_rotation_poset, glue_trees, is_lattice, poset_isomorphic,
    product_poset, tamari, unglue,
)
from .catalan_stats import (
    QPolynomial, a274969, cat_poly, catalan_triangle, dg, enumerate_trees, truncated_square_sum,
)

__version__ = "0.1.0"
