"""Binary trees, the dg statistic and the Cat_n(q) refinement of Catalan numbers.

Binary trees are nested tuples: ``None`` is the empty tree and a node is a
pair ``(left, right)``.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

BinaryTree = "tuple | None"

#: sizes up to this bound are computed by enumerating trees
ENUMERATION_BOUND = 10


def size(t) -> int:
    if t is None:
        return 0
    return 1 + size(t[0]) + size(t[1])


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _trees(k):
            for right in _trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def enumerate_trees(n: int) -> list:
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_trees(n))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def tree_code(t) -> str:
    """Bracket word: ``.`` for a leaf, ``(LR)`` for a node."""
    if t is None:
        return "."
    return "(" + tree_code(t[0]) + tree_code(t[1]) + ")"


def tree_from_code(s: str):
    pos = 0

    def parse():
        nonlocal pos
        c = s[pos]
        pos += 1
        if c == ".":
            return None
        left = parse()
        right = parse()
        if s[pos] != ")":
            raise ValueError(f"bad tree code {s!r}")
        pos += 1
        return (left, right)

    t = parse()
    if pos != len(s):
        raise ValueError(f"bad tree code {s!r}")
    return t


def mirror(t):
    if t is None:
        return None
    return (mirror(t[1]), mirror(t[0]))


def dg(t) -> int:
    """Leaves visited before the last internal node in preorder.

    Preorder visits a node, then its left subtree, then its right subtree;
    an absent child counts as a visited leaf.
    """
    if t is None:
        raise ValueError("dg is undefined on the empty tree")
    leaves = 0
    at_last = 0
    stack = [t]
    while stack:
        u = stack.pop()
        if u is None:
            leaves += 1
            continue
        at_last = leaves
        stack.append(u[1])
        stack.append(u[0])
    return at_last


class QPolynomial:
    """Dense polynomial in q with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(0,)):
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c) if c else (0,)

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    def truncate(self, degree: int) -> "QPolynomial":
        """Keep the terms of exponent <= degree."""
        return QPolynomial(self.coeffs[: degree + 1])

    def __call__(self, q):
        return sum(c * q**k for k, c in enumerate(self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "q" if k == 1 else f"q^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        if "coeffs" not in data:
            raise ValueError("missing field 'coeffs'")
        return cls(int(c) for c in data["coeffs"])


def cat_poly_enumerated(n: int) -> QPolynomial:
    if n == 0:
        return QPolynomial([1])
    coeffs = [0] * n
    for t in _trees(n):
        coeffs[dg(t)] += 1
    return QPolynomial(coeffs)


def catalan_triangle(n: int, k: int) -> int:
    """binom(n+k, k) - binom(n+k, k-1), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n + k, k) - (comb(n + k, k - 1) if k >= 1 else 0)


def cat_poly(n: int, bound: int = ENUMERATION_BOUND) -> QPolynomial:
    """Sum of q^dg(T) over trees of size n.

    Enumerates trees up to ``bound``; beyond it, the coefficient of q^k is
    ``catalan_triangle(n - 1, k)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= bound:
        return cat_poly_enumerated(n)
    return QPolynomial([catalan_triangle(n - 1, k) for k in range(n)])


def a274969(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")

    def b(k):
        return comb(3 * n, k) if k >= 0 else 0

    return b(n) - 2 * b(n - 1) + b(n - 2)


def truncated_square_sum(n: int) -> int:
    """Sum of the coefficients of q^0..q^n in Cat_n(q)^2."""
    p = cat_poly(n)
    return (p * p).truncate(n)(1)


def pair_bound_sum(n: int, bound: int) -> int:
    """Sum of C(n, d1) C(n, d2) over d1 + d2 <= bound."""
    return sum(
        catalan_triangle(n, d1) * catalan_triangle(n, d2)
        for d1 in range(n + 1)
        for d2 in range(n + 1)
        if d1 + d2 <= bound
    )
