"""Rectangular 3-row standard Young tableaux.

Rows are stored bottom row first: ``rows[0]`` holds 1, ``rows[2]`` holds 3n.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial


class TableauError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class StandardTableau:
    n: int
    rows: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @classmethod
    def from_rows(cls, rows) -> "StandardTableau":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if len(rows) != 3:
            raise TableauError("a tableau needs exactly three rows")
        return cls(len(rows[0]), rows)

    def reading_word(self) -> tuple[int, ...]:
        return self.rows[0] + self.rows[1] + self.rows[2]

    def row_word(self) -> list[int]:
        """Row index (0, 1, 2) of each entry 1..3n."""
        word = [0] * (3 * self.n)
        for i, row in enumerate(self.rows):
            for v in row:
                word[v - 1] = i
        return word

    @classmethod
    def from_row_word(cls, word) -> "StandardTableau":
        rows = ([], [], [])
        for v, i in enumerate(word, start=1):
            rows[i].append(v)
        return cls.from_rows(rows)

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "StandardTableau":
        if "rows" not in data:
            raise TableauError("missing field 'rows'")
        t = cls.from_rows(data["rows"])
        if "n" in data and int(data["n"]) != t.n:
            raise TableauError("field 'n' disagrees with the row length")
        return t

    def __str__(self):
        width = len(str(3 * self.n)) if self.n else 1
        lines = []
        for row in reversed(self.rows):
            lines.append("|" + "|".join(str(v).rjust(width) for v in row) + "|")
        return "\n".join(lines)


def validate_tableau(t: StandardTableau) -> bool:
    if len(t.rows) != 3 or any(len(r) != t.n for r in t.rows):
        return False
    if sorted(t.reading_word()) != list(range(1, 3 * t.n + 1)):
        return False
    for row in t.rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for j in range(t.n):
        if not t.rows[0][j] < t.rows[1][j] < t.rows[2][j]:
            return False
    return True


def count_3d_catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return 2 * factorial(3 * n) // (factorial(n) * factorial(n + 1) * factorial(n + 2))


def enumerate_tableaux(n: int) -> list[StandardTableau]:
    """All 3 x n standard tableaux, sorted by reading word."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    rows: list[list[int]] = [[], [], []]

    def place(v):
        if v > 3 * n:
            out.append(StandardTableau(n, tuple(tuple(r) for r in rows)))
            return
        for i in range(3):
            if len(rows[i]) < n and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                place(v + 1)
                rows[i].pop()

    place(1)
    out.sort(key=StandardTableau.reading_word)
    return out


def schuetzenberger_tableau(t: StandardTableau) -> StandardTableau:
    """Rotate by 180 degrees, then send every entry v to 3n + 1 - v."""
    m = 3 * t.n + 1
    rows = tuple(tuple(m - v for v in reversed(t.rows[2 - i])) for i in range(3))
    return StandardTableau(t.n, rows)


def coproducts_first(t: StandardTableau) -> bool:
    """Whether the last bottom-row entry precedes the first top-row entry."""
    if t.n < 1:
        raise TableauError("needs n >= 1")
    return t.rows[0][-1] < t.rows[2][0]
