"""
Young diagrams, standard tableaux and cell contents.

Cells are 1-based ``(row, column)`` pairs.  The single linear order used
everywhere else in the package is row-reading order: left to right along
row 1, then row 2, and so on.

>>> lam = YoungDiagram((3, 1))
>>> lam.conjugate()
YoungDiagram((2, 1, 1))
>>> [c.content for c in lam.cells()]
[0, 1, 2, -1]
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .coeff import V, Factor, LaurentPoly, ZERO, s_diff

__all__ = [
    "YoungDiagram", "Cell", "StandardTableau", "partitions", "content_sum",
    "c_scalar", "c_factor", "standard_tableaux", "restrict", "hook_length_count",
    "parse_partition",
]


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class YoungDiagram:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __repr__(self):
        return f"YoungDiagram({self.parts!r})"

    def __str__(self):
        return json.dumps(list(self.parts)).replace(" ", "")

    def __len__(self):
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def cells(self) -> list[Cell]:
        """Cells in row-reading order."""
        return [Cell(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]

    def position(self, cell: Cell) -> int:
        """1-based row-reading index of ``cell``."""
        if not (1 <= cell.row <= len(self.parts) and 1 <= cell.col <= self.parts[cell.row - 1]):
            raise ValueError(f"{cell} not in {self}")
        return sum(self.parts[: cell.row - 1]) + cell.col

    def cell_at(self, pos: int) -> Cell:
        if not 1 <= pos <= self.size:
            raise IndexError(f"position {pos} out of range for {self}")
        return self.cells()[pos - 1]

    def conjugate(self) -> YoungDiagram:
        if not self.parts:
            return self
        return YoungDiagram(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def removable_cells(self) -> list[Cell]:
        out = []
        for i, p in enumerate(self.parts):
            if i + 1 == len(self.parts) or self.parts[i + 1] < p:
                out.append(Cell(i + 1, p))
        return out

    def remove(self, cell: Cell) -> YoungDiagram:
        if cell not in self.removable_cells():
            raise ValueError(f"{cell} is not removable from {self}")
        parts = list(self.parts)
        parts[cell.row - 1] -= 1
        return YoungDiagram(tuple(p for p in parts if p))

    def column_cells(self) -> list[list[Cell]]:
        return [[Cell(i, j) for i in range(1, h + 1)] for j, h in enumerate(self.conjugate().parts, 1)]


def parse_partition(text: str) -> YoungDiagram:
    """Parse ``[3,1,1]`` (``[]`` is the empty diagram)."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError(f"partition must be a list, got {text!r}")
    return YoungDiagram(tuple(data))


def partitions(n: int) -> list[YoungDiagram]:
    """All partitions of n in reverse lexicographic order."""
    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxpart), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest
    return [YoungDiagram(p) for p in gen(n, n)]


def content_sum(lam: YoungDiagram, sign: int = 1) -> LaurentPoly:
    """Sum over cells of s^(2*sign*content)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out: dict = {}
    for c in lam.cells():
        k = (0, 0, 2 * sign * c.content)
        out[k] = out.get(k, 0) + 1
    return LaurentPoly(out)


def c_scalar(lam: YoungDiagram, mu: YoungDiagram) -> LaurentPoly:
    """v(s^-1 - s) sum_{mu} s^(-2cn) + v^-1 (s - s^-1) sum_{lam} s^(2cn)."""
    d = s_diff()
    out = ZERO
    if mu.size:
        out = out - V * d * content_sum(mu, -1)
    if lam.size:
        out = out + V ** -1 * d * content_sum(lam, 1)
    return out


def c_factor(lam: YoungDiagram, mu: YoungDiagram) -> Factor:
    return Factor("c", (lam.parts, mu.parts), c_scalar(lam, mu))


@dataclass(frozen=True)
class StandardTableau:
    """Rows of labels, e.g. ``((1, 3), (2,))``."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = YoungDiagram(tuple(len(r) for r in rows))
        n = shape.size
        if sorted(a for r in rows for a in r) != list(range(1, n + 1)):
            raise ValueError(f"labels must be 1..{n}: {rows}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"rows must increase: {rows}")
        for i in range(1, len(rows)):
            for j, a in enumerate(rows[i]):
                if rows[i - 1][j] >= a:
                    raise ValueError(f"columns must increase: {rows}")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def cell_of(self, label: int) -> Cell:
        for i, r in enumerate(self.rows):
            if label in r:
                return Cell(i + 1, r.index(label) + 1)
        raise KeyError(label)

    def __str__(self):
        return json.dumps([list(r) for r in self.rows]).replace(" ", "")

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        return cls(tuple(tuple(r) for r in json.loads(text)))


def restrict(t: StandardTableau) -> StandardTableau:
    """Delete the cell labelled n."""
    n = t.size
    if n < 2:
        raise ValueError("cannot restrict a tableau with fewer than 2 cells")
    rows = tuple(tuple(a for a in r if a != n) for r in t.rows)
    return StandardTableau(tuple(r for r in rows if r))


@lru_cache(maxsize=None)
def standard_tableaux(lam: YoungDiagram) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape lam, built by adding the largest label last."""
    n = lam.size
    if n == 0:
        return ()
    if n == 1:
        return (StandardTableau(((1,),)),)
    out = []
    for cell in lam.removable_cells():
        smaller = lam.remove(cell)
        for t in standard_tableaux(smaller):
            rows = [list(r) for r in t.rows]
            if cell.row > len(rows):
                rows.append([n])
            else:
                rows[cell.row - 1].append(n)
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
    return tuple(sorted(out, key=lambda t: t.rows))


def hook_length_count(lam: YoungDiagram) -> int:
    """Number of standard tableaux via the hook length formula."""
    conj = lam.conjugate().parts
    prod = 1
    for c in lam.cells():
        arm = lam.parts[c.row - 1] - c.col
        leg = conj[c.col - 1] - c.row
        prod *= arm + leg + 1
    return factorial(lam.size) // prod

