"""Monotone grid classes: cell matrices, griddings and membership."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .perm import Permutation, standardize


class MatrixError(ValueError):
    pass


class CellType(enum.Enum):
    EMPTY = "0"
    INCREASING = "1"
    DECREASING = "-1"
    POINT = "."

    def accepts(self, values: Sequence[int]) -> bool:
        if self is CellType.EMPTY:
            return not values
        if self is CellType.POINT:
            return len(values) <= 1
        if self is CellType.INCREASING:
            return all(a < b for a, b in zip(values, values[1:]))
        return all(a > b for a, b in zip(values, values[1:]))


_ENTRY = {"0": CellType.EMPTY, "1": CellType.INCREASING, "+1": CellType.INCREASING,
          "-1": CellType.DECREASING, ".": CellType.POINT}


@dataclass(frozen=True)
class GriddingMatrix:
    """Cell types, rows listed top to bottom as the matrix is displayed."""

    cells: tuple[tuple[CellType, ...], ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise MatrixError("matrix needs at least one row and one column")
        if len({len(r) for r in self.cells}) != 1:
            raise MatrixError("ragged matrix rows")
        if all(c is CellType.EMPTY for r in self.cells for c in r):
            raise MatrixError("matrix has no non-empty cell")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def cell(self, row_from_bottom: int, col: int) -> CellType:
        return self.cells[self.rows - 1 - row_from_bottom][col]

    def __str__(self) -> str:
        return "; ".join(",".join(c.value for c in r) for r in self.cells)


def parse_matrix(text: str) -> GriddingMatrix:
    """Parse ``"-1,-1; 1,1; 0,-1"`` (rows top first, entries from 1, +1, -1, 0, .)."""
    rows = []
    for chunk in text.split(";"):
        entries = [e.strip() for e in chunk.split(",")]
        try:
            rows.append(tuple(_ENTRY[e] for e in entries))
        except KeyError as exc:
            raise MatrixError(f"invalid matrix entry {exc.args[0]!r}") from None
    return GriddingMatrix(tuple(rows))


@dataclass(frozen=True)
class Gridding:
    """Divider placement for a gridded permutation.

    ``col_cuts[j]`` is the number of positions left of the j-th vertical line;
    ``row_cuts[i]`` is the number of values below the i-th horizontal line,
    lines listed bottom to top.  Both are weakly increasing.
    """

    col_cuts: tuple[int, ...]
    row_cuts: tuple[int, ...]

    def cell_of(self, position: int, value: int) -> tuple[int, int]:
        """(row from bottom, column) of the point at 0-based position with 1-based value."""
        col = sum(1 for c in self.col_cuts if position >= c)
        row = sum(1 for c in self.row_cuts if value > c)
        return row, col


def cell_contents(p: Sequence[int], g: Gridding, rows: int, cols: int) -> list[list[list[int]]]:
    """Values in each cell, indexed [row from bottom][col], in position order."""
    out = [[[] for _ in range(cols)] for _ in range(rows)]
    for i, v in enumerate(p):
        r, c = g.cell_of(i, v)
        out[r][c].append(v)
    return out


def validate_gridding(p: Sequence[int], m: GriddingMatrix, g: Gridding) -> bool:
    n = len(p)
    for cuts, count in ((g.col_cuts, m.cols), (g.row_cuts, m.rows)):
        if len(cuts) != count - 1:
            return False
        if any(not 0 <= c <= n for c in cuts) or list(cuts) != sorted(cuts):
            return False
    contents = cell_contents(p, g, m.rows, m.cols)
    return all(m.cell(r, c).accepts(contents[r][c])
               for r in range(m.rows) for c in range(m.cols))


def find_gridding(p: Sequence[int], m: GriddingMatrix) -> Optional[Gridding]:
    """Exhaustive divider search; returns the first valid gridding found."""
    n = len(p)
    for col_cuts in combinations_with_replacement(range(n + 1), m.cols - 1):
        for row_cuts in combinations_with_replacement(range(n + 1), m.rows - 1):
            g = Gridding(col_cuts, row_cuts)
            if validate_gridding(p, m, g):
                return g
    return None


def all_griddings(p: Sequence[int], m: GriddingMatrix) -> list[Gridding]:
    n = len(p)
    return [Gridding(cc, rc)
            for cc in combinations_with_replacement(range(n + 1), m.cols - 1)
            for rc in combinations_with_replacement(range(n + 1), m.rows - 1)
            if validate_gridding(p, m, Gridding(cc, rc))]


def in_grid_class(p: Sequence[int], m: GriddingMatrix) -> bool:
    return find_gridding(p, m) is not None


EXAMPLE_MATRIX = parse_matrix("-1,-1; 1,1; 0,-1")
D_MATRIX = parse_matrix("1;-1;1")


def random_gridded_permutation(m: GriddingMatrix, size: int, rng: random.Random) -> Permutation:
    """A random member of the grid class with roughly ``size`` points.

    Each point picks a random non-empty cell (single-point cells at most once)
    and a random height inside its row band; monotone cells then have their
    heights sorted into the required direction.
    """
    cells = [(r, c) for r in range(m.rows) for c in range(m.cols)
             if m.cell(r, c) is not CellType.EMPTY]
    used_points = set()
    placed: dict[tuple[int, int], list[float]] = {}
    xs: dict[tuple[int, int], list[float]] = {}
    for _ in range(size):
        r, c = rng.choice(cells)
        if m.cell(r, c) is CellType.POINT:
            if (r, c) in used_points:
                continue
            used_points.add((r, c))
        placed.setdefault((r, c), []).append(r + rng.random())
        xs.setdefault((r, c), []).append(c + rng.random())
    points = []
    for key, heights in placed.items():
        kind = m.cell(*key)
        xcoords = sorted(xs[key])
        heights = sorted(heights, reverse=kind is CellType.DECREASING)
        points.extend(zip(xcoords, heights))
    if not points:
        r, c = cells[0]
        points = [(c + 0.5, r + 0.5)]
    points.sort()
    return standardize([h for _, h in points])
