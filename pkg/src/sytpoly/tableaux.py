"""Standard Young tableaux: enumeration, hook lengths, and restricted counts.

A tableau of shape lam (a partition of k) is a bijective filling by 1..k that
increases along rows and down columns.  The restricted set keeps only the
tableaux whose entries alpha+1 .. alpha+h occupy strictly increasing rows.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .errors import (
    CellOutsideShape,
    InternalInexactDivision,
    NotStandard,
    WindowOutOfRange,
)
from .partitions import Cell, Partition


class RestrictionWindow(NamedTuple):
    h: int
    alpha: int


@dataclass(frozen=True)
class StandardTableau:
    """Immutable standard tableau, stored as left-justified rows."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))
        k = shape.weight
        cells: dict[int, Cell] = {}
        for i, row in enumerate(rows, start=1):
            for j, entry in enumerate(row, start=1):
                if not isinstance(entry, int) or not 1 <= entry <= k or entry in cells:
                    raise NotStandard(f"entries must fill 1..{k} bijectively: {rows}")
                cells[entry] = Cell(i, j)
                if j > 1 and row[j - 2] >= entry:
                    raise NotStandard(f"row {i} not increasing: {rows}")
                if i > 1 and rows[i - 2][j - 1] >= entry:
                    raise NotStandard(f"column {j} not increasing: {rows}")
        object.__setattr__(self, "_shape", shape)
        object.__setattr__(self, "_cell_of", cells)

    @property
    def shape(self) -> Partition:
        return self._shape

    @property
    def size(self) -> int:
        return self._shape.weight

    def entry_at(self, cell: Cell) -> int:
        if cell not in self._shape:
            raise CellOutsideShape(f"{cell} outside shape {self._shape.parts}")
        return self.rows[cell.row - 1][cell.col - 1]

    def cell_of(self, m: int) -> Cell:
        return self._cell_of[m]

    def row_of(self, m: int) -> int:
        return self._cell_of[m].row

    def col_of(self, m: int) -> int:
        return self._cell_of[m].col

    def transpose(self) -> "StandardTableau":
        """Reflect across the main diagonal; standard iff the original is."""
        cols = self._shape.parts[0] if self._shape.parts else 0
        new_rows = tuple(
            tuple(self.rows[i][j] for i in range(len(self.rows)) if len(self.rows[i]) > j)
            for j in range(cols)
        )
        return StandardTableau(new_rows)

    @staticmethod
    def from_cells(shape: Partition, cell_of: dict[int, Cell]) -> "StandardTableau":
        """Build from an entry -> cell map covering the shape; validates standardness."""
        grid = [[0] * part for part in shape.parts]
        for entry, (row, col) in cell_of.items():
            if Cell(row, col) not in shape:
                raise CellOutsideShape(f"({row},{col}) outside shape {shape.parts}")
            grid[row - 1][col - 1] = entry
        return StandardTableau(tuple(tuple(r) for r in grid))

    def to_text(self) -> str:
        return " / ".join(" ".join(str(e) for e in row) for row in self.rows)

    def to_json_dict(self) -> dict:
        return {"shape": list(self._shape.parts), "rows": [list(r) for r in self.rows]}

    @staticmethod
    def from_json_dict(data: dict) -> "StandardTableau":
        tab = StandardTableau(tuple(tuple(r) for r in data["rows"]))
        if "shape" in data and tuple(data["shape"]) != tab.shape.parts:
            raise NotStandard(f"declared shape {data['shape']} != rows shape")
        return tab

    def __str__(self) -> str:
        return self.to_text()


def parse_tableau(text: str) -> StandardTableau:
    """Parse either the JSON form or the "1 2 3 / 4 5 / 6" text form."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        if isinstance(data, list):
            data = {"rows": data}
        return StandardTableau.from_json_dict(data)
    rows = tuple(tuple(int(t) for t in chunk.split()) for chunk in text.split("/"))
    return StandardTableau(rows)


def hook_length(lam: Partition, v: Cell) -> int:
    """Arm plus leg plus one for the cell v of the diagram."""
    if v not in lam:
        raise CellOutsideShape(f"{v} outside shape {lam.parts}")
    arm = lam.parts[v.row - 1] - v.col
    leg = sum(1 for part in lam.parts[v.row:] if part >= v.col)
    return arm + leg + 1


def dimension_hook(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    num = factorial(lam.weight)
    den = 1
    for v in lam.cells():
        den *= hook_length(lam, v)
    if num % den:
        raise InternalInexactDivision(f"hook product does not divide {lam.weight}!")
    return num // den


@lru_cache(maxsize=None)
def enumerate_syt(lam: Partition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape lam, in canonical order.

    Entries are placed 1..k in order, always trying the lexicographically
    smallest admissible cell first, so the order is deterministic and the
    empty shape yields the single empty tableau.
    """
    k = lam.weight
    fill = [0] * lam.length  # current length of each row
    grid = [[0] * part for part in lam.parts]
    out: list[StandardTableau] = []

    def place(m: int) -> None:
        if m > k:
            out.append(StandardTableau(tuple(tuple(r) for r in grid)))
            return
        for i in range(lam.length):
            j = fill[i]
            if j >= lam.parts[i]:
                continue
            if i > 0 and fill[i - 1] <= j:
                continue
            grid[i][j] = m
            fill[i] += 1
            place(m + 1)
            fill[i] -= 1
            grid[i][j] = 0

    place(1)
    return tuple(out)


def check_window(k: int, h: int, alpha: int) -> None:
    if h < 0 or alpha < 0 or alpha > k - h:
        raise WindowOutOfRange(f"need 0 <= alpha <= k - h; got h={h}, alpha={alpha}, k={k}")


def satisfies_condition(tab: StandardTableau, h: int, alpha: int) -> bool:
    """Entries alpha+1 .. alpha+h lie in strictly increasing rows.

    Vacuously true for h in {0, 1}.
    """
    check_window(tab.size, h, alpha)
    return all(
        tab.row_of(i + 1 + alpha) > tab.row_of(i + alpha) for i in range(1, h)
    )


@lru_cache(maxsize=None)
def enumerate_restricted(lam: Partition, h: int, alpha: int) -> tuple[StandardTableau, ...]:
    """The members of the restricted set, in canonical enumeration order."""
    check_window(lam.weight, h, alpha)
    return tuple(t for t in enumerate_syt(lam) if satisfies_condition(t, h, alpha))


def count_restricted(lam: Partition, h: int, alpha: int) -> int:
    return len(enumerate_restricted(lam, h, alpha))
