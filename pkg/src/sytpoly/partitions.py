"""Partitions, Young diagrams, corners, and partition generation.

Cells are 1-based (row, col) in English orientation: row 1 is the top row.
All values are immutable; every function is pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import (
    EmptyOrMalformed,
    EmptyPartition,
    NonIncreasingViolation,
    NotAnInnerCorner,
    RowTooShort,
)


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Partition:
    """A non-increasing sequence of positive integers; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or p <= 0:
                raise NonIncreasingViolation(f"parts must be positive integers: {parts}")
            if prev is not None and p > prev:
                raise NonIncreasingViolation(f"parts must be non-increasing: {parts}")
            prev = p

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __contains__(self, cell: Cell) -> bool:
        row, col = cell
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]

    def cells(self) -> Iterator[Cell]:
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield Cell(i, j)

    def transpose(self) -> "Partition":
        """Column lengths of the diagram; an involution."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(tuple(cols))

    def inner_corners(self) -> frozenset[Cell]:
        """Cells whose removal leaves a partition: one per distinct part value."""
        if not self.parts:
            raise EmptyPartition("the empty partition has no corners")
        corners = []
        for i, part in enumerate(self.parts, start=1):
            below = self.parts[i] if i < len(self.parts) else 0
            if part > below:
                corners.append(Cell(i, part))
        return frozenset(corners)

    def remove_corner(self, v: Cell) -> "Partition":
        if v not in self.inner_corners():
            raise NotAnInnerCorner(f"{v} is not an inner corner of {self.parts}")
        parts = list(self.parts)
        parts[v.row - 1] -= 1
        if parts[v.row - 1] == 0:
            parts.pop()
        return Partition(tuple(parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts; rejects (rather than sorts) increasing input."""
    if not text.strip():
        return Partition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) == 0:
            raise EmptyOrMalformed(f"not a positive integer: {token!r}")
        parts.append(int(token))
    return Partition(tuple(parts))


def prepend_row(lam: Partition, n: int) -> Partition:
    """The partition (n-k, lam) of n, for n - k at least the first part.

    A zero-length first row (n == k, lam empty) yields lam itself.
    """
    row = n - lam.weight
    first = lam.parts[0] if lam.parts else 0
    if row < first:
        raise RowTooShort(f"first row of length {row} < {first}")
    if row == 0:
        return lam
    return Partition((row,) + lam.parts)


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of k, in reverse-lexicographic order of parts."""
    if k < 0:
        raise ValueError("k must be non-negative")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in gen(k, k))
