"""Inverse bijections between restricted tableau sets at consecutive alpha.

down_map sends the alpha-restricted set into the (alpha-1)-restricted set and
up_map is its inverse; both are the identity on the intersection.  The moves
are driven by a single pivot: q, the largest window index whose row does not
exceed the row of entry alpha, or p, the smallest window index whose row is
reached by entry h+alpha.  The case tables below are the general-k form;
entries above h+alpha never move.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import AlphaOutOfRange, NotInDomain, NotInSourceSet
from .partitions import Cell
from .tableaux import StandardTableau, satisfies_condition


class PivotQ(NamedTuple):
    value: int


class PivotP(NamedTuple):
    value: int


def _check_params(k: int, h: int, alpha: int) -> None:
    if h < 1 or alpha < 1 or alpha > k - h:
        raise AlphaOutOfRange(f"need h >= 1 and 1 <= alpha <= k - h; got h={h}, alpha={alpha}, k={k}")


def compute_q(tab: StandardTableau, h: int, alpha: int) -> PivotQ:
    """Largest 1 <= i <= h with row(i+alpha) <= row(alpha)."""
    _check_params(tab.size, h, alpha)
    if not satisfies_condition(tab, h, alpha) or satisfies_condition(tab, h, alpha - 1):
        raise NotInDomain("pivot q needs a tableau in the alpha set but not the alpha-1 set")
    pivot = max(i for i in range(1, h + 1) if tab.row_of(i + alpha) <= tab.row_of(alpha))
    return PivotQ(pivot)


def compute_p(tab: StandardTableau, h: int, alpha: int) -> PivotP:
    """Smallest 0 <= i <= h-1 with row(h+alpha) <= row(i+alpha)."""
    _check_params(tab.size, h, alpha)
    if not satisfies_condition(tab, h, alpha - 1) or satisfies_condition(tab, h, alpha):
        raise NotInDomain("pivot p needs a tableau in the alpha-1 set but not the alpha set")
    pivot = min(i for i in range(h) if tab.row_of(h + alpha) <= tab.row_of(i + alpha))
    return PivotP(pivot)


def down_map(tab: StandardTableau, h: int, alpha: int) -> StandardTableau:
    """Send a tableau of the alpha-restricted set to the (alpha-1)-restricted set."""
    _check_params(tab.size, h, alpha)
    if not satisfies_condition(tab, h, alpha):
        raise NotInSourceSet(f"tableau fails the (h={h}, alpha={alpha})-condition")
    if satisfies_condition(tab, h, alpha - 1):
        return tab
    q = compute_q(tab, h, alpha).value

    cell_of: dict[int, Cell] = {}
    for m in range(1, tab.size + 1):
        if m <= alpha - 1 or m >= h + 1 + alpha:
            cell_of[m] = tab.cell_of(m)
        elif alpha <= m <= q - 2 + alpha or q + alpha <= m <= h - 1 + alpha:
            cell_of[m] = tab.cell_of(m + 1)
        elif m == q - 1 + alpha:
            cell_of[m] = tab.cell_of(alpha)
        else:  # m == h + alpha
            cell_of[m] = tab.cell_of(q + alpha)
    return StandardTableau.from_cells(tab.shape, cell_of)


def up_map(tab: StandardTableau, h: int, alpha: int) -> StandardTableau:
    """Send a tableau of the (alpha-1)-restricted set to the alpha-restricted set."""
    _check_params(tab.size, h, alpha)
    if not satisfies_condition(tab, h, alpha - 1):
        raise NotInSourceSet(f"tableau fails the (h={h}, alpha={alpha - 1})-condition")
    if satisfies_condition(tab, h, alpha):
        return tab
    p = compute_p(tab, h, alpha).value

    cell_of: dict[int, Cell] = {}
    for m in range(1, tab.size + 1):
        if m <= alpha - 1 or m >= h + 1 + alpha:
            cell_of[m] = tab.cell_of(m)
        elif 1 + alpha <= m <= p + alpha or p + 2 + alpha <= m <= h + alpha:
            cell_of[m] = tab.cell_of(m - 1)
        elif m == p + 1 + alpha:
            cell_of[m] = tab.cell_of(h + alpha)
        else:  # m == alpha
            cell_of[m] = tab.cell_of(p + alpha)
    return StandardTableau.from_cells(tab.shape, cell_of)


def chain_to_alpha(tab: StandardTableau, h: int, from_alpha: int, to_alpha: int) -> StandardTableau:
    """Compose single steps to move between arbitrary alpha values."""
    current = tab
    alpha = from_alpha
    while alpha > to_alpha:
        current = down_map(current, h, alpha)
        alpha -= 1
    while alpha < to_alpha:
        current = up_map(current, h, alpha + 1)
        alpha += 1
    return current
