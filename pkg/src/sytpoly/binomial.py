"""Binomial-basis expansions of the first-row-stabilized dimension polynomial.

For a partition lam of k, the count of standard tableaux on the shape obtained
by prepending a first row of length n-k is a degree-k polynomial in n.  This
module expands it exactly over the binomial basis and exposes the positive
alternating-sign coefficients a_0..a_len(lam).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import NegativeOrder, IntegralityViolation, VanishingViolation
from .partitions import Partition, prepend_row
from .tableaux import dimension_hook


def binomial(n: int, h: int) -> int:
    """The binomial polynomial at an arbitrary integer.

    For negative n this uses the reflection binom(n,h) = (-1)^h binom(h-1-n, h).
    """
    if h < 0:
        raise NegativeOrder(f"order must be non-negative: {h}")
    if n >= 0:
        return comb(n, h)
    return (-1) ** h * comb(h - 1 - n, h)


@dataclass(frozen=True)
class BinomialPolynomial:
    """Exact integer coefficients b_0..b_k over the basis binom(x, h)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, n: int) -> int:
        return sum(b * binomial(n, h) for h, b in enumerate(self.coeffs))

    def to_json_dict(self) -> dict:
        return {"b": list(self.coeffs)}


def evaluate(poly: BinomialPolynomial, n: int) -> int:
    return poly(n)


@dataclass(frozen=True)
class CoefficientVector:
    """The positive coefficients a_0..a_len(lam) of the alternating expansion."""

    lam: Partition
    a: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"lambda": list(self.lam.parts), "a": list(self.a)}


def eval_f_large(lam: Partition, n: int) -> int:
    """Tableau count of the shape with a prepended first row of length n-k."""
    return dimension_hook(prepend_row(lam, n))


@lru_cache(maxsize=None)
def fit_binomial_coefficients(lam: Partition) -> BinomialPolynomial:
    """Binomial-basis coefficients of the dimension polynomial of lam.

    Samples k+1 consecutive values starting at M = k + lam_1, forms the forward
    difference table, and back-substitutes through the unit-triangular system
    diff^h p(M) = sum_{j >= h} b_j * binom(M, j - h).  Integer arithmetic only.
    """
    k = lam.weight
    first = lam.parts[0] if lam.parts else 0
    base = k + first
    values = [eval_f_large(lam, n) for n in range(base, base + k + 1)]

    diffs = [values[0]]
    level = values
    for _ in range(k):
        level = [b - a for a, b in zip(level, level[1:])]
        diffs.append(level[0])

    b = [0] * (k + 1)
    for h in range(k, -1, -1):
        b[h] = diffs[h] - sum(b[j] * binomial(base, j - h) for j in range(h + 1, k + 1))

    poly = BinomialPolynomial(tuple(b))
    for offset, value in enumerate(values):
        if poly(base + offset) != value:
            raise IntegralityViolation(f"fit does not reproduce samples for {lam.parts}")
    if any(b[h] != 0 for h in range(k - lam.length)):
        raise VanishingViolation(f"low coefficients of {lam.parts} do not vanish")
    return poly


def a_coefficients(lam: Partition) -> CoefficientVector:
    """The signed extraction a_h = (-1)^h b_(k-h), for h up to len(lam).

    This sign makes the expansion read sum_h (-1)^h a_h binom(n, k-h) with
    every a_h positive, which is the only convention consistent with the
    all-ones column-partition values.
    """
    k = lam.weight
    b = fit_binomial_coefficients(lam).coeffs
    a = tuple((-1) ** h * b[k - h] for h in range(lam.length + 1))
    if any(x <= 0 for x in a):
        raise VanishingViolation(f"a-coefficients of {lam.parts} not all positive: {a}")
    return CoefficientVector(lam, a)


def dimension_via_mu_identity(lam: Partition) -> int:
    """Tableau count of lam recovered from the coefficients of its tail.

    With mu the partition dropping the first part and m its weight, this is
    sum_h (-1)^h a_{mu,h} * binom(k, m - h).  The binomial index m - h comes
    from specializing the alternating expansion of mu at n = k.
    """
    if lam.length < 1:
        raise ValueError("requires at least one part")
    k = lam.weight
    mu = Partition(lam.parts[1:])
    m = mu.weight
    a = a_coefficients(mu).a
    return sum((-1) ** h * a[h] * binomial(k, m - h) for h in range(len(a)))
