"""Coset-decomposition bookkeeping for sl2-hat tensor products.

Decomposes V(lambda_{l-1;n}) (x) V(omega_eps) into summands
V(lambda_{l;j}) (x) L_{c_l, h}, and checks the combinatorial shape:
the j-indices partition a parity class, labels are canonical,
grade offsets (depths) are non-negative integers, and summands are
multiplicity-free.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weights import MinimalLabel, canonicalize, highest_weight


@dataclass(frozen=True)
class AffineWeight:
    """Level-l dominant integral weight (l-n) w0 + n w1."""

    level: int
    n: int

    def __post_init__(self):
        if not (0 <= self.n <= self.level):
            raise ValueError("index out of range for the level")


def sugawara_weight(k: int, n: int) -> Fraction:
    """Conformal weight n(n+2)/(4(k+2)) of the level-k module with index n."""
    AffineWeight(k, n)
    return Fraction(n * (n + 2), 4 * (k + 2))


@dataclass(frozen=True)
class CosetSummand:
    j: int
    label: MinimalLabel
    branch: str  # "first" | "second"
    depth: Fraction


def gko_summands(ell: int, n: int, eps: int) -> list[CosetSummand]:
    """Summands of V(lambda_{l-1;n}) (x) V(omega_eps).

    First branch: j in [0, n], j = n+eps (mod 2), label (n+1, j+1).
    Second branch: j in [n+1, l], same parity, label (l-n, l+1-j).
    Depth is the L0 offset of the summand's top vector inside the product.
    """
    if ell < 2 or not (0 <= n <= ell - 1) or eps not in (0, 1):
        raise ValueError("index out of range")
    base = sugawara_weight(ell - 1, n) + sugawara_weight(1, eps)
    out = []
    for j in range(0, ell + 1):
        if (j - n - eps) % 2:
            continue
        if j <= n:
            label = canonicalize(ell, n + 1, j + 1)
            branch = "first"
        else:
            label = canonicalize(ell, ell - n, ell + 1 - j)
            branch = "second"
        h = highest_weight(ell, label.m, label.n)
        depth = sugawara_weight(ell, j) + h - base
        out.append(CosetSummand(j, label, branch, depth))
    return out


@dataclass(frozen=True)
class GkoReport:
    ell: int
    index_partition_ok: bool
    labels_canonical_ok: bool
    depths_ok: bool
    multiplicity_free_ok: bool
    total_count: int

    @property
    def passed(self) -> bool:
        return (
            self.index_partition_ok
            and self.labels_canonical_ok
            and self.depths_ok
            and self.multiplicity_free_ok
            and self.total_count == self.ell * (self.ell + 1)
        )


def gko_verify(ell: int) -> GkoReport:
    """Structural checks of the decomposition over every (n, eps) cell."""
    part_ok = labels_ok = depths_ok = mult_ok = True
    total = 0
    for n in range(ell):
        for eps in (0, 1):
            summands = gko_summands(ell, n, eps)
            total += len(summands)
            expected_js = {j for j in range(ell + 1) if (j - n - eps) % 2 == 0}
            js = [s.j for s in summands]
            if sorted(js) != sorted(expected_js) or len(set(js)) != len(js):
                part_ok = False
            if any(not s.label.is_canonical for s in summands):
                labels_ok = False
            if any(s.depth < 0 or s.depth.denominator != 1 for s in summands):
                depths_ok = False
            if len({(s.j, s.label) for s in summands}) != len(summands):
                mult_ok = False
    return GkoReport(ell, part_ok, labels_ok, depths_ok, mult_ok, total)


@dataclass(frozen=True)
class Table1Row:
    ell: int
    p_max_known: int
    bound: int

    @property
    def consistent(self) -> bool:
        return self.p_max_known < self.bound


# Maximal known primes with a reducible level-l Weyl module, per the
# published table; checked against the bound 2l^2+l-3.
TABLE1_DATA = ((2, 3), (3, 13), (4, 11), (5, 23), (6, 37), (7, 47), (8, 53))


def table1_check() -> list[Table1Row]:
    return [Table1Row(ell, p, 2 * ell * ell + ell - 3) for ell, p in TABLE1_DATA]
